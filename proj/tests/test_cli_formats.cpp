#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "thetalab/io.hpp"

using namespace theta;

namespace {

struct CacheEnv {
  std::string dir;
  explicit CacheEnv(const std::string& d) : dir(d) {
    std::filesystem::create_directories(dir);
    setenv("THETA_LAB_CACHE", dir.c_str(), 1);
  }
  ~CacheEnv() {
    unsetenv("THETA_LAB_CACHE");
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
};

}  // namespace

TEST_SUITE("cli_formats") {

TEST_CASE("polynomial serialization round trip") {
  Laurent p = Laurent::mono(3, 2) + Laurent::v(-4) + Laurent(7);
  json j = laurent_json(p);
  CHECK(j["2"] == 3);
  CHECK(j["-4"] == 1);
  CHECK(j["0"] == 7);
  CHECK(laurent_from_json(j) == p);
  CHECK(laurent_from_json(laurent_json(Laurent())).is_zero());
}

TEST_CASE("label and diagram serialization") {
  Label l = Label::parse("1>-2, 3>1");
  json j = label_json(l);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0] == 1);
  CHECK(j[0][1] == -2);
  CHECK(j[1][0] == 3);
  CHECK(j[1][1] == 1);
  DecBipartition g;
  g.pairs = {{2, 2, Dec::plus}, {1, 2, Dec::none}};
  g.canonicalize();
  json d = diagram_json(g);
  REQUIRE(d.size() == 2);
  for (auto& row : d) {
    CHECK(row.size() == 3);
    CHECK(row[2].is_string());
  }
}

TEST_CASE("quintuple serialization aligns characters with generators") {
  for (auto& q : enumerate_rq(2, 2)) {
    json j = quintuple_json(q);
    CHECK(j["chi1"].size() == j["gens1"].size());
    CHECK(j["chi2"].size() == j["gens2"].size());
    CHECK(j.contains("gamma"));
    for (auto& v : j["chi1"]) CHECK((v == 1 || v == -1));
  }
}

TEST_CASE("model names") {
  for (const char* name : {"typeII", "typeI-m1", "typeI-m2"}) {
    OrbitModel mod = model_by_name(name, 2, 1);
    CHECK(model_name(mod) == name);
  }
  CHECK(model_by_name("typeI-m2", 2, 1).src_rank == 1);  // sources carry n
  CHECK(model_by_name("typeI-m2", 2, 1).tgt_rank == 2);
  CHECK_THROWS(model_by_name("typeIII", 1, 1));
}

TEST_CASE("table serialization") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 1));
  json j = tables_json(t);
  CHECK(j["model"] == "typeI-m1");
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 1);
  CHECK(j["labels"].size() == 5);
  for (auto& lab : j["labels"]) {
    CHECK(lab.contains("label"));
    CHECK(lab.contains("dim"));
    CHECK(lab.contains("types"));
    CHECK(lab.contains("descents"));
  }
}

TEST_CASE("canonical table serialization round trip") {
  for (const char* name : {"typeII", "typeI-m1"}) {
    KLTable kl = build_kl(build_tables(model_by_name(name, 2, 1)));
    json j = kl_json(kl);
    KLTable back = kl_from_json(j);
    REQUIRE(back.cbasis.size() == kl.cbasis.size());
    for (size_t s = 0; s < kl.cbasis.size(); s++) CHECK(back.cbasis[s] == kl.cbasis[s]);
    CHECK(back.t.labels == kl.t.labels);
  }
  json j = kl_json(build_kl(build_tables(OrbitModel::type2(2, 1))));
  j["dims"]["1>1"] = 99;  // tampered dimensions must be rejected
  CHECK_THROWS(kl_from_json(j));
}

TEST_CASE("graph serialization and rendering") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 1));
  KLTable kl = build_kl(t);
  WGraph g = build_wgraph(t, kl);
  json j = wgraph_json(t, g);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["edges"].size() == 5);
  CHECK(j["cells"].size() == 5);
  std::string dot = wgraph_dot(t, g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"2>1\" -> \"{}\" [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("\\n{s1}") != std::string::npos);  // descents on the vertex label

  GluedTables gl = build_glued(2, 1);
  std::string gdot = glued_dot(gl);
  CHECK(gdot.find("dir=both, style=dashed") != std::string::npos);
  json gj = glued_json(gl);
  CHECK(gj["generators"].size() == 3);
  CHECK(gj["edges"].size() == 6);
  for (auto& v : gj["vertices"]) {
    CHECK(v.contains("partner"));
    CHECK(v.contains("flip"));
  }
}

TEST_CASE("verification report shape") {
  std::vector<CheckResult> rs = {{"first", true, ""}, {"second", false, "broken"}};
  json j = check_results_json("demo", rs);
  CHECK(j["suite"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["detail"] == "broken");
}

TEST_CASE("cache directory round trip") {
  CHECK_FALSE(cache_dir().has_value());
  CacheEnv env((std::filesystem::temp_directory_path() / "thetalab-cache-test").string());
  REQUIRE(cache_dir().has_value());
  CHECK_FALSE(cache_load("missing-key").has_value());
  json payload = {{"hello", 42}};
  CHECK(cache_store("some-key", payload));
  auto back = cache_load("some-key");
  REQUIRE(back.has_value());
  CHECK((*back)["hello"] == 42);

  // the canonical-basis cache: first call computes and stores
  OrbitModel mod = OrbitModel::type2(2, 1);
  KLTable fresh = kl_cached(mod);
  CHECK(std::filesystem::exists(env.dir + "/kl-typeII-2x1.json"));
  KLTable again = kl_cached(mod);
  for (size_t s = 0; s < fresh.cbasis.size(); s++) CHECK(again.cbasis[s] == fresh.cbasis[s]);

  // corrupt entries fall back to recomputation
  {
    std::ofstream bad(env.dir + "/kl-typeII-2x1.json");
    bad << "{ not json";
  }
  KLTable recovered = kl_cached(mod);
  for (size_t s = 0; s < fresh.cbasis.size(); s++)
    CHECK(recovered.cbasis[s] == fresh.cbasis[s]);
}

TEST_CASE("cache is inert when unset") {
  unsetenv("THETA_LAB_CACHE");
  CHECK_FALSE(cache_dir().has_value());
  CHECK_FALSE(cache_store("key", json{{"a", 1}}));
  CHECK_FALSE(cache_load("key").has_value());
}

}  // TEST_SUITE
