// thetalab: enumeration, module actions, canonical bases, orbit transforms,
// character-level correspondence reports and the verification suites, in one
// command-line tool.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "thetalab/hecke.hpp"
#include "thetalab/io.hpp"
#include "thetalab/oracle.hpp"
#include "thetalab/verify.hpp"

namespace {

using namespace theta;

struct CommonArgs {
  std::string model = "typeII";
  int m = 1;
  int n = 1;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_model = true) {
  if (with_model)
    cmd->add_option("--model", a.model, "orbit model: typeII, typeI-m1, typeI-m2")
        ->check(CLI::IsMember({"typeII", "typeI-m1", "typeI-m2"}));
  cmd->add_option("--m", a.m, "first rank")->required();
  cmd->add_option("--n", a.n, "second rank")->required();
  cmd->add_flag("--json", a.as_json, "emit JSON instead of text");
}

std::string poly_text(const Laurent& p, std::optional<long long> q) {
  if (q) return std::to_string(p.eval_v2(*q));
  return p.str();
}

int cmd_enumerate(const CommonArgs& a, int max_rank) {
  ModelTables t = build_tables(model_by_name(a.model, a.m, a.n));
  if (a.as_json) {
    json out = tables_json(t);
    if (max_rank >= 0) {
      json filtered = json::array();
      for (auto& lab : out["labels"])
        if ((int)lab["arcs"].size() <= max_rank) filtered.push_back(lab);
      out["labels"] = filtered;
    }
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  for (size_t i = 0; i < t.labels.size(); i++) {
    if (max_rank >= 0 && (int)t.labels[i].arcs.size() > max_rank) continue;
    std::cout << t.labels[i].str() << "  dim " << t.dim[i] << "\n";
  }
  return 0;
}

int cmd_classify(const CommonArgs& a) {
  ModelTables t = build_tables(model_by_name(a.model, a.m, a.n));
  if (a.as_json) {
    std::cout << tables_json(t).dump(1) << "\n";
    return 0;
  }
  for (size_t i = 0; i < t.labels.size(); i++) {
    std::cout << t.labels[i].str() << "  dim " << t.dim[i] << "  ";
    for (size_t g = 0; g < t.gens.size(); g++)
      std::cout << (g ? " " : "") << t.gens[g].name << ":"
                << local_type_char(t.type_of[g][i]);
    std::cout << "  descents ";
    bool first = true;
    std::cout << "{";
    for (int g : t.descents[i]) {
      std::cout << (first ? "" : ",") << t.gens[g].name;
      first = false;
    }
    std::cout << "}\n";
  }
  return 0;
}

int cmd_act(const CommonArgs& a, const std::string& gen_name, const std::string& label_text,
            std::optional<long long> q) {
  ModelTables t = build_tables(model_by_name(a.model, a.m, a.n));
  int gen = -1;
  for (size_t g = 0; g < t.gens.size(); g++)
    if (t.gens[g].name == gen_name) gen = (int)g;
  if (gen < 0) {
    std::cerr << "unknown generator " << gen_name << "; available:";
    for (auto& g : t.gens) std::cerr << " " << g.name;
    std::cerr << "\n";
    return 2;
  }
  Label lab = Label::parse(label_text);
  if (!t.index.count(lab)) {
    std::cerr << "unknown orbit label " << label_text << "\n";
    return 2;
  }
  ModVec out = act_Ts(t, gen, ModVec::unit(t.id(lab)));
  if (a.as_json) {
    std::cout << json{{"model", model_name(t.mod)},
                      {"generator", gen_name},
                      {"label", lab.str()},
                      {"result", modvec_json(t, out)}}
                     .dump(1)
              << "\n";
    return 0;
  }
  for (auto& [id, c] : out.c)
    std::cout << "(" << poly_text(c, q) << ") * [" << t.labels[id].str() << "]\n";
  return 0;
}

int cmd_kl(const CommonArgs& a, std::optional<long long> q) {
  KLTable kl = kl_cached(model_by_name(a.model, a.m, a.n));
  const ModelTables& t = kl.t;
  if (a.as_json) {
    std::cout << kl_json(kl).dump(1) << "\n";
    return 0;
  }
  for (size_t s = 0; s < t.labels.size(); s++) {
    std::cout << t.labels[s].str() << "  dim " << t.dim[s] << "\n";
    for (size_t b = 0; b < t.labels.size(); b++) {
      if (!kl.closure_leq((int)b, (int)s)) continue;
      std::cout << "  P[" << t.labels[b].str() << "] = "
                << poly_text(kl.poly((int)b, (int)s), q) << "\n";
    }
  }
  return 0;
}

int cmd_wgraph(const CommonArgs& a, bool glued, const std::string& dot_path) {
  std::string dot_text;
  json out;
  if (glued) {
    GluedTables g = build_glued(a.m, a.n);
    out = glued_json(g);
    dot_text = glued_dot(g);
  } else {
    ModelTables t = build_tables(model_by_name(a.model, a.m, a.n));
    KLTable kl = build_kl(t);
    WGraph g = build_wgraph(t, kl);
    out = wgraph_json(t, g);
    dot_text = wgraph_dot(t, g);
  }
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) {
      std::cerr << "cannot write " << dot_path << "\n";
      return 2;
    }
    f << dot_text;
  }
  if (a.as_json) {
    std::cout << out.dump(1) << "\n";
  } else {
    for (auto& e : out["edges"])
      std::cout << e["from"].get<std::string>() << " -> " << e["to"].get<std::string>()
                << "  mu " << e["mu"] << "\n";
    std::cout << "cells:";
    for (auto& c : out["cells"]) {
      std::cout << " {";
      for (size_t i = 0; i < c.size(); i++)
        std::cout << (i ? ", " : "") << c[i].get<std::string>();
      std::cout << "}";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_fourier(const std::string& which, const CommonArgs& a, uint64_t seed, int samples) {
  TransformOptions opts;
  if (seed != 0) opts.seed = seed;
  if (samples > 0) opts.samples = samples;
  OrbitModel domain = which == "psi" ? OrbitModel::type2(a.m, a.n)
                                     : OrbitModel::type1_model1(a.m, a.n);
  json rows = json::array();
  for (auto& lab : domain.enumerate()) {
    Label out = which == "psi"   ? psi_transform(a.m, a.n, lab, opts)
                : which == "phi" ? phi_transform(a.m, a.n, lab, opts)
                                 : iota_transform(a.m, a.n, lab, opts);
    rows.push_back(json{{"from", lab.str()}, {"to", out.str()}});
    if (!a.as_json) std::cout << lab.str() << " -> " << out.str() << "\n";
  }
  if (a.as_json)
    std::cout << json{{"map", which}, {"m", a.m}, {"n", a.n}, {"table", rows}}.dump(1)
              << "\n";
  return 0;
}

int cmd_theta(const std::string& type, const CommonArgs& a) {
  if (type == "II") {
    json pairs = json::array();
    for (auto& mu1 : partitions_of(a.m))
      for (auto& mu2 : partitions_of(a.n)) {
        long long mult = pair_multiplicity(mu1, mu2);
        if (mult == 0) continue;
        pairs.push_back(json{{"mu1", mu1}, {"mu2", mu2}, {"multiplicity", mult}});
        if (!a.as_json) {
          auto ptext = [](const Partition& p) {
            std::string s = "[";
            for (size_t i = 0; i < p.size(); i++)
              s += (i ? "," : "") + std::to_string(p[i]);
            return s + "]";
          };
          std::cout << ptext(mu1) << " x " << ptext(mu2) << "  multiplicity " << mult
                    << "\n";
        }
      }
    if (a.as_json)
      std::cout << json{{"type", "II"}, {"m", a.m}, {"n", a.n}, {"pairs", pairs}}.dump(1)
                << "\n";
    return 0;
  }
  // signed correspondence: quintuples with their two character labels
  SpringerTable so = springer_orthogonal(a.m), ss = springer_symplectic(a.n);
  json rows = json::array();
  for (auto& quint : enumerate_rq(a.m, a.n)) {
    auto& r1 = so.row(quint.g_orth, quint.chi_orth);
    auto& r2 = ss.row(quint.g_symp, quint.chi_symp);
    json row = quintuple_json(quint);
    row["side1"] = r1 ? bipartition_json(*r1) : json(nullptr);
    row["side2"] = r2 ? bipartition_json(*r2) : json(nullptr);
    rows.push_back(row);
    if (!a.as_json) {
      auto btext = [](const std::optional<Bipartition>& b) {
        if (!b) return std::string("none");
        std::string s = "(";
        for (size_t i = 0; i < b->first.size(); i++)
          s += (i ? "," : "") + std::to_string(b->first[i]);
        s += ";";
        for (size_t i = 0; i < b->second.size(); i++)
          s += (i ? "," : "") + std::to_string(b->second[i]);
        return s + ")";
      };
      std::cout << quint.gamma.str() << "  " << btext(r1) << " (x) " << btext(r2) << "\n";
    }
  }
  if (a.as_json)
    std::cout << json{{"type", "I"}, {"m", a.m}, {"n", a.n}, {"quintuples", rows}}.dump(1)
              << "\n";
  return 0;
}

int cmd_verify(std::vector<std::string> suites, int threads, bool as_json) {
  if (suites.empty()) suites = suite_names();
  std::vector<std::vector<CheckResult>> results(suites.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < suites.size(); i = next.fetch_add(1))
      results[i] = run_suite(suites[i]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; i++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  bool all_pass = true;
  json report = json::array();
  for (size_t i = 0; i < suites.size(); i++) {
    report.push_back(check_results_json(suites[i], results[i]));
    for (auto& r : results[i]) {
      all_pass = all_pass && r.pass;
      if (!as_json) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << suites[i] << ": " << r.name;
        if (!r.pass) std::cout << " -- " << r.detail;
        std::cout << "\n";
      }
    }
  }
  if (as_json)
    std::cout << json{{"pass", all_pass}, {"suites", report}}.dump(1) << "\n";
  else
    std::cout << (all_pass ? "all checks passed" : "verification failed") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orbit combinatorics for the unipotent theta correspondence"};
  app.require_subcommand(1);

  CommonArgs en, cl, ac, kl, wg, fo, th;
  int max_rank = -1;
  std::string gen_name, label_text;
  long long q_value = 0;
  bool glued = false;
  std::string dot_path;
  uint64_t seed = 0;
  int samples = 0;
  std::string theta_type = "II";
  std::vector<std::string> suites;
  int threads = 1;
  bool verify_json = false;

  auto* c_en = app.add_subcommand("enumerate", "list the orbit labels with dimensions");
  add_common(c_en, en);
  c_en->add_option("--max-rank", max_rank, "keep labels with at most this many arcs");

  auto* c_cl = app.add_subcommand("classify", "per-generator local types and descents");
  add_common(c_cl, cl);

  auto* c_ac = app.add_subcommand("act", "apply one generator to an orbit indicator");
  add_common(c_ac, ac);
  c_ac->add_option("--gen", gen_name, "generator name, e.g. s1 or s'2")->required();
  c_ac->add_option("--label", label_text, "orbit label, e.g. \"1>-2, 2>1\" or {}")
      ->required();
  c_ac->add_option("--q", q_value, "evaluate coefficients at v^2 = q");

  auto* c_kl = app.add_subcommand("kl", "canonical basis and polynomial table");
  add_common(c_kl, kl);
  c_kl->add_option("--q", q_value, "evaluate polynomials at v^2 = q");

  auto* c_wg = app.add_subcommand("wgraph", "edges, leading coefficients and cells");
  add_common(c_wg, wg);
  c_wg->add_flag("--glued", glued, "use the glued structure over the two signed models");
  c_wg->add_option("--dot", dot_path, "also write a DOT rendering to this path");

  auto* c_fo = app.add_subcommand("fourier", "orbit transforms between the models");
  CLI::App* c_phi = c_fo->add_subcommand("phi", "signed model exchange table");
  CLI::App* c_psi = c_fo->add_subcommand("psi", "annihilator transform table");
  CLI::App* c_io = c_fo->add_subcommand("iota", "conjugated sign flip table");
  c_fo->require_subcommand(1);
  for (CLI::App* sub : {c_phi, c_psi, c_io}) {
    add_common(sub, fo, false);
    sub->add_option("--seed", seed, "sampling seed for the rank computations");
    sub->add_option("--samples", samples, "number of independent prime samples");
  }

  auto* c_th = app.add_subcommand("theta", "correspondence report");
  c_th->add_option("--type", theta_type, "dual pair family: II or I")
      ->check(CLI::IsMember({"II", "I"}));
  add_common(c_th, th, false);

  auto* c_ve = app.add_subcommand("verify", "run the verification suites");
  c_ve->add_option("--suite", suites, "suite names (default: all)");
  c_ve->add_option("--threads", threads, "run suites concurrently")
      ->check(CLI::PositiveNumber);
  c_ve->add_flag("--json", verify_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::optional<long long> q;
  if (q_value != 0) q = q_value;
  try {
    if (c_en->parsed()) return cmd_enumerate(en, max_rank);
    if (c_cl->parsed()) return cmd_classify(cl);
    if (c_ac->parsed()) return cmd_act(ac, gen_name, label_text, q);
    if (c_kl->parsed()) return cmd_kl(kl, q);
    if (c_wg->parsed()) return cmd_wgraph(wg, glued, dot_path);
    if (c_fo->parsed()) {
      std::string which = c_phi->parsed() ? "phi" : (c_psi->parsed() ? "psi" : "iota");
      return cmd_fourier(which, fo, seed, samples);
    }
    if (c_th->parsed()) return cmd_theta(theta_type, th);
    if (c_ve->parsed()) return cmd_verify(suites, threads, verify_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
