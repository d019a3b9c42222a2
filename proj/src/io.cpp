#include "thetalab/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace theta {

json partition_json(const Partition& p) { return json(p); }

json bipartition_json(const Bipartition& b) {
  return json{{"alpha", b.first}, {"beta", b.second}};
}

json diagram_json(const DecBipartition& g) {
  json out = json::array();
  for (auto& pr : g.pairs) {
    const char* d = pr.dec == Dec::none ? "0" : (pr.dec == Dec::plus ? "+" : "-");
    out.push_back(json::array({pr.x, pr.y, d}));
  }
  return out;
}

json quintuple_json(const Quintuple& q) {
  return json{{"gamma", diagram_json(q.gamma)},
              {"gamma1", q.g_orth},
              {"gens1", sign_group_orthogonal(q.g_orth).gens},
              {"chi1", q.chi_orth},
              {"gamma2", q.g_symp},
              {"gens2", sign_group_symplectic(q.g_symp).gens},
              {"chi2", q.chi_symp}};
}

json label_json(const Label& l) {
  json out = json::array();
  for (auto& [s, t] : l.arcs) out.push_back(json::array({s, t}));
  return out;
}

json laurent_json(const Laurent& p) {
  json out = json::object();
  for (auto& [e, c] : p.c) out[std::to_string(e)] = c;
  return out;
}

Laurent laurent_from_json(const json& j) {
  Laurent p;
  for (auto& [k, v] : j.items())
    p += Laurent::mono(v.get<long long>(), std::stoi(k));
  return p;
}

json modvec_json(const ModelTables& t, const ModVec& x) {
  json out = json::object();
  for (auto& [id, c] : x.c) out[t.labels[id].str()] = laurent_json(c);
  return out;
}

std::string model_name(const OrbitModel& mod) {
  switch (mod.kind) {
    case ModelKind::TypeII: return "typeII";
    case ModelKind::TypeI_M1: return "typeI-m1";
    default: return "typeI-m2";
  }
}

OrbitModel model_by_name(const std::string& name, int m, int n) {
  if (name == "typeII") return OrbitModel::type2(m, n);
  if (name == "typeI-m1") return OrbitModel::type1_model1(m, n);
  if (name == "typeI-m2") return OrbitModel::type1_model2(n, m);
  throw std::invalid_argument("unknown model: " + name);
}

namespace {

// (m, n) as presented on the command line: the second signed model swaps them
std::pair<int, int> model_mn(const OrbitModel& mod) {
  if (mod.kind == ModelKind::TypeI_M2) return {mod.tgt_rank, mod.src_rank};
  return {mod.src_rank, mod.tgt_rank};
}

}  // namespace

json tables_json(const ModelTables& t) {
  auto [m, n] = model_mn(t.mod);
  json labels = json::array();
  for (size_t i = 0; i < t.labels.size(); i++) {
    json types = json::object();
    for (size_t g = 0; g < t.gens.size(); g++)
      types[t.gens[g].name] = std::string(1, local_type_char(t.type_of[g][i]));
    std::vector<std::string> desc;
    for (int g : t.descents[i]) desc.push_back(t.gens[g].name);
    labels.push_back(json{{"label", t.labels[i].str()},
                          {"arcs", label_json(t.labels[i])},
                          {"dim", t.dim[i]},
                          {"types", types},
                          {"descents", desc}});
  }
  std::vector<std::string> gens;
  for (auto& g : t.gens) gens.push_back(g.name);
  return json{{"model", model_name(t.mod)}, {"m", m}, {"n", n},
              {"generators", gens}, {"labels", labels}};
}

json kl_json(const KLTable& kl) {
  const ModelTables& t = kl.t;
  auto [m, n] = model_mn(t.mod);
  json basis = json::object();
  json dims = json::object();
  for (size_t s = 0; s < t.labels.size(); s++) {
    basis[t.labels[s].str()] = modvec_json(t, kl.cbasis[s]);
    dims[t.labels[s].str()] = t.dim[s];
  }
  return json{{"model", model_name(t.mod)}, {"m", m}, {"n", n},
              {"dims", dims}, {"cbasis", basis}};
}

KLTable kl_from_json(const json& j) {
  OrbitModel mod = model_by_name(j.at("model").get<std::string>(),
                                 j.at("m").get<int>(), j.at("n").get<int>());
  ModelTables t = build_tables(mod);
  KLTable kl;
  kl.t = t;
  const json& dims = j.at("dims");
  const json& basis = j.at("cbasis");
  if (dims.size() != t.labels.size() || basis.size() != t.labels.size())
    throw std::invalid_argument("stored table has the wrong label set");
  kl.cbasis.resize(t.labels.size());
  for (size_t s = 0; s < t.labels.size(); s++) {
    const std::string key = t.labels[s].str();
    if (!dims.contains(key) || dims.at(key).get<long long>() != t.dim[s])
      throw std::invalid_argument("stored dimensions differ at " + key);
    ModVec x;
    for (auto& [lab, poly] : basis.at(key).items())
      x.add(t.id(Label::parse(lab)), laurent_from_json(poly));
    kl.cbasis[s] = x;
  }
  return kl;
}

json wgraph_json(const ModelTables& t, const WGraph& g) {
  json vertices = json::array();
  for (size_t i = 0; i < t.labels.size(); i++) {
    std::vector<std::string> desc;
    for (int s : t.descents[i]) desc.push_back(t.gens[s].name);
    vertices.push_back(json{{"label", t.labels[i].str()}, {"descents", desc}});
  }
  json edges = json::array();
  for (auto& e : g.edges)
    edges.push_back(json{{"from", t.labels[e.from].str()},
                         {"to", t.labels[e.to].str()},
                         {"mu", e.mu}});
  json cells = json::array();
  for (auto& c : g.cells) {
    std::vector<std::string> labs;
    for (int i : c) labs.push_back(t.labels[i].str());
    cells.push_back(labs);
  }
  return json{{"vertices", vertices}, {"edges", edges}, {"cells", cells}};
}

json glued_json(const GluedTables& g) {
  json vertices = json::array();
  for (size_t i = 0; i < g.t1.labels.size(); i++) {
    std::vector<std::string> desc;
    for (int s : g.descents[i]) desc.push_back(g.gen_names[s]);
    vertices.push_back(json{{"label", g.t1.labels[i].str()},
                            {"partner", g.t2.labels[g.phi[i]].str()},
                            {"flip", g.t1.labels[g.iota[i]].str()},
                            {"descents", desc}});
  }
  json edges = json::array();
  for (auto& e : g.edges)
    edges.push_back(json{{"from", g.t1.labels[e.from].str()},
                         {"to", g.t1.labels[e.to].str()},
                         {"mu", e.mu}});
  json cells = json::array();
  for (auto& c : g.cells) {
    std::vector<std::string> labs;
    for (int i : c) labs.push_back(g.t1.labels[i].str());
    cells.push_back(labs);
  }
  return json{{"m", g.m}, {"n", g.n}, {"generators", g.gen_names},
              {"vertices", vertices}, {"edges", edges}, {"cells", cells}};
}

json check_results_json(const std::string& suite, const std::vector<CheckResult>& rs) {
  json checks = json::array();
  bool pass = true;
  for (auto& r : rs) {
    checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    pass = pass && r.pass;
  }
  return json{{"suite", suite}, {"pass", pass}, {"checks", checks}};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string descent_text(const std::vector<std::string>& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); i++) out += (i ? "," : "") + names[i];
  return out + "}";
}

}  // namespace

std::string wgraph_dot(const ModelTables& t, const WGraph& g) {
  std::ostringstream os;
  os << "digraph wgraph {\n  node [shape=box];\n";
  for (size_t i = 0; i < t.labels.size(); i++) {
    std::vector<std::string> desc;
    for (int s : t.descents[i]) desc.push_back(t.gens[s].name);
    os << "  \"" << dot_escape(t.labels[i].str()) << "\" [label=\""
       << dot_escape(t.labels[i].str()) << "\\n" << descent_text(desc) << "\"];\n";
  }
  for (auto& e : g.edges)
    os << "  \"" << dot_escape(t.labels[e.from].str()) << "\" -> \""
       << dot_escape(t.labels[e.to].str()) << "\" [label=\"" << e.mu << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string glued_dot(const GluedTables& g) {
  std::ostringstream os;
  os << "digraph glued {\n  node [shape=box];\n";
  for (size_t i = 0; i < g.t1.labels.size(); i++) {
    std::vector<std::string> desc;
    for (int s : g.descents[i]) desc.push_back(g.gen_names[s]);
    os << "  \"" << dot_escape(g.t1.labels[i].str()) << "\" [label=\""
       << dot_escape(g.t1.labels[i].str()) << "\\n" << descent_text(desc) << "\"];\n";
  }
  for (auto& e : g.edges)
    os << "  \"" << dot_escape(g.t1.labels[e.from].str()) << "\" -> \""
       << dot_escape(g.t1.labels[e.to].str()) << "\" [label=\"" << e.mu << "\"];\n";
  for (size_t i = 0; i < g.iota.size(); i++)
    if ((int)i < g.iota[i])
      os << "  \"" << dot_escape(g.t1.labels[i].str()) << "\" -> \""
         << dot_escape(g.t1.labels[g.iota[i]].str())
         << "\" [dir=both, style=dashed, label=\"flip\"];\n";
  os << "}\n";
  return os.str();
}

std::optional<std::string> cache_dir() {
  const char* dir = std::getenv("THETA_LAB_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

std::optional<json> cache_load(const std::string& key) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(*dir + "/" + key + ".json");
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;  // a corrupt entry is treated as a miss
  }
}

bool cache_store(const std::string& key, const json& j) {
  auto dir = cache_dir();
  if (!dir) return false;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  std::ofstream out(*dir + "/" + key + ".json");
  if (!out) return false;
  out << j.dump(1) << "\n";
  return out.good();
}

KLTable kl_cached(const OrbitModel& mod) {
  auto [m, n] = model_mn(mod);
  std::string key = "kl-" + model_name(mod) + "-" + std::to_string(m) + "x" +
                    std::to_string(n);
  if (auto stored = cache_load(key)) {
    try {
      return kl_from_json(*stored);
    } catch (const std::exception&) {
      // stale or inconsistent entry: fall through and recompute
    }
  }
  KLTable kl = build_kl(build_tables(mod));
  cache_store(key, kl_json(kl));
  return kl;
}

}  // namespace theta
