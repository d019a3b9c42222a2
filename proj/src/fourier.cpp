#include "thetalab/fourier.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "thetalab/linalg.hpp"

namespace theta {

std::vector<SubsetPair> enumerate_pp(int m, int n) {
  std::vector<std::vector<std::vector<int>>> subs_m(m + 1), subs_n(n + 1);
  auto gen_subsets = [](int k, std::vector<std::vector<std::vector<int>>>& bysize) {
    for (size_t mask = 0; mask < (size_t(1) << k); mask++) {
      std::vector<int> s;
      for (int i = 0; i < k; i++)
        if (mask & (size_t(1) << i)) s.push_back(i + 1);
      bysize[s.size()].push_back(s);
    }
  };
  gen_subsets(m, subs_m);
  gen_subsets(n, subs_n);
  std::vector<SubsetPair> out;
  for (int k = 0; k <= std::min(m, n); k++)
    for (auto& I : subs_m[k])
      for (auto& J : subs_n[k]) out.push_back({I, J});
  std::sort(out.begin(), out.end());
  return out;
}

SubsetPair psi_bullet(int m, int n, const SubsetPair& ij) {
  std::set<int> I(ij.I.begin(), ij.I.end()), J(ij.J.begin(), ij.J.end());
  std::set<int> Q, P;
  for (int j : J)
    if (j + 1 <= n) Q.insert(j + 1);
  if (!I.count(1)) Q.insert(1);
  for (int i : I)
    if (i - 1 >= 1) P.insert(i - 1);
  if (!J.count(n)) P.insert(m);
  SubsetPair out;
  out.I.assign(Q.begin(), Q.end());
  out.J.assign(P.begin(), P.end());
  if (out.I.size() != out.J.size()) throw std::logic_error("subset transform size mismatch");
  return out;
}

Label stack_matching(int m, int n, const SubsetPair& ij) {
  (void)n;
  const auto& I = ij.I;
  const auto& J = ij.J;
  size_t k = I.size();
  Label lab;
  std::vector<int> stack;
  for (size_t p = 0; p < k; p++) {
    int from = (p == 0 ? 1 : J[p - 1] + 1);
    for (int y = from; y <= J[p]; y++) stack.push_back(y);
    int next_i = (p + 1 < k ? I[p + 1] : m + 1);
    for (int x = I[p]; x < next_i; x++) {
      if (stack.empty()) break;
      int y = stack.back();
      stack.pop_back();
      lab.arcs.push_back({x, y});
    }
  }
  lab.canonicalize();
  return lab;
}

// ---------------------------------------------------------------------------

Label identify_orbit_by_ranks(int src_rank, int tgt_rank,
                              const std::vector<std::vector<uint64_t>>& mat, uint64_t p) {
  FpContext F(p);
  // r[i][j] = rank of the submatrix with rows >= i (1-based) and cols <= j
  std::vector<std::vector<int>> r(tgt_rank + 2, std::vector<int>(src_rank + 1, 0));
  for (int i = 1; i <= tgt_rank + 1; i++)
    for (int j = 0; j <= src_rank; j++) {
      FpMat sub;
      for (int row = i; row <= tgt_rank; row++)
        sub.push_back(std::vector<uint64_t>(mat[row - 1].begin(), mat[row - 1].begin() + j));
      r[i][j] = sub.empty() || j == 0 ? 0 : fp_rank(F, sub);
    }
  Label lab;
  for (int t = 1; t <= tgt_rank; t++)
    for (int a = 1; a <= src_rank; a++) {
      int delta = r[t][a] - r[t + 1][a] - r[t][a - 1] + r[t + 1][a - 1];
      if (delta == 1) lab.arcs.push_back({a, t});
      else if (delta != 0)
        throw std::logic_error("corner ranks do not describe a matching");
    }
  lab.canonicalize();
  return lab;
}

std::vector<std::vector<uint64_t>> conormal_basis(int m, int n, const Label& sigma,
                                                  uint64_t p) {
  FpContext F(p);
  OrbitModel mod = OrbitModel::type2(m, n);
  auto x = representative_matrix(mod, sigma);  // n rows, m cols
  // tangent vectors of the two triangular actions, flattened n*m
  std::vector<std::vector<long long>> tangents;
  for (auto& a1 : borel_basis_source(mod)) {
    std::vector<long long> flat(n * m, 0);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < m; j++) {
        long long v = 0;
        for (int k = 0; k < m; k++) v -= x[i][k] * a1[k][j];
        flat[i * m + j] = v;
      }
    tangents.push_back(flat);
  }
  for (auto& a2 : borel_basis_target(mod)) {
    std::vector<long long> flat(n * m, 0);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < m; j++) {
        long long v = 0;
        for (int k = 0; k < n; k++) v += a2[i][k] * x[k][j];
        flat[i * m + j] = v;
      }
    tangents.push_back(flat);
  }
  // a conormal vector y (m x n, flattened y[a][b] -> a*n+b) satisfies
  // sum_{a,b} y[a][b] * t[b][a] = 0 for every tangent t
  FpMat constraints;
  for (auto& t : tangents) {
    std::vector<uint64_t> row(m * n, 0);
    for (int a = 0; a < m; a++)
      for (int b = 0; b < n; b++) row[a * n + b] = F.from_int(t[b * m + a]);
    constraints.push_back(row);
  }
  if (constraints.empty()) constraints.push_back(std::vector<uint64_t>(m * n, 0));
  if (m * n == 0) return {};
  return fp_nullspace(F, constraints);
}

static uint64_t label_fingerprint(const Label& lab) {
  uint64_t h = 1469598103934665603ull;
  for (auto& [s, t] : lab.arcs) {
    h ^= (uint64_t)(s * 1000003LL + t + 500000LL);
    h *= 1099511628211ull;
  }
  return h;
}

static const uint64_t kPrimeLadder[] = {10007, 100003, 1000003};

Label psi_transform(int m, int n, const Label& sigma, const TransformOptions& opt) {
  if (m == 0 || n == 0) return Label{};
  for (uint64_t p : kPrimeLadder) {
    FpContext F(p);
    auto basis = conormal_basis(m, n, sigma, p);
    std::mt19937_64 rng(opt.seed ^ label_fingerprint(sigma) ^
                        (uint64_t)(m * 1009 + n * 9176));
    std::uniform_int_distribution<uint64_t> dist(0, p - 1);
    bool agree = true;
    Label answer;
    for (int s = 0; s < opt.samples; s++) {
      std::vector<uint64_t> y(m * n, 0);
      for (auto& b : basis) {
        uint64_t coef = dist(rng);
        for (size_t i = 0; i < y.size(); i++) y[i] = F.add(y[i], F.mul(coef, b[i]));
      }
      // reshape to the swapped model's representative shape: m rows (targets)
      // by n columns (sources)
      std::vector<std::vector<uint64_t>> mat(m, std::vector<uint64_t>(n));
      for (int a = 0; a < m; a++)
        for (int b = 0; b < n; b++) mat[a][b] = y[a * n + b];
      Label found = identify_orbit_by_ranks(n, m, mat, p);
      if (s == 0)
        answer = found;
      else if (!(found == answer)) {
        agree = false;
        break;
      }
    }
    if (agree) return answer;
  }
  throw std::runtime_error("transform samples never stabilized on the prime ladder");
}

Label phi_transform(int m, int n, const Label& sigma, const TransformOptions& opt) {
  // split the arcs into the positively and negatively matched parts
  std::vector<int> I2, J2;  // negatively matched sources and |targets|
  std::vector<std::pair<int, int>> pos_arcs, neg_arcs;
  for (auto& [s, t] : sigma.arcs) {
    if (t > 0) {
      pos_arcs.push_back({s, t});
    } else {
      neg_arcs.push_back({s, t});
      I2.push_back(s);
      J2.push_back(-t);
    }
  }
  // complement slots hosting the positive part
  std::vector<int> S1, S2;
  for (int i = 1; i <= m; i++)
    if (std::find(I2.begin(), I2.end(), i) == I2.end()) S1.push_back(i);
  for (int j = 1; j <= n; j++)
    if (std::find(J2.begin(), J2.end(), j) == J2.end()) S2.push_back(j);
  auto pos_of = [](const std::vector<int>& v, int x) {
    return (int)(std::lower_bound(v.begin(), v.end(), x) - v.begin()) + 1;
  };
  Label tau;
  for (auto& [s, t] : pos_arcs) tau.arcs.push_back({pos_of(S1, s), pos_of(S2, t)});
  tau.canonicalize();
  Label nu = psi_transform((int)S1.size(), (int)S2.size(), tau, opt);
  // assemble on the swapped ranks: sources [n], targets +-[m]
  Label out;
  for (auto& [q, p_] : nu.arcs) out.arcs.push_back({S2[q - 1], S1[p_ - 1]});
  for (auto& [s, t] : neg_arcs) out.arcs.push_back({-t, -s});  // j -> -i
  out.canonicalize();
  return out;
}

Label iota_transform(int m, int n, const Label& sigma, const TransformOptions& opt) {
  Label image = phi_transform(m, n, sigma, opt);
  // flip the sign of target m on the swapped side
  OrbitModel mod2 = OrbitModel::type1_model2(n, m);
  Label flipped = mod2.flip_last_target(image);
  // invert phi by searching the (small) label set
  OrbitModel mod1 = OrbitModel::type1_model1(m, n);
  for (auto& cand : mod1.enumerate())
    if (phi_transform(m, n, cand, opt) == flipped) return cand;
  throw std::logic_error("sign-flip transform fell outside the image");
}

// ---------------------------------------------------------------------------

int GluedTables::gen_id(const std::string& name) const {
  for (size_t i = 0; i < gen_names.size(); i++)
    if (gen_names[i] == name) return (int)i;
  throw std::invalid_argument("unknown combined generator " + name);
}

static std::vector<std::vector<Laurent>> structure_constants(const ModelTables& t,
                                                             const KLTable& kl, int gen) {
  size_t L = t.labels.size();
  std::vector<std::vector<Laurent>> mat(L, std::vector<Laurent>(L));
  for (size_t s = 0; s < L; s++) {
    auto col = kl.in_cbasis(act_Ts(t, gen, kl.cbasis[s]));
    for (size_t r = 0; r < L; r++) mat[r][s] = col[r];
  }
  return mat;
}

GluedTables build_glued(int m, int n, const TransformOptions& opt) {
  GluedTables g;
  g.m = m;
  g.n = n;
  g.t1 = build_tables(OrbitModel::type1_model1(m, n));
  g.kl1 = build_kl(g.t1);
  g.g1 = build_wgraph(g.t1, g.kl1);
  g.t2 = build_tables(OrbitModel::type1_model2(n, m));
  g.kl2 = build_kl(g.t2);
  g.g2 = build_wgraph(g.t2, g.kl2);

  size_t L = g.t1.labels.size();
  if (L != g.t2.labels.size()) throw std::logic_error("model sizes differ");

  // transform table and its inverse
  g.phi.assign(L, -1);
  g.phi_inv.assign(L, -1);
  for (size_t i = 0; i < L; i++) {
    Label im = phi_transform(m, n, g.t1.labels[i], opt);
    int j = g.t2.id(im);
    g.phi[i] = j;
    if (g.phi_inv[j] != -1) throw std::logic_error("transform is not injective");
    g.phi_inv[j] = (int)i;
  }

  // iota = phi^{-1} . (last-target flip) . phi
  g.iota.assign(L, -1);
  for (size_t i = 0; i < L; i++) {
    Label flipped = g.t2.mod.flip_last_target(g.t2.labels[g.phi[i]]);
    g.iota[i] = g.phi_inv[g.t2.id(flipped)];
  }
  for (size_t i = 0; i < L; i++)
    if (g.iota[g.iota[i]] != (int)i) throw std::logic_error("sign conjugate not an involution");

  // combined generator names
  if (m >= 2)
    for (int i = 1; i <= m; i++) g.gen_names.push_back("s" + std::to_string(i));
  for (int j = 1; j <= n; j++) g.gen_names.push_back("s'" + std::to_string(j));

  auto name_to_gen = [](const ModelTables& t, const std::string& name) {
    for (size_t k = 0; k < t.gens.size(); k++)
      if (t.gens[k].name == name) return (int)k;
    return -1;
  };

  // descents of the glued module and the shared-generator transport check
  g.descents.assign(L, {});
  for (size_t i = 0; i < L; i++) {
    for (size_t gi = 0; gi < g.gen_names.size(); gi++) {
      const std::string& name = g.gen_names[gi];
      int g1id = name_to_gen(g.t1, name);
      int g2id = name_to_gen(g.t2, name);
      bool in1 = g1id >= 0 && g.t1.descents[i].count(g1id);
      bool in2 = g2id >= 0 && g.t2.descents[g.phi[i]].count(g2id);
      if (g1id >= 0 && g2id >= 0 && in1 != in2)
        throw std::logic_error("descent transport failed at " + g.t1.labels[i].str() +
                               " for " + name);
      if (in1 || in2) g.descents[i].insert((int)gi);
    }
  }

  // shared generators intertwine exactly through the canonical bases
  for (const auto& name : g.gen_names) {
    int g1id = name_to_gen(g.t1, name);
    int g2id = name_to_gen(g.t2, name);
    if (g1id < 0 || g2id < 0) continue;
    auto s1 = structure_constants(g.t1, g.kl1, g1id);
    auto s2 = structure_constants(g.t2, g.kl2, g2id);
    for (size_t a = 0; a < L; a++)
      for (size_t b = 0; b < L; b++)
        if (!(s1[a][b] == s2[g.phi[a]][g.phi[b]]))
          throw std::logic_error("canonical bases do not intertwine " + name);
  }

  // the second model's canonical basis is equivariant under the last-target
  // flip, and the flip swaps the last two unprimed descents
  {
    std::vector<int> flip2(L);
    for (size_t j = 0; j < L; j++)
      flip2[j] = g.t2.id(g.t2.mod.flip_last_target(g.t2.labels[j]));
    for (size_t j = 0; j < L; j++) {
      ModVec permuted;
      for (auto& [id, c] : g.kl2.cbasis[j].c) permuted.add(flip2[id], c);
      if (!(permuted == g.kl2.cbasis[flip2[j]]))
        throw std::logic_error("canonical basis not equivariant under the target flip");
    }
    std::set<WGraphEdge> e2(g.g2.edges.begin(), g.g2.edges.end());
    for (auto& e : g.g2.edges)
      if (!e2.count({flip2[e.from], flip2[e.to], e.mu}))
        throw std::logic_error("second-model edges not flip-stable");
    if (m >= 2) {
      int ga = name_to_gen(g.t2, "s" + std::to_string(m - 1));
      int gb = name_to_gen(g.t2, "s" + std::to_string(m));
      for (size_t j = 0; j < L; j++)
        for (size_t k = 0; k < g.t2.gens.size(); k++) {
          int kk = (int)k;
          int swapped = kk == ga ? gb : (kk == gb ? ga : kk);
          if (g.t2.descents[j].count(kk) != g.t2.descents[flip2[j]].count(swapped))
            throw std::logic_error("flip does not swap the last two descents");
        }
    }
  }

  // glued edge set: first-model edges plus transported second-model edges
  std::set<WGraphEdge> edges(g.g1.edges.begin(), g.g1.edges.end());
  for (auto& e : g.g2.edges) {
    WGraphEdge t{g.phi_inv[e.from], g.phi_inv[e.to], e.mu};
    // when both models supply the edge the weights must agree
    for (auto& e1 : g.g1.edges)
      if (e1.from == t.from && e1.to == t.to && e1.mu != t.mu)
        throw std::logic_error("edge weight mismatch between the two models");
    edges.insert(t);
  }
  g.edges.assign(edges.begin(), edges.end());

  // sign-flip symmetry of the glued graph
  for (auto& e : g.edges)
    if (!edges.count({g.iota[e.from], g.iota[e.to], e.mu}))
      throw std::logic_error("glued edges not stable under the sign conjugate");
  for (size_t i = 0; i < L; i++) {
    std::set<int> expect;
    for (int d : g.descents[i]) {
      std::string name = g.gen_names[d];
      if (m >= 2 && name == "s" + std::to_string(m - 1))
        name = "s" + std::to_string(m);
      else if (m >= 2 && name == "s" + std::to_string(m))
        name = "s" + std::to_string(m - 1);
      expect.insert(g.gen_id(name));
    }
    if (expect != g.descents[g.iota[i]])
      throw std::logic_error("descents not swapped by the sign conjugate");
  }

  g.cells = graph_cells((int)L, g.edges);
  return g;
}

std::vector<std::vector<Laurent>> glued_gen_matrix(const GluedTables& g,
                                                   const std::string& name) {
  size_t L = g.t1.labels.size();
  if (name == "t") {
    std::vector<std::vector<Laurent>> mat(L, std::vector<Laurent>(L));
    for (size_t s = 0; s < L; s++) mat[g.iota[s]][s] = Laurent(1);
    return mat;
  }
  for (size_t k = 0; k < g.t1.gens.size(); k++)
    if (g.t1.gens[k].name == name) return structure_constants(g.t1, g.kl1, (int)k);
  for (size_t k = 0; k < g.t2.gens.size(); k++)
    if (g.t2.gens[k].name == name) {
      auto s2 = structure_constants(g.t2, g.kl2, (int)k);
      std::vector<std::vector<Laurent>> mat(L, std::vector<Laurent>(L));
      for (size_t a = 0; a < L; a++)
        for (size_t b = 0; b < L; b++) mat[a][b] = s2[g.phi[a]][g.phi[b]];
      return mat;
    }
  throw std::invalid_argument("unknown generator " + name);
}

std::vector<std::vector<Laurent>> glued_tm_on_indicators(const GluedTables& g) {
  size_t L = g.t1.labels.size();
  std::vector<std::vector<Laurent>> mat(L, std::vector<Laurent>(L));
  for (size_t s = 0; s < L; s++) {
    auto coords = g.kl1.in_cbasis(ModVec::unit((int)s));
    ModVec image;
    for (size_t k = 0; k < L; k++)
      if (!coords[k].is_zero()) image += g.kl1.cbasis[g.iota[k]].scaled(coords[k]);
    for (auto& [r, c] : image.c) mat[r][s] = c;
  }
  return mat;
}

}  // namespace theta
