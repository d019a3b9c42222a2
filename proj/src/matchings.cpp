#include "thetalab/matchings.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "thetalab/linalg.hpp"

namespace theta {

void Label::canonicalize() {
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 0; i + 1 < arcs.size(); i++)
    if (arcs[i].first == arcs[i + 1].first)
      throw std::invalid_argument("repeated source in matching");
}

bool Label::operator<(const Label& o) const {
  if (arcs.size() != o.arcs.size()) return arcs.size() < o.arcs.size();
  return arcs < o.arcs;
}

std::string Label::str() const {
  if (arcs.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < arcs.size(); i++) {
    if (i) out += ", ";
    out += std::to_string(arcs[i].first) + ">" + std::to_string(arcs[i].second);
  }
  return out;
}

Label Label::parse(const std::string& text) {
  Label lab;
  std::string t;
  for (char ch : text)
    if (!isspace((unsigned char)ch)) t += ch;
  if (t == "{}" || t.empty()) return lab;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto pos = item.find('>');
    if (pos == std::string::npos || pos == 0 || pos + 1 == item.size())
      throw std::invalid_argument("bad arc '" + item + "'");
    int s = std::stoi(item.substr(0, pos));
    int v = std::stoi(item.substr(pos + 1));
    if (s <= 0 || v == 0) throw std::invalid_argument("bad arc '" + item + "'");
    lab.arcs.push_back({s, v});
  }
  lab.canonicalize();
  return lab;
}

std::optional<int> Label::target_of(int source) const {
  for (auto& [s, t] : arcs)
    if (s == source) return t;
  return std::nullopt;
}

// signed source: +s when s is matched to exactly this target, -s when s is
// matched to its negative
std::optional<int> Label::source_of(int target) const {
  for (auto& [s, t] : arcs) {
    if (t == target) return s;
    if (t == -target) return -s;
  }
  return std::nullopt;
}

char local_type_char(LocalType t) {
  switch (t) {
    case LocalType::Toral: return 'G';
    case LocalType::Lower: return 'D';
    case LocalType::Raise: return 'U';
  }
  return '?';
}

// ---------------------------------------------------------------------------

SPerm SPerm::identity(int k) {
  SPerm w;
  for (int i = 1; i <= k; i++) w.img.push_back(i);
  return w;
}

SPerm SPerm::transposition(int k, int a, int b) {
  SPerm w = identity(k);
  // involution a <-> b extended oddly
  auto set = [&](int from, int to) {
    if (from > 0)
      w.img[from - 1] = to;
    else
      w.img[-from - 1] = -to;
  };
  set(a, b);
  set(b, a);
  return w;
}

SPerm SPerm::sign_flip(int k, int a) {
  SPerm w = identity(k);
  w.img[a - 1] = -a;
  return w;
}

int SPerm::apply(int x) const {
  if (x > 0) return img[x - 1];
  return -img[-x - 1];
}

SPerm SPerm::compose(const SPerm& then) const {
  SPerm w;
  w.img.resize(img.size());
  for (size_t i = 0; i < img.size(); i++) w.img[i] = then.apply(img[i]);
  return w;
}

SPerm SPerm::inverse() const {
  SPerm w;
  w.img.resize(img.size());
  for (size_t i = 0; i < img.size(); i++) {
    int y = img[i];
    if (y > 0)
      w.img[y - 1] = (int)i + 1;
    else
      w.img[-y - 1] = -((int)i + 1);
  }
  return w;
}

// ---------------------------------------------------------------------------

OrbitModel OrbitModel::type2(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  return {ModelKind::TypeII, m, n};
}
OrbitModel OrbitModel::type1_model1(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  return {ModelKind::TypeI_M1, m, n};
}
OrbitModel OrbitModel::type1_model2(int n, int m) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  return {ModelKind::TypeI_M2, n, m};
}

std::vector<Label> OrbitModel::enumerate() const {
  std::vector<Label> out;
  Label cur;
  std::vector<bool> used(tgt_rank + 1, false);
  std::function<void(int)> rec = [&](int s) {
    if (s > src_rank) {
      Label l = cur;
      l.canonicalize();
      out.push_back(l);
      return;
    }
    rec(s + 1);  // source s unmatched
    for (int t = 1; t <= tgt_rank; t++) {
      if (used[t]) continue;
      used[t] = true;
      cur.arcs.push_back({s, t});
      rec(s + 1);
      cur.arcs.pop_back();
      if (signed_targets()) {
        cur.arcs.push_back({s, -t});
        rec(s + 1);
        cur.arcs.pop_back();
      }
      used[t] = false;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> OrbitModel::generators() const {
  std::vector<Generator> gens;
  // the source side carries the plain symmetric-group generators; names
  // follow the ambient pair: unprimed on the metaplectic side
  bool src_primed = (kind == ModelKind::TypeI_M2);
  for (int i = 1; i < src_rank; i++)
    gens.push_back({GenSide::Source, i,
                    (src_primed ? std::string("s'") : std::string("s")) + std::to_string(i)});
  int tgt_max = tgt_rank - 1;
  if (kind == ModelKind::TypeI_M1) tgt_max = tgt_rank;          // sign-flip generator
  if (kind == ModelKind::TypeI_M2 && tgt_rank >= 2) tgt_max = tgt_rank;  // rotated generator
  for (int j = 1; j <= tgt_max; j++)
    gens.push_back({GenSide::Target, j,
                    (src_primed ? std::string("s") : std::string("s'")) + std::to_string(j)});
  return gens;
}

// rank of a signed target value (0 = unmatched) in the order
// 0 < 1 < ... < t < -t < ... < -1
static int tgt_value_rank(int tgt_rank, int v) {
  if (v == 0) return 0;
  if (v > 0) return v;
  return 2 * tgt_rank + 1 + v;  // v negative
}

// rank of a signed source value in the order 1 < ... < s < inf < -s < ... < -1;
// nullopt plays the role of inf
static int src_value_rank(int src_rank, std::optional<int> v) {
  if (!v) return src_rank + 1;
  if (*v > 0) return *v;
  return 2 * src_rank + 2 + *v;
}

LocalType OrbitModel::classify(const Generator& g, const Label& lab) const {
  int a, b;
  if (g.side == GenSide::Source) {
    auto ta = lab.target_of(g.index), tb = lab.target_of(g.index + 1);
    a = tgt_value_rank(tgt_rank, ta.value_or(0));
    b = tgt_value_rank(tgt_rank, tb.value_or(0));
  } else if (kind == ModelKind::TypeI_M1 && g.index == tgt_rank) {
    a = src_value_rank(src_rank, lab.source_of(tgt_rank));
    b = src_value_rank(src_rank, std::nullopt);
  } else if (kind == ModelKind::TypeI_M2 && g.index == tgt_rank) {
    a = src_value_rank(src_rank, lab.source_of(tgt_rank - 1));
    b = src_value_rank(src_rank, lab.source_of(-tgt_rank));
  } else {
    a = src_value_rank(src_rank, lab.source_of(g.index));
    b = src_value_rank(src_rank, lab.source_of(g.index + 1));
  }
  if (a == b) return LocalType::Toral;
  return a < b ? LocalType::Lower : LocalType::Raise;
}

std::pair<SPerm, SPerm> OrbitModel::reflection(const Generator& g) const {
  SPerm ws = SPerm::identity(src_rank), wt = SPerm::identity(tgt_rank);
  if (g.side == GenSide::Source) {
    ws = SPerm::transposition(src_rank, g.index, g.index + 1);
  } else if (kind == ModelKind::TypeI_M1 && g.index == tgt_rank) {
    wt = SPerm::sign_flip(tgt_rank, tgt_rank);
  } else if (kind == ModelKind::TypeI_M2 && g.index == tgt_rank) {
    wt = SPerm::transposition(tgt_rank, tgt_rank - 1, -tgt_rank);
  } else {
    wt = SPerm::transposition(tgt_rank, g.index, g.index + 1);
  }
  return {ws, wt};
}

Label OrbitModel::star(const SPerm& on_sources, const SPerm& on_targets,
                       const Label& lab) const {
  Label out;
  for (auto& [s, t] : lab.arcs) {
    int ns = on_sources.apply(s), nt = on_targets.apply(t);
    if (ns < 0) {
      ns = -ns;
      nt = -nt;
    }
    if (!signed_targets() && nt < 0)
      throw std::logic_error("sign flip applied in an unsigned model");
    out.arcs.push_back({ns, nt});
  }
  out.canonicalize();
  return out;
}

Label OrbitModel::star(const Generator& g, const Label& lab) const {
  auto [ws, wt] = reflection(g);
  return star(ws, wt, lab);
}

Label OrbitModel::flip_last_target(const Label& lab) const {
  if (kind != ModelKind::TypeI_M1 && kind != ModelKind::TypeI_M2)
    throw std::logic_error("sign flip only defined in the signed models");
  return star(SPerm::identity(src_rank), SPerm::sign_flip(tgt_rank, tgt_rank), lab);
}

// ---------------------------------------------------------------------------

bool MinimalOrbit::contains(const OrbitModel& mod, const Label& beta) const {
  int s = mod.src_rank;
  for (auto& [x, y] : beta.arcs) {
    int level = x - (s - size);  // position along the staircase, 1-based
    if (level < 1) return false;
    if (!minus_leg) {
      if (y < 1 || y > level) return false;
    } else {
      // chain e_1, ..., e_{size-1}, e_{-size}
      bool ok = (y >= 1 && y <= std::min(level, size - 1)) || (y == -size && level >= size);
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<MinimalOrbit> expected_minimal_orbits(const OrbitModel& mod) {
  std::vector<MinimalOrbit> out;
  int top = std::min(mod.src_rank, mod.tgt_rank);
  for (int i = 0; i <= top; i++) {
    MinimalOrbit mo;
    mo.size = i;
    mo.minus_leg = false;
    mo.dim = (long long)i * (i + 1) / 2;
    for (int a = 1; a <= i; a++) mo.label.arcs.push_back({mod.src_rank - i + a, a});
    mo.label.canonicalize();
    out.push_back(mo);
  }
  // the second ruling: present in the second signed model when the target
  // rank does not exceed the source rank
  if (mod.kind == ModelKind::TypeI_M2 && mod.tgt_rank >= 1 &&
      mod.tgt_rank <= mod.src_rank) {
    int i = mod.tgt_rank;
    MinimalOrbit mo;
    mo.size = i;
    mo.minus_leg = true;
    mo.dim = (long long)i * (i + 1) / 2;
    for (int a = 1; a <= i - 1; a++) mo.label.arcs.push_back({mod.src_rank - i + a, a});
    mo.label.arcs.push_back({mod.src_rank, -i});
    mo.label.canonicalize();
    out.push_back(mo);
  }
  return out;
}

long long label_count(int src_rank, int tgt_rank, bool signed_targets) {
  auto choose = [](long long n, long long k) {
    if (k < 0 || k > n) return 0LL;
    long long r = 1;
    for (long long i = 0; i < k; i++) r = r * (n - i) / (i + 1);
    return r;
  };
  long long total = 0, fact = 1, pw = 1;
  for (int k = 0; k <= std::min(src_rank, tgt_rank); k++) {
    if (k > 0) {
      fact *= k;
      pw *= 2;
    }
    total += choose(src_rank, k) * choose(tgt_rank, k) * fact * (signed_targets ? pw : 1);
  }
  return total;
}

int ModelTables::id(const Label& l) const {
  auto it = index.find(l);
  if (it == index.end()) throw std::invalid_argument("unknown label " + l.str());
  return it->second;
}

ModelTables build_tables(const OrbitModel& mod) {
  ModelTables t;
  t.mod = mod;
  t.labels = mod.enumerate();
  if ((long long)t.labels.size() !=
      label_count(mod.src_rank, mod.tgt_rank, mod.signed_targets()))
    throw std::logic_error("label enumeration count mismatch");
  for (size_t i = 0; i < t.labels.size(); i++) t.index[t.labels[i]] = (int)i;
  t.gens = mod.generators();

  size_t L = t.labels.size(), G = t.gens.size();
  t.type_of.assign(G, std::vector<LocalType>(L));
  t.star_of.assign(G, std::vector<int>(L));
  for (size_t g = 0; g < G; g++)
    for (size_t l = 0; l < L; l++) {
      t.type_of[g][l] = mod.classify(t.gens[g], t.labels[l]);
      Label st = mod.star(t.gens[g], t.labels[l]);
      t.star_of[g][l] = t.id(st);
      bool fixed = (st == t.labels[l]);
      if (fixed != (t.type_of[g][l] == LocalType::Toral))
        throw std::logic_error("toral type disagrees with the reflection action at " +
                               t.labels[l].str());
    }

  // minimal orbits: no raising generator
  std::vector<int> detected;
  for (size_t l = 0; l < L; l++) {
    bool minimal = true;
    for (size_t g = 0; g < G; g++)
      if (t.type_of[g][l] == LocalType::Raise) minimal = false;
    if (minimal) detected.push_back((int)l);
  }
  auto expected = expected_minimal_orbits(mod);
  std::vector<int> expected_ids;
  for (auto& mo : expected) expected_ids.push_back(t.id(mo.label));
  std::sort(expected_ids.begin(), expected_ids.end());
  if (detected != expected_ids)
    throw std::logic_error("minimal orbits do not match the staircase family");
  t.minimals = expected;

  // dimensions by breadth-first search along lowering edges, anchored at all
  // minimal orbits simultaneously; conflicts are hard errors
  t.dim.assign(L, -1);
  std::deque<int> queue;
  for (auto& mo : t.minimals) {
    int id = t.id(mo.label);
    if (t.dim[id] >= 0 && t.dim[id] != mo.dim)
      throw std::logic_error("inconsistent anchor dimension");
    t.dim[id] = mo.dim;
    queue.push_back(id);
  }
  while (!queue.empty()) {
    int l = queue.front();
    queue.pop_front();
    for (size_t g = 0; g < G; g++) {
      if (t.type_of[g][l] != LocalType::Lower) continue;
      int up = t.star_of[g][l];
      if (t.dim[up] < 0) {
        t.dim[up] = t.dim[l] + 1;
        queue.push_back(up);
      } else if (t.dim[up] != t.dim[l] + 1) {
        throw std::logic_error("dimension conflict between lowering paths at " +
                               t.labels[up].str());
      }
    }
  }
  for (size_t l = 0; l < L; l++)
    if (t.dim[l] < 0)
      throw std::logic_error("orbit unreachable from minimal orbits: " + t.labels[l].str());
  // full local consistency of the three types against the dimensions
  for (size_t g = 0; g < G; g++)
    for (size_t l = 0; l < L; l++) {
      int st = t.star_of[g][l];
      long long expect = t.dim[l];
      if (t.type_of[g][l] == LocalType::Lower) expect++;
      if (t.type_of[g][l] == LocalType::Raise) expect--;
      if (t.dim[st] != expect) throw std::logic_error("type/dimension mismatch");
    }

  t.descents.assign(L, {});
  for (size_t l = 0; l < L; l++)
    for (size_t g = 0; g < G; g++)
      if (t.type_of[g][l] != LocalType::Lower) t.descents[l].insert((int)g);
  return t;
}

// ---------------------------------------------------------------------------

Label heart_label(const OrbitModel& mod, int i, int j) {
  if (mod.kind != ModelKind::TypeI_M1)
    throw std::invalid_argument("heart labels live in the first signed model");
  int ell = i + j;
  if (i < 0 || j < 0 || ell > std::min(mod.src_rank, mod.tgt_rank))
    throw std::invalid_argument("heart staircase out of range");
  std::vector<int> targets;
  for (int a = 1; a <= i; a++) targets.push_back(a);
  for (int a = 0; a < j; a++) targets.push_back(-(mod.tgt_rank - a));
  Label lab;
  for (int a = 1; a <= ell; a++)
    lab.arcs.push_back({mod.src_rank - ell + a, targets[a - 1]});
  lab.canonicalize();
  return lab;
}

int target_space_dim(const OrbitModel& mod) {
  return mod.signed_targets() ? 2 * mod.tgt_rank : mod.tgt_rank;
}

int target_row(const OrbitModel& mod, int t) {
  if (t > 0) return t - 1;
  if (!mod.signed_targets()) throw std::invalid_argument("negative target");
  return 2 * mod.tgt_rank + t;  // f_{-j} sits at row 2r - j
}

std::vector<std::vector<long long>> representative_matrix(const OrbitModel& mod,
                                                          const Label& lab) {
  int rows = target_space_dim(mod);
  std::vector<std::vector<long long>> x(rows, std::vector<long long>(mod.src_rank, 0));
  for (auto& [s, t] : lab.arcs) x[target_row(mod, t)][s - 1] = 1;
  return x;
}

std::vector<std::vector<std::vector<long long>>> borel_basis_source(const OrbitModel& mod) {
  int m = mod.src_rank;
  std::vector<std::vector<std::vector<long long>>> basis;
  for (int i = 0; i < m; i++)
    for (int j = i; j < m; j++) {
      std::vector<std::vector<long long>> e(m, std::vector<long long>(m, 0));
      e[i][j] = 1;
      basis.push_back(e);
    }
  return basis;
}

std::vector<std::vector<std::vector<long long>>> borel_basis_target(const OrbitModel& mod) {
  std::vector<std::vector<std::vector<long long>>> basis;
  if (!mod.signed_targets()) {
    int n = mod.tgt_rank;
    for (int i = 0; i < n; i++)
      for (int j = i; j < n; j++) {
        std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
        e[i][j] = 1;
        basis.push_back(e);
      }
    return basis;
  }
  // form-preserving upper-triangular matrices in the basis
  // f_1..f_r, f_-r..f_-1 where the form pairs row i with row i* = N+1-i;
  // the form is alternating on the metaplectic side of the first model and
  // symmetric on the orthogonal side of the second
  int r = mod.tgt_rank, N = 2 * r;
  bool alternating = (mod.kind == ModelKind::TypeI_M1);
  auto sgn = [&](int i) {  // coefficient of the form on (row i, row i*)
    return (alternating && i > r) ? -1LL : 1LL;
  };
  auto conj = [&](int i) { return N + 1 - i; };
  std::vector<std::vector<bool>> seen(N + 1, std::vector<bool>(N + 1, false));
  for (int u = 1; u <= N; u++)
    for (int q = u; q <= N; q++) {
      if (seen[u][q]) continue;
      int pu = conj(q), pq = conj(u);  // paired entry position (q*, u*)
      // A[q*][u*] = -(s_{u*}/s_{q*}) A[u][q]; on the diagonal orbit u=q the
      // pairing gives the torus relation, and when (u,q)==(q*,u*) the entry
      // is free or forbidden depending on the sign
      long long coef = -(sgn(conj(u)) * sgn(conj(q)));
      std::vector<std::vector<long long>> e(N, std::vector<long long>(N, 0));
      if (pu == u && pq == q) {
        // self-paired: A[u][q] must equal coef * A[u][q]
        if (coef == 1) {
          e[u - 1][q - 1] = 1;
          basis.push_back(e);
        }
        seen[u][q] = true;
        continue;
      }
      e[u - 1][q - 1] = 1;
      e[pu - 1][pq - 1] = coef;
      seen[u][q] = seen[pu][pq] = true;
      basis.push_back(e);
    }
  return basis;
}

long long dim_by_stabilizer(const OrbitModel& mod, const Label& lab) {
  auto x = representative_matrix(mod, lab);
  int rows = (int)x.size(), cols = mod.src_rank;
  IntMat span;
  auto push_flat = [&](const std::vector<std::vector<long long>>& v) {
    std::vector<long long> flat;
    for (auto& row : v) flat.insert(flat.end(), row.begin(), row.end());
    span.push_back(flat);
  };
  for (auto& a1 : borel_basis_source(mod)) {
    // -x a1
    std::vector<std::vector<long long>> v(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; i++)
      for (int j = 0; j < cols; j++)
        for (int k = 0; k < cols; k++) v[i][j] -= x[i][k] * a1[k][j];
    push_flat(v);
  }
  for (auto& a2 : borel_basis_target(mod)) {
    // a2 x
    std::vector<std::vector<long long>> v(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; i++)
      for (int j = 0; j < cols; j++)
        for (int k = 0; k < rows; k++) v[i][j] += a2[i][k] * x[k][j];
    push_flat(v);
  }
  return int_rank(span);
}

}  // namespace theta
