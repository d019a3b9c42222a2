#include "thetalab/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace theta {

long long space_budget() { return 10'000'000; }

static bool is_odd_prime(long long q) {
  if (q < 3 || q % 2 == 0) return false;
  for (long long d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

int FqSpace::point_id(const FqPoint& x) const {
  auto it = index.find(x);
  if (it == index.end()) throw std::logic_error("point left the variety");
  return it->second;
}

FpMat target_form(const OrbitModel& mod, const FpContext& F) {
  int d = target_space_dim(mod);
  FpMat J(d, std::vector<uint64_t>(d, 0));
  if (mod.kind == ModelKind::TypeII) throw std::invalid_argument("no form on this target");
  for (int i = 1; i <= mod.tgt_rank; i++) {
    int r = target_row(mod, i), rn = target_row(mod, -i);
    J[r][rn] = 1;
    J[rn][r] = mod.kind == ModelKind::TypeI_M1 ? F.neg(1) : 1;
  }
  return J;
}

// is the matrix Gram-isotropic for the form (X^T J X = 0)?
static bool is_isotropic(const FpContext& F, const FpMat& J, const FqPoint& x) {
  int d = (int)x.size(), c = (int)x[0].size();
  for (int a = 0; a < c; a++)
    for (int b = 0; b < c; b++) {
      uint64_t s = 0;
      for (int i = 0; i < d; i++) {
        uint64_t ji = 0;
        for (int j = 0; j < d; j++) ji = F.add(ji, F.mul(J[i][j], x[j][b]));
        s = F.add(s, F.mul(x[i][a], ji));
      }
      if (s != 0) return false;
    }
  return true;
}

std::vector<FpMat> borel_group_gens(const OrbitModel& mod, const FpContext& F, GenSide side) {
  std::vector<FpMat> gens;
  uint64_t w = F.primitive_root();
  bool plain_gl = side == GenSide::Source || mod.kind == ModelKind::TypeII;
  if (plain_gl) {
    int k = side == GenSide::Source ? mod.src_rank : mod.tgt_rank;
    for (int i = 0; i < k; i++) {
      FpMat t = fp_identity(k);
      t[i][i] = w;
      gens.push_back(t);
    }
    for (int i = 0; i + 1 < k; i++) {
      FpMat u = fp_identity(k);
      u[i][i + 1] = 1;
      gens.push_back(u);
    }
    return gens;
  }
  int d = target_space_dim(mod), r = mod.tgt_rank;
  for (int i = 1; i <= r; i++) {
    FpMat t = fp_identity(d);
    t[target_row(mod, i)][target_row(mod, i)] = w;
    t[target_row(mod, -i)][target_row(mod, -i)] = F.inv(w);
    gens.push_back(t);
  }
  // adjacent-slot root elements: f_{i+1} += f_i, f_{-i} -= f_{-(i+1)}
  for (int i = 1; i < r; i++) {
    FpMat u = fp_identity(d);
    u[target_row(mod, i)][target_row(mod, i + 1)] = 1;
    u[target_row(mod, -(i + 1))][target_row(mod, -i)] = F.neg(1);
    gens.push_back(u);
  }
  if (mod.kind == ModelKind::TypeI_M1) {
    // last short root: f_{-r} += f_r
    FpMat u = fp_identity(d);
    u[target_row(mod, r)][target_row(mod, -r)] = 1;
    gens.push_back(u);
  } else if (r >= 2) {
    // the rotated node: f_{-r} += f_{r-1}, f_{-(r-1)} -= f_r
    FpMat u = fp_identity(d);
    u[target_row(mod, r - 1)][target_row(mod, -r)] = 1;
    u[target_row(mod, r)][target_row(mod, -(r - 1))] = F.neg(1);
    gens.push_back(u);
  }
  return gens;
}

long long matrix_group_order(const FpContext& F, const std::vector<FpMat>& gens,
                             long long budget) {
  if (gens.empty()) return 1;
  std::set<FpMat> seen;
  std::vector<FpMat> queue{fp_identity(gens[0].size())};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); head++) {
    FpMat cur = queue[head];
    for (auto& g : gens) {
      FpMat next = fp_mul(F, cur, g);
      if (seen.insert(next).second) {
        if ((long long)seen.size() > budget) throw std::runtime_error("group budget exceeded");
        queue.push_back(next);
      }
    }
  }
  return (long long)seen.size();
}

FqSpace build_space(const ModelTables& t, long long q) {
  if (!is_odd_prime(q)) throw std::invalid_argument("q must be an odd prime");
  FqSpace s{t, q, FpContext((uint64_t)q), target_space_dim(t.mod), t.mod.src_rank, {}, {}, {}, {}};
  long long cells = (long long)s.rows * s.cols;
  long long total = 1;
  for (long long i = 0; i < cells; i++) {
    if (total > space_budget() / q) throw std::runtime_error("space budget exceeded");
    total *= q;
  }
  bool filtered = t.mod.signed_targets();
  FpMat J;
  if (filtered) J = target_form(t.mod, s.F);
  std::vector<uint64_t> digits(cells, 0);
  for (long long counter = 0; counter < total; counter++) {
    FqPoint x(s.rows, std::vector<uint64_t>(s.cols));
    for (int i = 0; i < s.rows; i++)
      for (int j = 0; j < s.cols; j++) x[i][j] = digits[i * s.cols + j];
    if (!filtered || is_isotropic(s.F, J, x)) {
      s.index[x] = (int)s.points.size();
      s.points.push_back(x);
    }
    for (long long pos = 0; pos < cells; pos++) {
      if (++digits[pos] < (uint64_t)q) break;
      digits[pos] = 0;
    }
  }

  // orbits of the two-sided Borel generator action (all generators have
  // finite order, so forward closure reaches the full group orbit)
  auto src_gens = borel_group_gens(t.mod, s.F, GenSide::Source);
  auto tgt_gens = borel_group_gens(t.mod, s.F, GenSide::Target);
  s.orbit_of.assign(s.points.size(), -1);
  int orbit_count = 0;
  std::vector<long long> sizes;
  for (size_t seed = 0; seed < s.points.size(); seed++) {
    if (s.orbit_of[seed] != -1) continue;
    int id = orbit_count++;
    sizes.push_back(0);
    std::vector<int> queue{(int)seed};
    s.orbit_of[seed] = id;
    for (size_t head = 0; head < queue.size(); head++) {
      sizes[id]++;
      const FqPoint x = s.points[queue[head]];
      auto visit = [&](const FqPoint& y) {
        int pid = s.point_id(y);
        if (s.orbit_of[pid] == -1) {
          s.orbit_of[pid] = id;
          queue.push_back(pid);
        }
      };
      for (auto& g : src_gens) visit(fp_mul(s.F, x, g));
      for (auto& g : tgt_gens) visit(fp_mul(s.F, g, x));
    }
  }
  if (orbit_count != (int)t.labels.size())
    throw std::logic_error("orbit count disagrees with the label count");

  // align orbit ids with label ids through the standard representatives
  std::vector<int> orbit_label(orbit_count, -1);
  for (size_t li = 0; li < t.labels.size(); li++) {
    auto rep = representative_matrix(t.mod, t.labels[li]);
    FqPoint x(s.rows, std::vector<uint64_t>(s.cols));
    for (int i = 0; i < s.rows; i++)
      for (int j = 0; j < s.cols; j++) x[i][j] = s.F.from_int(rep[i][j]);
    int orb = s.orbit_of[s.point_id(x)];
    if (orbit_label[orb] != -1)
      throw std::logic_error("two representatives fell in one orbit");
    orbit_label[orb] = (int)li;
  }
  for (auto& pid : s.orbit_of) pid = orbit_label[pid];
  s.orbit_size.assign(t.labels.size(), 0);
  for (int pid : s.orbit_of) s.orbit_size[pid]++;
  return s;
}

// the permutation part sdot of a generator (column convention: column j is
// the image of the j-th basis vector)
static FpMat gen_sdot(const FqSpace& s, const Generator& g) {
  const OrbitModel& mod = s.t.mod;
  bool plain_gl = g.side == GenSide::Source || mod.kind == ModelKind::TypeII;
  if (plain_gl) {
    int k = g.side == GenSide::Source ? mod.src_rank : mod.tgt_rank;
    FpMat m = fp_identity(k);
    int i = g.index - 1;
    m[i][i] = m[i + 1][i + 1] = 0;
    m[i][i + 1] = m[i + 1][i] = 1;
    return m;
  }
  int d = target_space_dim(mod), r = mod.tgt_rank, i = g.index;
  FpMat m = fp_identity(d);
  auto row = [&](int v) { return target_row(mod, v); };
  auto clear = [&](int v) { m[row(v)][row(v)] = 0; };
  if (i < r) {
    for (int v : {i, i + 1, -i, -(i + 1)}) clear(v);
    m[row(i + 1)][row(i)] = m[row(i)][row(i + 1)] = 1;
    m[row(-(i + 1))][row(-i)] = m[row(-i)][row(-(i + 1))] = 1;
  } else if (mod.kind == ModelKind::TypeI_M1) {
    clear(r);
    clear(-r);
    m[row(-r)][row(r)] = 1;            // f_r -> f_-r
    m[row(r)][row(-r)] = s.F.neg(1);   // f_-r -> -f_r
  } else {
    for (int v : {r - 1, r, -(r - 1), -r}) clear(v);
    m[row(-r)][row(r - 1)] = 1;   // f_{r-1} -> f_-r
    m[row(-(r - 1))][row(r)] = 1; // f_r -> f_-(r-1)
    m[row(r - 1)][row(-r)] = 1;
    m[row(r)][row(-(r - 1))] = 1;
  }
  return m;
}

// the root element x_alpha(t) of a generator
static FpMat gen_unipotent(const FqSpace& s, const Generator& g, long long tval) {
  const OrbitModel& mod = s.t.mod;
  uint64_t tv = s.F.from_int(tval);
  bool plain_gl = g.side == GenSide::Source || mod.kind == ModelKind::TypeII;
  if (plain_gl) {
    int k = g.side == GenSide::Source ? mod.src_rank : mod.tgt_rank;
    FpMat m = fp_identity(k);
    m[g.index - 1][g.index] = tv;
    return m;
  }
  int d = target_space_dim(mod), r = mod.tgt_rank, i = g.index;
  FpMat m = fp_identity(d);
  auto row = [&](int v) { return target_row(mod, v); };
  if (i < r) {
    m[row(i)][row(i + 1)] = tv;
    m[row(-(i + 1))][row(-i)] = s.F.neg(tv);
  } else if (mod.kind == ModelKind::TypeI_M1) {
    m[row(r)][row(-r)] = tv;
  } else {
    m[row(r - 1)][row(-r)] = tv;
    m[row(r)][row(-(r - 1))] = s.F.neg(tv);
  }
  return m;
}

FpMat oracle_rep(const FqSpace& s, const Generator& g, long long tval) {
  return fp_mul(s.F, gen_unipotent(s, g, tval), gen_sdot(s, g));
}

std::vector<std::vector<long long>> convolution_matrix(const FqSpace& s, const Generator& g) {
  size_t L = s.t.labels.size(), N = s.points.size();
  // count[x][alpha]: value of T_g * indicator(alpha) at the point x
  std::vector<std::vector<long long>> count(N, std::vector<long long>(L, 0));
  bool target_side = g.side == GenSide::Target;
  for (long long tval = 0; tval < s.q; tval++) {
    FpMat rep = oracle_rep(s, g, tval);
    if (target_side) rep = fp_inverse(s.F, rep);
    for (size_t x = 0; x < N; x++) {
      FqPoint y = target_side ? fp_mul(s.F, rep, s.points[x]) : fp_mul(s.F, s.points[x], rep);
      count[x][s.orbit_of[s.point_id(y)]]++;
    }
  }
  std::vector<std::vector<long long>> m(L, std::vector<long long>(L, -1));
  for (size_t x = 0; x < N; x++) {
    int beta = s.orbit_of[x];
    for (size_t a = 0; a < L; a++) {
      if (m[beta][a] == -1) m[beta][a] = count[x][a];
      if (m[beta][a] != count[x][a])
        throw std::logic_error("convolution image is not orbit-constant");
    }
  }
  return m;
}

std::vector<std::vector<long long>> symbolic_matrix_at_q(const ModelTables& t,
                                                         const Generator& g, long long q) {
  int pos = -1;
  for (size_t i = 0; i < t.gens.size(); i++)
    if (t.gens[i] == g) pos = (int)i;
  if (pos < 0) throw std::invalid_argument("not a generator of this model");
  size_t L = t.labels.size();
  std::vector<std::vector<long long>> m(L, std::vector<long long>(L, 0));
  for (size_t a = 0; a < L; a++) {
    ModVec img = act_Ts(t, pos, ModVec::unit((int)a));
    for (auto& [b, poly] : img.c) m[b][a] = poly.eval_v2(q);
  }
  return m;
}

// ---------------------------------------------------------------------------

Cyc Cyc::zero(long long p) { return Cyc{p, std::vector<long long>(p, 0)}; }

Cyc Cyc::integer(long long p, long long v) {
  Cyc r = zero(p);
  r.c[0] = v;
  return r;
}

Cyc Cyc::root(long long p, long long k) {
  Cyc r = zero(p);
  r.add_root(k);
  r.reduce();
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (p != o.p) throw std::invalid_argument("mixed cyclotomic orders");
  for (long long i = 0; i < p; i++) c[i] += o.c[i];
  reduce();
  return *this;
}

Cyc& Cyc::add_root(long long k, long long mult) {
  k %= p;
  if (k < 0) k += p;
  c[k] += mult;
  return *this;
}

Cyc Cyc::scaled(long long v) const {
  Cyc r = *this;
  for (auto& x : r.c) x *= v;
  r.reduce();
  return r;
}

Cyc Cyc::rotated(long long k) const {
  k %= p;
  if (k < 0) k += p;
  Cyc r = zero(p);
  for (long long i = 0; i < p; i++) r.c[(i + k) % p] = c[i];
  r.reduce();
  return r;
}

void Cyc::reduce() {
  long long last = c[p - 1];
  if (last == 0) return;
  for (auto& x : c) x -= last;  // the powers of zeta sum to zero
}

// ---------------------------------------------------------------------------

uint64_t pairing_trace(const FpContext& F, const FqPoint& a, const FqPoint& b) {
  uint64_t s = 0;
  for (size_t i = 0; i < a.size(); i++)
    for (size_t k = 0; k < a[i].size(); k++) s = F.add(s, F.mul(a[i][k], b[k][i]));
  return s;
}

Cyc fourier_indicator_at(const FqSpace& xs, const std::vector<int>& support, const FqPoint& y) {
  Cyc r = Cyc::zero(xs.q);
  for (int pid : support) r.add_root((long long)pairing_trace(xs.F, y, xs.points[pid]));
  r.reduce();
  return r;
}

std::vector<Cyc> fourier_cyc_full(const FqSpace& from, const FqSpace& to,
                                  const std::vector<Cyc>& f) {
  std::vector<Cyc> out(to.points.size(), Cyc::zero(from.q));
  for (size_t y = 0; y < to.points.size(); y++)
    for (size_t x = 0; x < from.points.size(); x++) {
      if (f[x] == Cyc::zero(from.q)) continue;
      out[y] += f[x].rotated((long long)pairing_trace(from.F, to.points[y], from.points[x]));
    }
  return out;
}

// corner-rank table: r[i][j] = rank of the submatrix rows >= i, cols <= j
static std::vector<std::vector<int>> corner_table(const FpContext& F, const FqPoint& x) {
  int R = (int)x.size(), C = (int)x[0].size();
  std::vector<std::vector<int>> r(R, std::vector<int>(C));
  for (int i = 0; i < R; i++)
    for (int j = 0; j < C; j++) {
      FpMat sub;
      for (int a = i; a < R; a++)
        sub.push_back(std::vector<uint64_t>(x[a].begin(), x[a].begin() + j + 1));
      r[i][j] = fp_rank(F, sub);
    }
  return r;
}

std::vector<int> closure_points(const FqSpace& s, const Label& lab) {
  if (s.t.mod.kind != ModelKind::TypeII)
    throw std::invalid_argument("closure sets are computed in the unsigned model only");
  auto rep = representative_matrix(s.t.mod, lab);
  FqPoint repq(s.rows, std::vector<uint64_t>(s.cols));
  for (int i = 0; i < s.rows; i++)
    for (int j = 0; j < s.cols; j++) repq[i][j] = s.F.from_int(rep[i][j]);
  auto bound = corner_table(s.F, repq);
  std::vector<int> out;
  for (size_t pid = 0; pid < s.points.size(); pid++) {
    auto table = corner_table(s.F, s.points[pid]);
    bool inside = true;
    for (int i = 0; i < s.rows && inside; i++)
      for (int j = 0; j < s.cols && inside; j++)
        if (table[i][j] > bound[i][j]) inside = false;
    if (inside) out.push_back((int)pid);
  }
  return out;
}

std::vector<int> perp_points(const FqSpace& xs, const std::vector<int>& support,
                             const FqSpace& ys) {
  // constraint rows: y is in the annihilator iff tr(y x) = 0 for the spanning
  // points x; y coordinates are flattened row-major
  size_t D = (size_t)ys.rows * ys.cols;
  FpMat constraints;
  for (int pid : support) {
    const FqPoint& x = xs.points[pid];
    std::vector<uint64_t> row(D);
    for (int i = 0; i < ys.rows; i++)
      for (int k = 0; k < ys.cols; k++) row[i * ys.cols + k] = x[k][i];
    constraints.push_back(row);
  }
  auto basis = fp_nullspace(ys.F, constraints);
  long long combos = 1;
  for (size_t b = 0; b < basis.size(); b++) {
    if (combos > space_budget() / ys.q) throw std::runtime_error("annihilator budget exceeded");
    combos *= ys.q;
  }
  std::vector<int> out;
  std::vector<uint64_t> digits(basis.size(), 0);
  for (long long counter = 0; counter < combos; counter++) {
    std::vector<uint64_t> flat(D, 0);
    for (size_t b = 0; b < basis.size(); b++)
      if (digits[b])
        for (size_t d = 0; d < D; d++)
          flat[d] = ys.F.add(flat[d], ys.F.mul(digits[b], basis[b][d]));
    FqPoint y(ys.rows, std::vector<uint64_t>(ys.cols));
    for (int i = 0; i < ys.rows; i++)
      for (int k = 0; k < ys.cols; k++) y[i][k] = flat[i * ys.cols + k];
    out.push_back(ys.point_id(y));
    for (size_t pos = 0; pos < digits.size(); pos++) {
      if (++digits[pos] < (uint64_t)ys.q) break;
      digits[pos] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("annihilator basis was dependent");
  return out;
}

std::vector<Cyc> convolve_cyc(const FqSpace& s, const Generator& g, const std::vector<Cyc>& f) {
  std::vector<Cyc> out(s.points.size(), Cyc::zero(s.q));
  bool target_side = g.side == GenSide::Target;
  for (long long tval = 0; tval < s.q; tval++) {
    FpMat rep = oracle_rep(s, g, tval);
    if (target_side) rep = fp_inverse(s.F, rep);
    for (size_t x = 0; x < s.points.size(); x++) {
      FqPoint y = target_side ? fp_mul(s.F, rep, s.points[x]) : fp_mul(s.F, s.points[x], rep);
      out[x] += f[s.point_id(y)];
    }
  }
  return out;
}

}  // namespace theta
