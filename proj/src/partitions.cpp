#include "thetalab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace theta {

Partition normalize_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("negative part");
  return parts;
}

int part_sum(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int i = 1; i <= p[0]; i++) {
    int cnt = 0;
    for (int x : p)
      if (x >= i) cnt++;
    t.push_back(cnt);
  }
  return t;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // descending parts, largest first
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; p--) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

static std::map<int, int> mults(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) m[x]++;
  return m;
}

bool is_orthogonal(const Partition& p) {
  for (auto& [part, mult] : mults(p))
    if (part % 2 == 0 && mult % 2 != 0) return false;
  return true;
}

bool is_symplectic(const Partition& p) {
  for (auto& [part, mult] : mults(p))
    if (part % 2 != 0 && mult % 2 != 0) return false;
  return true;
}

std::vector<Partition> orthogonal_partitions(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_orthogonal(p)) out.push_back(p);
  return out;
}

std::vector<Partition> symplectic_partitions(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_symplectic(p)) out.push_back(p);
  return out;
}

long long dim_orbit_gl(const Partition& p) {
  long long n = part_sum(p), s = 0;
  for (int t : transpose(p)) s += (long long)t * t;
  return n * n - s;
}

static long long odd_count(const Partition& p) {
  long long c = 0;
  for (int x : p)
    if (x % 2 != 0) c++;
  return c;
}

long long dim_orbit_so(const Partition& p) {
  long long n = part_sum(p), s = 0;
  for (int t : transpose(p)) s += (long long)t * t;
  return n * (n - 1) / 2 - (s - odd_count(p)) / 2;
}

long long dim_orbit_sp(const Partition& p) {
  long long n = part_sum(p), s = 0;
  for (int t : transpose(p)) s += (long long)t * t;
  return n * (n + 1) / 2 - (s + odd_count(p)) / 2;
}

// ---------------------------------------------------------------------------

bool valid_dec_pair(const DecPair& p) {
  if (p.x < 0 || p.y < 0) return false;
  if (p.dec == Dec::none) return (p.x == p.y + 1) || (p.y == p.x + 1);
  return p.x == p.y && p.x >= 1;
}

void DecBipartition::canonicalize() {
  std::sort(pairs.begin(), pairs.end(), [](const DecPair& a, const DecPair& b) {
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return (int)a.dec < (int)b.dec;
  });
}

int DecBipartition::sum_x() const {
  int s = 0;
  for (auto& p : pairs) s += p.x;
  return s;
}
int DecBipartition::sum_y() const {
  int s = 0;
  for (auto& p : pairs) s += p.y;
  return s;
}

std::string DecBipartition::str() const {
  std::string out = "{";
  bool first = true;
  for (auto& p : pairs) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    if (p.dec == Dec::plus) out += "+";
    if (p.dec == Dec::minus) out += "-";
  }
  return out + "}";
}

long long clash_number(const DecBipartition& g) {
  std::map<int, long long> down, up;  // (k+1,k) resp. (k,k+1), keyed by k
  for (auto& p : g.pairs) {
    if (p.dec != Dec::none) continue;
    if (p.x == p.y + 1) down[p.y]++;
    if (p.y == p.x + 1) up[p.x]++;
  }
  long long total = 0;
  for (auto& [k, d] : down) {
    auto it = up.find(k);
    if (it != up.end()) total += d * it->second;
  }
  return total;
}

bool is_relevant(const DecBipartition& g) { return clash_number(g) == 0; }

bool is_orthosymplectic(const DecBipartition& g) {
  std::map<int, int> plus, minus;
  std::map<std::pair<int, int>, int> uneven;
  for (auto& p : g.pairs) {
    if (p.dec == Dec::plus) plus[p.x]++;
    if (p.dec == Dec::minus) minus[p.x]++;
    if (p.dec == Dec::none) uneven[{p.x, p.y}]++;
  }
  for (auto& [k, c] : plus)
    if (minus[k] != c) return false;
  for (auto& [k, c] : minus)
    if (plus[k] != c) return false;
  for (auto& [xy, c] : uneven)
    if (xy.first % 2 == 0 && c % 2 != 0) return false;
  return true;
}

std::pair<Partition, Partition> moment_images(const DecBipartition& g) {
  std::vector<int> xs, ys;
  for (auto& p : g.pairs) {
    if (p.x > 0) xs.push_back(p.x);
    if (p.y > 0) ys.push_back(p.y);
  }
  return {normalize_partition(xs), normalize_partition(ys)};
}

// all admissible pair shapes fitting inside bidegree (m, n)
static std::vector<DecPair> shape_pool(int m, int n) {
  std::vector<DecPair> pool;
  for (int k = 0; k + 1 <= m && k <= n; k++) pool.push_back({k + 1, k, Dec::none});
  for (int k = 0; k <= m && k + 1 <= n; k++) pool.push_back({k, k + 1, Dec::none});
  for (int k = 1; k <= m && k <= n; k++) {
    pool.push_back({k, k, Dec::plus});
    pool.push_back({k, k, Dec::minus});
  }
  return pool;
}

std::vector<DecBipartition> enumerate_dp(int m, int n) {
  auto pool = shape_pool(m, n);
  std::vector<DecBipartition> out;
  DecBipartition cur;
  std::function<void(size_t, int, int)> rec = [&](size_t i, int rx, int ry) {
    if (rx == 0 && ry == 0) {
      DecBipartition g = cur;
      g.canonicalize();
      out.push_back(g);
      return;
    }
    if (i == pool.size()) return;
    // skip shape i entirely, or take one or more copies
    rec(i + 1, rx, ry);
    DecPair s = pool[i];
    int taken = 0;
    while (true) {
      taken++;
      rx -= s.x;
      ry -= s.y;
      if (rx < 0 || ry < 0) break;
      if (s.x == 0 && s.y == 0) break;  // cannot happen, safety
      cur.pairs.push_back(s);
      rec(i + 1, rx, ry);
    }
    for (int t = 0; t < taken - ((rx < 0 || ry < 0) ? 1 : 0); t++) cur.pairs.pop_back();
  };
  rec(0, m, n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DecBipartition> enumerate_rdp(int m, int n) {
  std::vector<DecBipartition> out;
  for (auto& g : enumerate_dp(m, n))
    if (is_relevant(g)) out.push_back(g);
  return out;
}

std::vector<DecBipartition> enumerate_osp(int m, int n) {
  std::vector<DecBipartition> out;
  for (auto& g : enumerate_dp(2 * m, 2 * n))
    if (is_orthosymplectic(g)) out.push_back(g);
  return out;
}

std::vector<DecBipartition> enumerate_rosp(int m, int n) {
  std::vector<DecBipartition> out;
  for (auto& g : enumerate_osp(m, n))
    if (is_relevant(g)) out.push_back(g);
  return out;
}

long long dim_orbit_pair(const DecBipartition& g) {
  auto [a, b] = moment_images(g);
  long long m = part_sum(a), n = part_sum(b);
  return (dim_orbit_gl(a) + dim_orbit_gl(b) + 2 * m * n) / 2 - clash_number(g);
}

long long dim_orbit_osp(const DecBipartition& g) {
  auto [a, b] = moment_images(g);
  long long twom = part_sum(a), twon = part_sum(b);
  long long num = dim_orbit_so(a) + dim_orbit_sp(b) + twom * twon - clash_number(g);
  if (num % 2 != 0) throw std::logic_error("odd orthosymplectic orbit dimension sum");
  return num / 2;
}

// ---------------------------------------------------------------------------

// zero-pad to common length, keep descending order
static bool aligned_parts(const Partition& a, const Partition& b,
                          std::vector<std::pair<int, int>>* out) {
  size_t len = std::max(a.size(), b.size());
  std::vector<std::pair<int, int>> al(len);
  for (size_t i = 0; i < len; i++) {
    al[i].first = i < a.size() ? a[i] : 0;
    al[i].second = i < b.size() ? b[i] : 0;
  }
  for (auto& [x, y] : al)
    if (x - y > 1 || y - x > 1) return false;
  if (out) *out = al;
  return true;
}

bool is_relevant_pair(const Partition& a, const Partition& b) {
  return aligned_parts(a, b, nullptr);
}

long long pair_multiplicity(const Partition& a, const Partition& b) {
  std::vector<std::pair<int, int>> al;
  if (!aligned_parts(a, b, &al)) return 0;
  std::map<int, long long> lambda;
  for (auto& [x, y] : al)
    if (x == y && x >= 1) lambda[x]++;
  long long prod = 1;
  for (auto& [k, l] : lambda) prod *= (l + 1);
  return prod;
}

std::vector<DecBipartition> fiber_rdp(const Partition& a, const Partition& b) {
  std::vector<DecBipartition> out;
  for (auto& g : enumerate_rdp(part_sum(a), part_sum(b)))
    if (moment_images(g) == std::make_pair(a, b)) out.push_back(g);
  return out;
}

std::optional<DecBipartition> fiber_rosp(const Partition& orth, const Partition& symp) {
  if (!is_orthogonal(orth)) throw std::invalid_argument("first partition not orthogonal");
  if (!is_symplectic(symp)) throw std::invalid_argument("second partition not symplectic");
  std::vector<std::pair<int, int>> al;
  if (!aligned_parts(orth, symp, &al)) return std::nullopt;
  // count aligned equal pairs per value; balance forces an even count split
  // half-and-half between the decorations
  std::map<int, int> eq;
  DecBipartition g;
  for (auto& [x, y] : al) {
    if (x == 0 && y == 0) continue;
    if (x == y) {
      eq[x]++;
    } else {
      g.pairs.push_back({x, y, Dec::none});
    }
  }
  for (auto& [k, c] : eq) {
    if (c % 2 != 0) return std::nullopt;
    for (int i = 0; i < c / 2; i++) {
      g.pairs.push_back({k, k, Dec::plus});
      g.pairs.push_back({k, k, Dec::minus});
    }
  }
  g.canonicalize();
  if (!is_orthosymplectic(g) || !is_relevant(g)) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------

static SignGroup parity_group(const Partition& p, int parity) {
  std::set<int> parts;
  for (int x : p)
    if (x % 2 == parity) parts.insert(x);
  SignGroup gr;
  for (int d : parts) gr.gens.push_back("a_" + std::to_string(d));
  return gr;
}

SignGroup sign_group_orthogonal(const Partition& p) { return parity_group(p, 1); }
SignGroup sign_group_symplectic(const Partition& p) { return parity_group(p, 0); }

// pairs of the diagram with odd x and even y, deduplicated, ascending
static std::vector<std::pair<int, int>> oe_pairs(const DecBipartition& g) {
  std::set<std::pair<int, int>> s;
  for (auto& p : g.pairs)
    if (p.x % 2 == 1 && p.y % 2 == 0) s.insert({p.x, p.y});
  return {s.begin(), s.end()};
}

SignGroup sign_group_diagram(const DecBipartition& g) {
  SignGroup gr;
  for (auto& [x, y] : oe_pairs(g))
    gr.gens.push_back("a_(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return gr;
}

std::vector<SignChar> all_characters(const SignGroup& gr) {
  size_t k = gr.gens.size();
  std::vector<SignChar> out;
  for (size_t mask = 0; mask < (size_t(1) << k); mask++) {
    SignChar c(k, 1);
    for (size_t i = 0; i < k; i++)
      if (mask & (size_t(1) << i)) c[i] = -1;
    out.push_back(c);
  }
  return out;
}

static int gen_index(const SignGroup& gr, const std::string& name) {
  for (size_t i = 0; i < gr.gens.size(); i++)
    if (gr.gens[i] == name) return (int)i;
  return -1;
}

std::vector<DiagramGenImage> restriction_map(const DecBipartition& g,
                                             const SignGroup& orth_gr,
                                             const SignGroup& symp_gr) {
  std::vector<DiagramGenImage> out;
  for (auto& [x, y] : oe_pairs(g)) {
    DiagramGenImage im;
    im.orth_index = gen_index(orth_gr, "a_" + std::to_string(x));  // x odd, > 0
    if (y > 0) im.symp_index = gen_index(symp_gr, "a_" + std::to_string(y));
    out.push_back(im);
  }
  return out;
}

std::vector<Quintuple> enumerate_rq(int m, int n) {
  std::vector<Quintuple> out;
  for (auto& g : enumerate_rosp(m, n)) {
    auto [go, gs] = moment_images(g);
    SignGroup orth_gr = sign_group_orthogonal(go);
    SignGroup symp_gr = sign_group_symplectic(gs);
    auto images = restriction_map(g, orth_gr, symp_gr);
    for (auto& co : all_characters(orth_gr))
      for (auto& cs : all_characters(symp_gr)) {
        bool ok = true;
        for (auto& im : images) {
          int prod = 1;
          if (im.orth_index >= 0) prod *= co[im.orth_index];
          if (im.symp_index >= 0) prod *= cs[im.symp_index];
          if (prod != 1) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back({g, go, co, gs, cs});
      }
  }
  return out;
}

}  // namespace theta
