#include "thetalab/linalg.hpp"

#include <algorithm>

namespace theta {

int int_rank(IntMat a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
  for (size_t i = 0; i < rows; i++)
    for (size_t j = 0; j < cols; j++) m[i][j] = a[i][j];

  // Bareiss: entries stay exact minors of the input
  __int128 prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) piv++;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; i++) {
      for (size_t j = c + 1; j < cols; j++)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    r++;
  }
  return (int)r;
}

uint64_t FpContext::primitive_root() const {
  if (p == 2) return 1;
  // factor p-1 (tiny inputs only)
  uint64_t n = p - 1;
  std::vector<uint64_t> fac;
  for (uint64_t d = 2; d * d <= n; d++)
    if (n % d == 0) {
      fac.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fac.push_back(n);
  for (uint64_t g = 2; g < p; g++) {
    bool ok = true;
    for (uint64_t f : fac)
      if (pow(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found (p not prime?)");
}

std::vector<int> fp_rref(const FpContext& F, FpMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; c++) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) piv++;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    uint64_t inv = F.inv(a[r][c]);
    for (size_t j = c; j < cols; j++) a[r][j] = F.mul(a[r][j], inv);
    for (size_t i = 0; i < rows; i++) {
      if (i == r || a[i][c] == 0) continue;
      uint64_t f = a[i][c];
      for (size_t j = c; j < cols; j++) a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
    }
    pivots.push_back((int)c);
    r++;
  }
  return pivots;
}

int fp_rank(const FpContext& F, FpMat a) { return (int)fp_rref(F, a).size(); }

std::vector<std::vector<uint64_t>> fp_nullspace(const FpContext& F, FpMat a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  auto pivots = fp_rref(F, a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint64_t>> basis;
  for (size_t free_c = 0; free_c < cols; free_c++) {
    if (is_pivot[free_c]) continue;
    std::vector<uint64_t> v(cols, 0);
    v[free_c] = 1;
    for (size_t pi = 0; pi < pivots.size(); pi++)
      v[pivots[pi]] = F.neg(a[pi][free_c]);
    basis.push_back(v);
  }
  return basis;
}

FpMat fp_identity(size_t k) {
  FpMat id(k, std::vector<uint64_t>(k, 0));
  for (size_t i = 0; i < k; i++) id[i][i] = 1;
  return id;
}

FpMat fp_mul(const FpContext& F, const FpMat& a, const FpMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  FpMat out(n, std::vector<uint64_t>(m, 0));
  for (size_t i = 0; i < n; i++)
    for (size_t t = 0; t < k; t++) {
      if (a[i][t] == 0) continue;
      uint64_t f = a[i][t];
      for (size_t j = 0; j < m; j++)
        out[i][j] = F.add(out[i][j], F.mul(f, b[t][j]));
    }
  return out;
}

FpMat fp_inverse(const FpContext& F, FpMat a) {
  size_t k = a.size();
  FpMat aug = a;
  FpMat id = fp_identity(k);
  for (size_t i = 0; i < k; i++)
    aug[i].insert(aug[i].end(), id[i].begin(), id[i].end());
  auto pivots = fp_rref(F, aug);
  if (pivots.size() != k || (size_t)pivots.back() != k - 1)
    throw std::domain_error("singular matrix");
  FpMat inv(k, std::vector<uint64_t>(k));
  for (size_t i = 0; i < k; i++)
    for (size_t j = 0; j < k; j++) inv[i][j] = aug[i][k + j];
  return inv;
}

bool fp_same_span(const FpContext& F, const std::vector<std::vector<uint64_t>>& a,
                  const std::vector<std::vector<uint64_t>>& b) {
  FpMat ma = a, mb = b, both;
  int ra = a.empty() ? 0 : fp_rank(F, ma);
  int rb = b.empty() ? 0 : fp_rank(F, mb);
  if (ra != rb) return false;
  both = a;
  both.insert(both.end(), b.begin(), b.end());
  int rboth = both.empty() ? 0 : fp_rank(F, both);
  return rboth == ra;
}

}  // namespace theta
