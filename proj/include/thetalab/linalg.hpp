#pragma once

// Small exact linear-algebra helpers shared by the dimension cross-checks,
// the conormal-space computation and the finite-field oracle:
//  - integer matrix rank by fraction-free (Bareiss) elimination, exact over Q
//  - dense matrices over a prime field F_p with rank / nullspace / solve

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace theta {

using IntMat = std::vector<std::vector<long long>>;

// exact rank over the rationals; intermediate values are minors of the input,
// kept in 128-bit integers (inputs in this project are tiny)
int int_rank(IntMat a);

// ---------------------------------------------------------------------------

struct FpContext {
  uint64_t p;
  explicit FpContext(uint64_t prime) : p(prime) {
    if (prime < 2 || prime >= (uint64_t(1) << 31))
      throw std::invalid_argument("prime out of supported range");
  }
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
  uint64_t neg(uint64_t a) const { return (p - a % p) % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return pow(a, p - 2);
  }
  uint64_t from_int(long long v) const {
    long long r = v % (long long)p;
    if (r < 0) r += (long long)p;
    return (uint64_t)r;
  }
  // a multiplicative generator (smallest); p is assumed prime
  uint64_t primitive_root() const;
};

using FpMat = std::vector<std::vector<uint64_t>>;

int fp_rank(const FpContext& F, FpMat a);
// basis of the right nullspace {x : a x = 0}
std::vector<std::vector<uint64_t>> fp_nullspace(const FpContext& F, FpMat a);
// row-reduce to reduced row echelon form, in place; returns pivot columns
std::vector<int> fp_rref(const FpContext& F, FpMat& a);
FpMat fp_mul(const FpContext& F, const FpMat& a, const FpMat& b);
FpMat fp_identity(size_t k);
FpMat fp_inverse(const FpContext& F, FpMat a);  // throws if singular

// do two lists of row vectors span the same subspace?
bool fp_same_span(const FpContext& F, const std::vector<std::vector<uint64_t>>& a,
                  const std::vector<std::vector<uint64_t>>& b);

}  // namespace theta
