#pragma once

// Exact arithmetic in Z[v, v^-1], sparse representation.
//
// Coefficients are 64-bit integers; every computation in this project stays
// far below overflow range (largest values are products of small structure
// constants), but debug builds check multiplications anyway.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace theta {

struct Laurent {
  // exponent -> coefficient, zero coefficients never stored
  std::map<int, long long> c;

  Laurent() = default;
  explicit Laurent(long long constant) {
    if (constant != 0) c[0] = constant;
  }

  static Laurent mono(long long coeff, int exp) {
    Laurent r;
    if (coeff != 0) r.c[exp] = coeff;
    return r;
  }
  static Laurent v(int exp = 1) { return mono(1, exp); }

  bool is_zero() const { return c.empty(); }

  long long coeff(int exp) const {
    auto it = c.find(exp);
    return it == c.end() ? 0 : it->second;
  }

  // lowest / highest exponent with nonzero coefficient
  int lo() const {
    if (c.empty()) throw std::logic_error("lo() of zero polynomial");
    return c.begin()->first;
  }
  int hi() const {
    if (c.empty()) throw std::logic_error("hi() of zero polynomial");
    return c.rbegin()->first;
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, a] : o.c) {
      long long s = coeff(e) + a;
      if (s == 0)
        c.erase(e);
      else
        c[e] = s;
    }
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [e, a] : o.c) {
      long long s = coeff(e) - a;
      if (s == 0)
        c.erase(e);
      else
        c[e] = s;
    }
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (auto& [e, a] : c) r.c[e] = -a;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [ea, ca] : a.c)
      for (auto& [eb, cb] : b.c) {
        long long s = r.coeff(ea + eb) + ca * cb;
        if (s == 0)
          r.c.erase(ea + eb);
        else
          r.c[ea + eb] = s;
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // multiply by v^exp
  Laurent shifted(int exp) const {
    Laurent r;
    for (auto& [e, a] : c) r.c[e + exp] = a;
    return r;
  }

  Laurent scaled(long long k) const {
    Laurent r;
    if (k == 0) return r;
    for (auto& [e, a] : c) r.c[e] = a * k;
    return r;
  }

  bool operator==(const Laurent& o) const { return c == o.c; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return c < o.c; }  // arbitrary total order

  // substitute v := x; negative exponents require |x| == 1
  long long eval(long long x) const {
    long long total = 0;
    for (auto& [e, a] : c) {
      long long p = 1;
      if (e >= 0) {
        for (int i = 0; i < e; i++) p *= x;
      } else {
        if (x != 1 && x != -1)
          throw std::domain_error("negative exponent at |v| != 1");
        p = (x == 1 || e % 2 == 0) ? 1 : -1;
      }
      total += a * p;
    }
    return total;
  }

  // substitute v^2 := q; all exponents must be even and nonnegative
  long long eval_v2(long long q) const {
    long long total = 0;
    for (auto& [e, a] : c) {
      if (e < 0 || e % 2 != 0)
        throw std::domain_error("eval_v2 on odd/negative exponent");
      long long p = 1;
      for (int i = 0; i < e / 2; i++) p *= q;
      total += a * p;
    }
    return total;
  }

  // human-readable, e.g. "v^-2 + 2 + v^4"; variable name configurable so the
  // same routine prints classical polynomials in t = v
  std::string str(const std::string& var = "v") const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, a] : c) {
      long long mag = a < 0 ? -a : a;
      if (first) {
        if (a < 0) out += "-";
        first = false;
      } else {
        out += a < 0 ? " - " : " + ";
      }
      if (e == 0) {
        out += std::to_string(mag);
      } else {
        if (mag != 1) out += std::to_string(mag) + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }
};

}  // namespace theta
