#pragma once

// Brute-force finite-field side of the story: enumerate the matrix variety
// attached to a model over F_q, cut it into Borel-pair orbits, and realize
// the Hecke generators as honest convolution operators on orbit indicator
// functions.  A small exact cyclotomic type supports the additive character
// sums of the finite Fourier transform.  Everything in this file is an
// independent numerical check of the symbolic layer; nothing here reads the
// symbolic answer before producing its own.

#include <cstdint>
#include <map>
#include <vector>

#include "thetalab/hecke.hpp"
#include "thetalab/linalg.hpp"
#include "thetalab/matchings.hpp"

namespace theta {

// one point of the variety: a rows x cols matrix over F_q (rows indexed by
// the target space basis, columns by the source basis)
using FqPoint = std::vector<std::vector<uint64_t>>;

struct FqSpace {
  ModelTables t;  // the symbolic tables of the same model
  long long q = 0;
  FpContext F{3};
  int rows = 0, cols = 0;
  std::vector<FqPoint> points;
  std::map<FqPoint, int> index;
  std::vector<int> orbit_of;          // point id -> label id
  std::vector<long long> orbit_size;  // label id -> number of points

  int point_id(const FqPoint& x) const;  // throws when x is not on the variety
};

// refuse to enumerate more candidate matrices than this
long long space_budget();

// enumerate the variety (isotropy-filtered in the signed models) and its
// orbits under the Borel generators of both sides; requires odd prime q.
// Throws unless the orbits biject with the combinatorial labels through the
// standard representatives.
FqSpace build_space(const ModelTables& t, long long q);

// the invariant bilinear form on the target space of a signed model
// (alternating in the first model, symmetric in the second)
FpMat target_form(const OrbitModel& mod, const FpContext& F);

// generators of the upper Borel subgroup of one side, as matrices: the torus
// generators followed by the simple root elements at parameter 1
std::vector<FpMat> borel_group_gens(const OrbitModel& mod, const FpContext& F, GenSide side);

// order of the matrix group generated by gens (plain BFS closure); throws
// when the group grows past the budget
long long matrix_group_order(const FpContext& F, const std::vector<FpMat>& gens,
                             long long budget);

// the double-coset representative x_alpha(tval) * sdot attached to a Hecke
// generator; source-side generators give cols x cols matrices, target-side
// generators rows x rows
FpMat oracle_rep(const FqSpace& s, const Generator& g, long long tval);

// convolution action on indicator functions: M[beta][alpha] is the
// coefficient of indicator(beta) in T_g * indicator(alpha), where the target
// action is (T f)(x) = sum_t f(rep_t^{-1} x) and the source action is
// (f T)(x) = sum_t f(x rep_t).  Throws if some image fails to be constant on
// orbits.
std::vector<std::vector<long long>> convolution_matrix(const FqSpace& s, const Generator& g);

// the symbolic generator action in the same indicator basis, evaluated at
// v^2 = q
std::vector<std::vector<long long>> symbolic_matrix_at_q(const ModelTables& t,
                                                         const Generator& g, long long q);

// ---------------------------------------------------------------------------
// exact cyclotomic integers Z[zeta_p] for prime p, stored on the basis
// 1, zeta, ..., zeta^{p-1} with the canonical representative having last
// coordinate zero (the basis vectors sum to zero)

struct Cyc {
  long long p = 0;
  std::vector<long long> c;

  static Cyc zero(long long p);
  static Cyc integer(long long p, long long v);
  static Cyc root(long long p, long long k);  // zeta^k

  Cyc& operator+=(const Cyc& o);
  Cyc& add_root(long long k, long long mult = 1);  // += mult * zeta^k
  Cyc scaled(long long v) const;
  Cyc rotated(long long k) const;  // * zeta^k
  void reduce();
  bool operator==(const Cyc& o) const = default;
};

// ---------------------------------------------------------------------------
// finite Fourier transform between a type II space X = Hom(F^m, F^n) and its
// pairing partner Y = Hom(F^n, F^m):  (F f)(y) = sum_x zeta^{tr(y x)} f(x)

// tr(a b) mod p for a rows_a x cols_a, b cols_a x rows_a
uint64_t pairing_trace(const FpContext& F, const FqPoint& a, const FqPoint& b);

// Fourier transform of the indicator of a point set, evaluated at one y
Cyc fourier_indicator_at(const FqSpace& xs, const std::vector<int>& support, const FqPoint& y);

// full transform of a Cyc-valued function on `from`, indexed by the points
// of `to`
std::vector<Cyc> fourier_cyc_full(const FqSpace& from, const FqSpace& to,
                                  const std::vector<Cyc>& f);

// all points whose corner-rank table is dominated by the representative's
// (the orbit closure, as a point set); unsigned model only
std::vector<int> closure_points(const FqSpace& s, const Label& lab);

// annihilator of the span of the given xs-points under the trace pairing,
// enumerated as a sorted list of ys-point ids
std::vector<int> perp_points(const FqSpace& xs, const std::vector<int>& support,
                             const FqSpace& ys);

// generator convolution on Cyc-valued functions (same representatives as
// convolution_matrix)
std::vector<Cyc> convolve_cyc(const FqSpace& s, const Generator& g, const std::vector<Cyc>& f);

}  // namespace theta
