#pragma once

// The transform layer: the cyclic-shift map on subset pairs, the stack
// bijection onto matchings whose conormal behaviour it predicts, the
// linear-algebra transform on matching labels (annihilator of the tangent
// space at a representative, identified by invariant corner ranks), its
// signed extension, and the glued module structure tying the two signed
// models together.

#include <cstdint>
#include <set>
#include <vector>

#include "thetalab/kl.hpp"
#include "thetalab/matchings.hpp"

namespace theta {

// (I, J) with I inside [m], J inside [n], |I| = |J|; both kept ascending
struct SubsetPair {
  std::vector<int> I, J;
  bool operator==(const SubsetPair&) const = default;
  bool operator<(const SubsetPair& o) const {
    if (I != o.I) return I < o.I;
    return J < o.J;
  }
};

std::vector<SubsetPair> enumerate_pp(int m, int n);

// closed-form transform on subset pairs, landing in the swapped ranks:
// Q = (J+1) inside [n], plus 1 when 1 is not in I;
// P = (I-1) inside [m], plus m when n is not in J
SubsetPair psi_bullet(int m, int n, const SubsetPair& ij);

// the stack bijection from subset pairs to matchings
Label stack_matching(int m, int n, const SubsetPair& ij);

// orbit of a matrix under the two triangular groups, recovered from the
// complete family of corner ranks (rows >= i, cols <= j)
Label identify_orbit_by_ranks(int src_rank, int tgt_rank,
                              const std::vector<std::vector<uint64_t>>& mat, uint64_t p);

struct TransformOptions {
  uint64_t seed = 0x5eed'c0de'1234'5678ull;
  int samples = 5;
};

// generic annihilator transform PM(m,n) -> PM(n,m): basis of the annihilator
// of the tangent space at the representative, sampled over a large prime
// field; samples must agree (the prime ladder grows on disagreement)
Label psi_transform(int m, int n, const Label& sigma, const TransformOptions& = {});

// the conormal variety's base orbit, as a row-space basis mod p, for callers
// that need the subspace itself
std::vector<std::vector<uint64_t>> conormal_basis(int m, int n, const Label& sigma,
                                                  uint64_t p);

// signed transform SPM(m,n) -> SPM(n,m), by splitting off the negative block
// and transforming the positive block through psi on the complement slots
Label phi_transform(int m, int n, const Label& sigma, const TransformOptions& = {});

// conjugated sign flip on SPM(m,n): phi^{-1} . (flip of target m) . phi
Label iota_transform(int m, int n, const Label& sigma, const TransformOptions& = {});

// ---------------------------------------------------------------------------
// glued structure on the pair of signed models
// ---------------------------------------------------------------------------

struct GluedTables {
  int m = 0, n = 0;
  ModelTables t1;  // first model, labels on ranks (m, n)
  KLTable kl1;
  WGraph g1;
  ModelTables t2;  // second model, labels on the swapped ranks
  KLTable kl2;
  WGraph g2;

  std::vector<int> phi;       // t1 label id -> t2 label id
  std::vector<int> phi_inv;   // inverse
  std::vector<int> iota;      // t1 label id -> t1 label id (involution)

  // combined generator names: s1..sm then s'1..s'n, minus the ones that do
  // not exist at the given ranks (no sm when m = 1)
  std::vector<std::string> gen_names;
  std::vector<std::set<int>> descents;  // per t1 label, ids into gen_names
  std::vector<WGraphEdge> edges;        // on t1 labels
  std::vector<std::vector<int>> cells;

  int gen_id(const std::string& name) const;
};

// Builds both models, the transform table and the glued graph. Checks, as
// hard errors: transform bijectivity, descent transport across the shared
// generators, exact intertwining of every shared generator by the canonical
// basis map, mu agreement on shared edges, equivariance of the second
// model's canonical basis under the last-target flip, and the sign-flip
// symmetry of the glued graph (descent swap and edge preservation).
GluedTables build_glued(int m, int n, const TransformOptions& = {});

// matrices over Z[v,v^-1] of the generator action in canonical-basis
// coordinates on the glued module; `name` is a combined generator name or
// "t" for the length-zero generator (acting by the iota permutation)
std::vector<std::vector<Laurent>> glued_gen_matrix(const GluedTables& g,
                                                   const std::string& name);

// the same operator written on the indicator basis of the first model
std::vector<std::vector<Laurent>> glued_tm_on_indicators(const GluedTables& g);

}  // namespace theta
