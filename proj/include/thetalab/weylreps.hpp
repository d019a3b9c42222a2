#pragma once

// Exact character theory for the Weyl groups involved in the decomposition
// identities: symmetric group characters (Murnaghan-Nakayama), signed
// permutation group characters (wreath Murnaghan-Nakayama on bipartitions),
// concrete small groups with generator words, the nilpotent-orbit label
// tables for the orthogonal and symplectic families at small rank, and the
// permutation-module counting helpers for the plain matching module.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/matchings.hpp"
#include "thetalab/partitions.hpp"

namespace theta {

long long factorial(int k);
long long binom(int a, int b);

// ---------------------------------------------------------------------------
// symmetric group
// ---------------------------------------------------------------------------

// irreducible character value chi^lambda at the class of cycle type rho
long long sym_character(const Partition& lambda, const Partition& rho);
long long sym_dim(const Partition& lambda);  // hook length formula
long long sym_class_size(int k, const Partition& rho);
// cycle type of a plain (all-positive) permutation
Partition cycle_type(const SPerm& w);
// a canonical permutation with the given cycle type
SPerm perm_of_cycle_type(int k, const Partition& rho);

// ---------------------------------------------------------------------------
// signed permutation group on k slots
// ---------------------------------------------------------------------------

// (alpha; beta) with |alpha| + |beta| = k
using Bipartition = std::pair<Partition, Partition>;

std::vector<Bipartition> bipartitions(int k);
// conjugacy classes: (positive cycle type, negative cycle type)
std::vector<Bipartition> wb_classes(int k);
long long wb_class_size(int k, const Bipartition& cls);
long long wb_order(int k);  // 2^k k!
// signed cycle type of a signed permutation
Bipartition wb_class_of(const SPerm& w);
// irreducible character value at a class (wreath Murnaghan-Nakayama)
long long wb_character(const Bipartition& lab, const Bipartition& cls);
long long wb_dim(int k, const Bipartition& lab);
// squared norm of the restriction to the even-sign-count subgroup
long long wd_restriction_norm(int k, const Bipartition& lab);

// The concrete group with one generator word per element. Generators:
// 0..k-2 are the adjacent transpositions (i+1, i+2), generator k-1 is the
// sign flip of the last slot.
struct WBGroup {
  int k = 0;
  std::vector<SPerm> elements;
  std::map<SPerm, int> index;
  std::vector<std::vector<int>> words;   // in generator ids, identity = {}
  std::map<Bipartition, int> class_rep;  // class -> element id

  SPerm gen(int g) const;
  int num_gens() const { return k; }
};
WBGroup build_wb_group(int k);

// ---------------------------------------------------------------------------
// nilpotent orbit label tables (Springer rows) at small rank
// ---------------------------------------------------------------------------

// One family table: every (partition, component-group character) pair with
// the partition of the right parity type, mapped to its bipartition label or
// to nothing when the pair carries no label. Characters are indexed by the
// distinct odd (orthogonal) / even (symplectic) parts in ascending order,
// matching sign_group_orthogonal / sign_group_symplectic.
struct SpringerTable {
  int halfrank = 0;  // m for the orthogonal family O(2m), n for Sp(2n)
  bool orthogonal = false;
  std::map<std::pair<Partition, SignChar>, std::optional<Bipartition>> rows;

  const std::optional<Bipartition>& row(const Partition& p, const SignChar& chi) const;
};

// trivial-character row, shared symbol recipe (the orthogonal family swaps
// the two sides)
Bipartition trivial_springer_label(const Partition& lambda, bool orthogonal);

SpringerTable springer_orthogonal(int m);  // O(2m), supported m <= 3
SpringerTable springer_symplectic(int n);  // Sp(2n), supported n <= 3

// ---------------------------------------------------------------------------
// plain matching module counting
// ---------------------------------------------------------------------------

// number of matchings in PM(m,n) fixed by the permutation pair, optionally
// restricted to matchings of a given size (arcs = -1 means all sizes)
long long pm_fixed_count(int m, int n, const SPerm& w1, const SPerm& w2, int arcs = -1);
// the same count computed through cosets of the size-graded stabilizer
// subgroups (honest enumeration, no character theory)
long long pm_induced_count(int m, int n, const SPerm& w1, const SPerm& w2, int arcs);
// checks that the stabilizer of the size-i staircase matching is exactly
// S_{m-i} x (diagonal S_i) x S_{n-i}
bool pm_stabilizer_is_diagonal(int m, int n, int arcs);

}  // namespace theta
