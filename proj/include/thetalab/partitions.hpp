#pragma once

// Orbit combinatorics for the dual pairs: integer partitions with
// orthogonal/symplectic parity conditions, decorated bipartitions indexing
// nilpotent orbits of the small space, moment-map images, component-group
// sign characters, and the enumeration of the parameter quintuples that
// appear on the representation side of the correspondence.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace theta {

// weakly decreasing positive parts
using Partition = std::vector<int>;

Partition normalize_partition(std::vector<int> parts);  // sort desc, drop zeros
int part_sum(const Partition& p);
Partition transpose(const Partition& p);
std::vector<Partition> partitions_of(int n);

// parity conditions on multiplicities
bool is_orthogonal(const Partition& p);  // even parts have even multiplicity
bool is_symplectic(const Partition& p);  // odd parts have even multiplicity
std::vector<Partition> orthogonal_partitions(int n);
std::vector<Partition> symplectic_partitions(int n);

// dimension of the nilpotent orbit with Jordan type p inside gl_N / so_N / sp_N
long long dim_orbit_gl(const Partition& p);
long long dim_orbit_so(const Partition& p);
long long dim_orbit_sp(const Partition& p);

// ---------------------------------------------------------------------------
// decorated bipartitions
// ---------------------------------------------------------------------------

enum class Dec : uint8_t { none, plus, minus };

struct DecPair {
  int x = 0;
  int y = 0;
  Dec dec = Dec::none;
  auto operator<=>(const DecPair&) const = default;
};

// admissible pair shapes: (k+1,k) and (k,k+1) undecorated with k >= 0,
// (k,k) with a +/- decoration and k >= 1
bool valid_dec_pair(const DecPair& p);

struct DecBipartition {
  std::vector<DecPair> pairs;  // kept sorted descending for canonical form

  void canonicalize();
  int sum_x() const;
  int sum_y() const;
  bool operator==(const DecBipartition&) const = default;
  bool operator<(const DecBipartition& o) const { return pairs < o.pairs; }
  std::string str() const;
};

// number of adjacent ascent/descent clashes: sum over k of
// mult(k+1,k) * mult(k,k+1); zero iff the diagram is relevant
long long clash_number(const DecBipartition& g);
bool is_relevant(const DecBipartition& g);

// balance + parity conditions carving out the orthosymplectic diagrams:
// each (k,k)+ paired with an equal number of (k,k)-, and for even k the
// unequal pairs (k,k+1), (k,k-1) occur with even multiplicity
bool is_orthosymplectic(const DecBipartition& g);

// projection to the pair of moment-map images (x-parts, y-parts)
std::pair<Partition, Partition> moment_images(const DecBipartition& g);

// full enumerations at bidegree (m, n) = (sum_x, sum_y)
std::vector<DecBipartition> enumerate_dp(int m, int n);
std::vector<DecBipartition> enumerate_rdp(int m, int n);
// arguments are the ranks of the metaplectic/orthogonal factors: diagrams
// have sum_x = 2m, sum_y = 2n
std::vector<DecBipartition> enumerate_osp(int m, int n);
std::vector<DecBipartition> enumerate_rosp(int m, int n);

// orbit dimension of the diagram inside the relevant cone:
// bilinear-pair case and the orthosymplectic case
long long dim_orbit_pair(const DecBipartition& g);  // Hom-Hom cone
long long dim_orbit_osp(const DecBipartition& g);   // metaplectic cone

// ---------------------------------------------------------------------------
// matching partitions across the correspondence
// ---------------------------------------------------------------------------

// true iff the zero-padded, sorted parts can be aligned with |x_i - y_i| <= 1
bool is_relevant_pair(const Partition& a, const Partition& b);

// product over k of (lambda_k + 1) where lambda_k = number of aligned (k,k)
// pairs; zero when the pair is not relevant
long long pair_multiplicity(const Partition& a, const Partition& b);

// all relevant diagrams with the given moment images
std::vector<DecBipartition> fiber_rdp(const Partition& a, const Partition& b);
// the unique orthosymplectic relevant diagram over an orthogonal/symplectic
// pair, when it exists
std::optional<DecBipartition> fiber_rosp(const Partition& orth, const Partition& symp);

// ---------------------------------------------------------------------------
// component groups and sign characters
// ---------------------------------------------------------------------------

// an elementary abelian 2-group with one labelled generator per entry
struct SignGroup {
  std::vector<std::string> gens;  // canonical order (ascending by label value)
};

SignGroup sign_group_orthogonal(const Partition& p);  // generators a_d, d odd part
SignGroup sign_group_symplectic(const Partition& p);  // generators a_d, d even part
// generators a_(x,y) over the pairs of g with x odd, y even (incl. y = 0)
SignGroup sign_group_diagram(const DecBipartition& g);

using SignChar = std::vector<int>;  // one entry +1/-1 per generator

std::vector<SignChar> all_characters(const SignGroup& gr);

// value of the generator a_(x,y) of the diagram group under the pair of
// characters pulled back from the moment images: index of a_x among the
// orthogonal generators and a_y among the symplectic ones (-1 when the part
// is absent or zero, in which case the factor is trivial)
struct DiagramGenImage {
  int orth_index = -1;
  int symp_index = -1;
};
std::vector<DiagramGenImage> restriction_map(const DecBipartition& g,
                                             const SignGroup& orth_gr,
                                             const SignGroup& symp_gr);

struct Quintuple {
  DecBipartition gamma;
  Partition g_orth;  // orthogonal moment image (x side, size 2m)
  SignChar chi_orth;
  Partition g_symp;  // symplectic moment image (y side, size 2n)
  SignChar chi_symp;
  bool operator==(const Quintuple&) const = default;
};

// all compatible quintuples at metaplectic/orthogonal ranks (m, n):
// gamma orthosymplectic relevant with images (g_orth, g_symp) and the two
// characters agreeing through the diagram's component group
std::vector<Quintuple> enumerate_rq(int m, int n);

}  // namespace theta
