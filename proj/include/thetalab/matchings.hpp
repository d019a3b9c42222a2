#pragma once

// Orbit labels for the three module models and their generator combinatorics:
// partial matchings (plain and signed), the per-generator local type of each
// orbit (toral / lowering / raising), companion orbits under the reflection
// action, minimal orbits with their closure staircases, and the two
// independent dimension computations (graph distance from a minimal orbit,
// and the rank of the infinitesimal orbit map at a representative).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace theta {

// A partial matching between source slots 1..src_rank and target slots
// 1..tgt_rank; in the signed models a source may be matched to a negative
// target. Arcs are kept sorted by source. Canonical string form "1>-2, 3>1"
// with "{}" for the empty matching.
struct Label {
  std::vector<std::pair<int, int>> arcs;

  void canonicalize();
  bool operator==(const Label&) const = default;
  // enumeration order: fewer arcs first, then lexicographic
  bool operator<(const Label& o) const;
  std::string str() const;
  static Label parse(const std::string& text);

  std::optional<int> target_of(int source) const;   // signed target
  std::optional<int> source_of(int target) const;   // signed source (see below)
};

enum class ModelKind : uint8_t {
  TypeII,   // sources [m], targets [n], unsigned
  TypeI_M1, // sources [m], targets +-[n]
  TypeI_M2  // sources [n], targets +-[m]
};

enum class GenSide : uint8_t { Source, Target };

struct Generator {
  GenSide side;
  int index;       // 1-based; adjacent transposition (index, index+1), or the
                   // model-specific last generator
  std::string name;
  bool operator==(const Generator&) const = default;
};

enum class LocalType : uint8_t { Toral, Lower, Raise };
char local_type_char(LocalType t);  // 'G', 'D', 'U' style printing

// a signed permutation of 1..k: img[i-1] = image of +i, with img[-...] forced
// by oddness; plain permutations have all images positive
struct SPerm {
  std::vector<int> img;
  static SPerm identity(int k);
  static SPerm transposition(int k, int a, int b);  // a,b signed slots
  static SPerm sign_flip(int k, int a);             // negate slot a
  int apply(int x) const;  // x signed nonzero
  SPerm compose(const SPerm& then) const;           // first *this, then `then`
  SPerm inverse() const;
  bool operator==(const SPerm&) const = default;
  bool operator<(const SPerm& o) const { return img < o.img; }
};

struct OrbitModel {
  ModelKind kind;
  int src_rank;  // number of source slots
  int tgt_rank;  // number of target slots (sign pairs in the signed models)

  static OrbitModel type2(int m, int n);
  // arguments are the dual-pair ranks (m, n) in both factory functions; the
  // second model's label set lives on the swapped ranks
  static OrbitModel type1_model1(int m, int n);
  static OrbitModel type1_model2(int n, int m);  // sources [n], targets +-[m]

  bool signed_targets() const { return kind != ModelKind::TypeII; }

  std::vector<Label> enumerate() const;
  std::vector<Generator> generators() const;

  LocalType classify(const Generator& g, const Label& lab) const;
  // the companion orbit s * lab (equal to lab exactly when the type is toral)
  Label star(const Generator& g, const Label& lab) const;
  // action of an arbitrary pair of (signed) permutations on a label
  Label star(const SPerm& on_sources, const SPerm& on_targets, const Label& lab) const;
  // the reflection attached to a generator, as a permutation pair
  std::pair<SPerm, SPerm> reflection(const Generator& g) const;

  // the extra sign-flip generator of the full target group in the first
  // signed model (flips target tgt_rank); used by the bimodule layer
  Label flip_last_target(const Label& lab) const;
};

// Minimal orbits carry a staircase closure description.
struct MinimalOrbit {
  Label label;
  int size;        // number of arcs
  bool minus_leg;  // second ruling variant in the second signed model
  long long dim;   // arcs*(arcs+1)/2
  bool contains(const OrbitModel& mod, const Label& beta) const;  // closure test
};

// the expected staircase labels for a model (including the second-ruling one
// when present)
std::vector<MinimalOrbit> expected_minimal_orbits(const OrbitModel& mod);

// Precomputed combinatorial data for one model instance.
struct ModelTables {
  OrbitModel mod;
  std::vector<Label> labels;                  // enumeration order
  std::map<Label, int> index;
  std::vector<Generator> gens;
  std::vector<std::vector<LocalType>> type_of;  // [gen][label]
  std::vector<std::vector<int>> star_of;        // [gen][label] -> label id
  std::vector<long long> dim;                   // orbit dimension
  std::vector<MinimalOrbit> minimals;           // detected == expected
  std::vector<std::set<int>> descents;          // gens with type Toral/Raise

  int id(const Label& l) const;
};

ModelTables build_tables(const OrbitModel& mod);

// expected number of labels: sum_k C(m,k) C(n,k) k! (times 2^k when signed)
long long label_count(int src_rank, int tgt_rank, bool signed_targets);

// rank of the infinitesimal orbit map at the representative of lab: the
// second, independent route to the orbit dimension
long long dim_by_stabilizer(const OrbitModel& mod, const Label& lab);

// heart labels of the first signed model: both-side staircases with i
// positive and j negative legs, i + j <= min(src_rank, tgt_rank)
Label heart_label(const OrbitModel& mod, int i, int j);

// the 0/1 matrix representing the orbit of lab: one column per source slot,
// rows indexed by the target space basis (f_1..f_t, f_-t..f_-1 in the signed
// models, f_1..f_t otherwise)
std::vector<std::vector<long long>> representative_matrix(const OrbitModel& mod,
                                                          const Label& lab);
int target_space_dim(const OrbitModel& mod);
// row index of the signed target basis vector
int target_row(const OrbitModel& mod, int t);

// bases of the Borel subalgebras acting on the two sides (upper-triangular
// matrices on the source side; upper-triangular form-preserving matrices on
// the target side in the signed models)
std::vector<std::vector<std::vector<long long>>> borel_basis_source(const OrbitModel& mod);
std::vector<std::vector<std::vector<long long>>> borel_basis_target(const OrbitModel& mod);

}  // namespace theta
