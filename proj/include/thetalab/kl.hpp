#pragma once

// Canonical self-dual bases of the orbit modules, computed by the raising
// recursion from the staircase base cases, together with the associated
// polynomials, the weighted graph encoding the generator action, and its
// strongly connected cells.

#include <set>
#include <vector>

#include "thetalab/hecke.hpp"

namespace theta {

struct KLTable {
  ModelTables t;               // own copy: the table stays valid when moved around
  std::vector<ModVec> cbasis;  // canonical basis elements in indicator coordinates

  // polynomial attached to (beta, sigma), normalized so the leading
  // coordinate is 1: v^{dim sigma} * coordinate(beta); zero when beta is not
  // in the closure
  Laurent poly(int beta, int sigma) const;
  // closure order recovered from the support of the canonical basis
  bool closure_leq(int beta, int sigma) const;
  // expand a vector through the canonical basis (exact, by descending dim)
  std::vector<Laurent> in_cbasis(const ModVec& x) const;
};

// build the table; every structural invariant (nonnegativity, degree bound,
// parity, constant term, path independence over all raising predecessors)
// is asserted during the computation
KLTable build_kl(const ModelTables& t);

struct WGraphEdge {
  int from = 0, to = 0;
  long long mu = 0;
  bool operator==(const WGraphEdge&) const = default;
  bool operator<(const WGraphEdge& o) const {
    if (from != o.from) return from < o.from;
    if (to != o.to) return to < o.to;
    return mu < o.mu;
  }
};

struct WGraph {
  std::vector<std::set<int>> descents;  // per label, generator ids
  std::vector<WGraphEdge> edges;        // sorted
  std::vector<std::vector<int>> cells;  // strongly connected components,
                                        // each sorted, listed in a canonical order
};

// the graph of a single model; verifies that the graph action formula
// reproduces T_s on every canonical basis element before returning
WGraph build_wgraph(const ModelTables& t, const KLTable& kl);

// strongly connected components of the edge set
std::vector<std::vector<int>> graph_cells(int nvertices, const std::vector<WGraphEdge>& edges);

}  // namespace theta
