#include "thetalab/kl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace theta {

Laurent KLTable::poly(int beta, int sigma) const {
  return cbasis[sigma].coeff(beta).shifted((int)t.dim[sigma]);
}

bool KLTable::closure_leq(int beta, int sigma) const {
  return cbasis[sigma].c.count(beta) > 0;
}

std::vector<Laurent> KLTable::in_cbasis(const ModVec& x) const {
  std::vector<Laurent> out(t.labels.size());
  ModVec rem = x;
  // peel coordinates from the top of the closure order; the canonical basis
  // is triangular with leading coefficient v^{-dim}
  std::vector<int> order(t.labels.size());
  for (size_t i = 0; i < order.size(); i++) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return t.dim[a] > t.dim[b]; });
  for (int id : order) {
    Laurent c = rem.coeff(id);
    if (c.is_zero()) continue;
    Laurent f = c.shifted((int)t.dim[id]);  // coefficient of the basis element
    out[id] = f;
    rem -= cbasis[id].scaled(f);
  }
  for (auto& [id, c] : rem.c)
    if (!c.is_zero()) throw std::logic_error("canonical-basis expansion left a remainder");
  return out;
}

static void check_poly_invariants(const ModelTables& t, int beta, int sigma,
                                  const Laurent& p) {
  if (p.is_zero()) return;
  long long gap = t.dim[sigma] - t.dim[beta];
  if (beta != sigma) {
    if (gap <= 0) throw std::logic_error("closure support above the orbit dimension");
    if (p.hi() > gap - 1) throw std::logic_error("polynomial degree bound violated");
  }
  if (p.lo() < 0) throw std::logic_error("polynomial has negative exponents");
  if (p.coeff(0) != 1) throw std::logic_error("polynomial constant term is not 1");
  for (auto& [e, c] : p.c) {
    if (e % 2 != 0) throw std::logic_error("polynomial with odd-degree term");
    if (c < 0) throw std::logic_error("polynomial with negative coefficient");
  }
}

KLTable build_kl(const ModelTables& t) {
  KLTable kl;
  kl.t = t;
  size_t L = t.labels.size();
  kl.cbasis.assign(L, ModVec());
  std::vector<bool> done(L, false);

  // base cases: indicator sums over the staircase closures
  for (auto& mo : t.minimals) {
    int id = t.index.at(mo.label);
    ModVec base;
    for (size_t b = 0; b < L; b++)
      if (mo.contains(t.mod, t.labels[b])) base.add((int)b, Laurent::v(-(int)mo.dim));
    kl.cbasis[id] = base;
    done[id] = true;
  }

  // process labels by increasing dimension
  std::vector<int> order(L);
  for (size_t i = 0; i < L; i++) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (t.dim[a] != t.dim[b]) return t.dim[a] < t.dim[b];
    return a < b;
  });

  for (int sigma : order) {
    if (done[sigma]) continue;
    // all raising predecessors (s, sigma') with sigma = s * sigma'
    std::vector<std::pair<int, int>> preds;
    for (size_t g = 0; g < t.gens.size(); g++)
      if (t.type_of[g][sigma] == LocalType::Raise)
        preds.push_back({(int)g, t.star_of[g][sigma]});
    if (preds.empty())
      throw std::logic_error("non-minimal orbit with no raising predecessor: " +
                             t.labels[sigma].str());

    bool first = true;
    for (auto& [g, below] : preds) {
      if (!done[below]) throw std::logic_error("predecessor not yet computed");
      ModVec d = act_Ts_plus_one(t, g, kl.cbasis[below]).scaled(Laurent::v(-1));
      // subtract lower canonical terms, top dimension first
      std::vector<std::pair<long long, int>> support;
      for (auto& [id, c] : d.c)
        if (id != sigma) support.push_back({t.dim[id], id});
      std::sort(support.begin(), support.end(),
                [](auto& a, auto& b) { return a.first > b.first; });
      for (auto& [dim, beta] : support) {
        if (dim >= t.dim[sigma])
          throw std::logic_error("raising step left support at or above the new orbit");
        long long mu = d.coeff(beta).coeff(-(int)dim);
        if (mu < 0) throw std::logic_error("negative correction multiplicity");
        if (mu == 0) continue;
        if (!t.descents[beta].count(g))
          throw std::logic_error("correction at a label without the generator descent");
        d -= kl.cbasis[beta].scaled(Laurent(mu));
      }
      if (d.coeff(sigma) != Laurent::v(-(int)t.dim[sigma]))
        throw std::logic_error("leading coordinate of the canonical element is wrong");
      if (first) {
        kl.cbasis[sigma] = d;
        first = false;
      } else if (!(d == kl.cbasis[sigma])) {
        throw std::logic_error("canonical element depends on the raising path at " +
                               t.labels[sigma].str());
      }
    }
    done[sigma] = true;
  }

  // structural invariants of every polynomial
  for (size_t sigma = 0; sigma < L; sigma++) {
    if (kl.cbasis[sigma].coeff((int)sigma) != Laurent::v(-(int)t.dim[sigma]))
      throw std::logic_error("diagonal coordinate missing");
    for (auto& [beta, c] : kl.cbasis[sigma].c)
      check_poly_invariants(t, beta, (int)sigma, kl.poly(beta, (int)sigma));
  }
  return kl;
}

// ---------------------------------------------------------------------------

WGraph build_wgraph(const ModelTables& t, const KLTable& kl) {
  WGraph g;
  g.descents = t.descents;
  size_t L = t.labels.size();

  for (size_t a = 0; a < L; a++)
    for (size_t b = 0; b < L; b++) {
      if (a == b) continue;
      // mu is read from the polynomial of the lower label inside the upper
      int lo = (int)a, hi = (int)b;
      if (t.dim[lo] == t.dim[hi]) continue;
      if (t.dim[lo] > t.dim[hi]) std::swap(lo, hi);
      Laurent p = kl.poly(lo, hi);
      if (p.is_zero()) continue;
      long long gap = t.dim[hi] - t.dim[lo];
      if (p.hi() != gap - 1) continue;  // top-degree coefficient absent
      long long mu = p.coeff((int)gap - 1);
      // edge a -> b requires the descent sets not to nest
      if (!std::includes(t.descents[a].begin(), t.descents[a].end(),
                         t.descents[b].begin(), t.descents[b].end()))
        g.edges.push_back({(int)a, (int)b, mu});
    }
  std::sort(g.edges.begin(), g.edges.end());

  // validate the action formula on every generator and basis element:
  //   T_s C_a = v^2 C_a                                        s in D(a)
  //   T_s C_a = -C_a + v * sum over edges a->b with s in D(b)  otherwise
  std::vector<std::vector<const WGraphEdge*>> out_edges(L);
  for (auto& e : g.edges) out_edges[e.from].push_back(&e);
  for (size_t s = 0; s < t.gens.size(); s++)
    for (size_t a = 0; a < L; a++) {
      ModVec lhs = act_Ts(t, (int)s, kl.cbasis[a]);
      ModVec rhs;
      if (t.descents[a].count((int)s)) {
        rhs = kl.cbasis[a].scaled(Laurent::v(2));
      } else {
        rhs -= kl.cbasis[a];
        for (auto* e : out_edges[a])
          if (t.descents[e->to].count((int)s))
            rhs += kl.cbasis[e->to].scaled(Laurent::mono(e->mu, 1));
      }
      if (!(lhs == rhs))
        throw std::logic_error("graph action formula failed at " + t.labels[a].str() +
                               ", generator " + t.gens[s].name);
    }

  g.cells = graph_cells((int)L, g.edges);
  return g;
}

std::vector<std::vector<int>> graph_cells(int nvertices,
                                          const std::vector<WGraphEdge>& edges) {
  // Tarjan strongly connected components
  std::vector<std::vector<int>> adj(nvertices);
  for (auto& e : edges) adj[e.from].push_back(e.to);
  std::vector<int> idx(nvertices, -1), low(nvertices, 0), stk;
  std::vector<bool> on(nvertices, false);
  std::vector<std::vector<int>> cells;
  int counter = 0;
  std::function<void(int)> dfs = [&](int v) {
    idx[v] = low[v] = counter++;
    stk.push_back(v);
    on[v] = true;
    for (int w : adj[v]) {
      if (idx[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      std::vector<int> cell;
      while (true) {
        int w = stk.back();
        stk.pop_back();
        on[w] = false;
        cell.push_back(w);
        if (w == v) break;
      }
      std::sort(cell.begin(), cell.end());
      cells.push_back(cell);
    }
  };
  for (int v = 0; v < nvertices; v++)
    if (idx[v] < 0) dfs(v);
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace theta
