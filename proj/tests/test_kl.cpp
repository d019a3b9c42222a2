#include <vector>

#include "doctest.h"
#include "thetalab/hecke.hpp"
#include "thetalab/kl.hpp"

using namespace theta;

TEST_SUITE("kl") {

TEST_CASE("minimal orbit base case") {
  ModelTables t = build_tables(OrbitModel::type2(2, 2));
  KLTable kl = build_kl(t);
  // dimension-one staircase: indicator sum over its two closure points
  ModVec want;
  want.add(t.id(Label::parse("2>1")), Laurent::v(-1));
  want.add(t.id(Label::parse("{}")), Laurent::v(-1));
  CHECK(kl.cbasis[t.id(Label::parse("2>1"))] == want);
  // the closed orbit is its own canonical element
  CHECK(kl.cbasis[t.id(Label::parse("{}"))] == ModVec::unit(t.id(Label::parse("{}"))));
}

TEST_CASE("normalization and support") {
  for (auto mod : {OrbitModel::type2(2, 2), OrbitModel::type1_model1(2, 1),
                   OrbitModel::type1_model2(1, 2)}) {
    ModelTables t = build_tables(mod);
    KLTable kl = build_kl(t);
    for (size_t s = 0; s < t.labels.size(); s++) {
      // leading coefficient: v^{-dim} on the orbit itself
      Laurent self = kl.cbasis[s].c.at((int)s);
      CHECK(self == Laurent::v(-(int)t.dim[s]));
      for (auto& [b, coeff] : kl.cbasis[s].c) {
        CHECK(kl.closure_leq(b, (int)s));
        CHECK(t.dim[b] <= t.dim[s]);
        Laurent p = kl.poly(b, (int)s);
        CHECK(p.coeff(0) == 1);      // constant term one
        CHECK(p.lo() == 0);
        for (auto& [e, a] : p.c) {
          CHECK(e % 2 == 0);          // even exponents only
          CHECK(a > 0);               // positive coefficients
        }
        if (b != (int)s) CHECK(p.hi() <= (int)(t.dim[s] - t.dim[b]) - 1);
      }
    }
  }
}

TEST_CASE("closure relation is a partial order refined by dimension") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 1));
  KLTable kl = build_kl(t);
  for (size_t a = 0; a < t.labels.size(); a++) {
    CHECK(kl.closure_leq((int)a, (int)a));
    for (size_t b = 0; b < t.labels.size(); b++) {
      if (kl.closure_leq((int)a, (int)b) && kl.closure_leq((int)b, (int)a))
        CHECK(a == b);
      if (kl.closure_leq((int)a, (int)b))
        for (size_t c = 0; c < t.labels.size(); c++)
          if (kl.closure_leq((int)b, (int)c)) CHECK(kl.closure_leq((int)a, (int)c));
    }
  }
}

TEST_CASE("self-dual under the bar involution at v = 1") {
  // at v = 1 the canonical element reduces to the plain indicator sum over
  // its support with multiplicities P(1)
  ModelTables t = build_tables(OrbitModel::type2(2, 2));
  KLTable kl = build_kl(t);
  int top = t.id(Label::parse("1>2"));
  ModVec x = kl.cbasis[top];
  long long total = 0;
  for (auto& [b, coeff] : x.c) total += coeff.eval(1);
  CHECK(total == 6);  // five closure points, one with multiplicity two
}

TEST_CASE("change of basis round trip") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 1));
  KLTable kl = build_kl(t);
  ModVec mix;
  mix += kl.cbasis[t.id(Label::parse("1>-1"))].scaled(Laurent::v(3));
  mix += kl.cbasis[t.id(Label::parse("2>1"))].scaled(Laurent(1) + Laurent::v(-2));
  std::vector<Laurent> coords = kl.in_cbasis(mix);
  CHECK(coords[t.id(Label::parse("1>-1"))] == Laurent::v(3));
  CHECK(coords[t.id(Label::parse("2>1"))] == Laurent(1) + Laurent::v(-2));
  for (size_t i = 0; i < coords.size(); i++) {
    Label l = t.labels[i];
    if (l == Label::parse("1>-1") || l == Label::parse("2>1")) continue;
    CHECK(coords[i].is_zero());
  }
  // the basis is triangular with a monomial diagonal, so even a bare indicator
  // expands exactly; its top coordinate clears the v^{-dim} normalization
  ModVec bare = ModVec::unit(t.id(Label::parse("1>-1")));
  std::vector<Laurent> bc = kl.in_cbasis(bare);
  CHECK(bc[t.id(Label::parse("1>-1"))] == Laurent::v(3));
  ModVec rebuilt;
  for (size_t i = 0; i < bc.size(); i++) rebuilt += kl.cbasis[i].scaled(bc[i]);
  CHECK(rebuilt == bare);
}

TEST_CASE("table stays valid after moves") {
  std::vector<KLTable> tables;
  tables.push_back(build_kl(build_tables(OrbitModel::type2(2, 1))));
  tables.push_back(build_kl(build_tables(OrbitModel::type1_model1(1, 1))));
  std::vector<KLTable> moved = std::move(tables);
  for (auto& kl : moved) {
    for (size_t s = 0; s < kl.t.labels.size(); s++)
      CHECK(kl.poly((int)s, (int)s) == Laurent(1));
    // in_cbasis reads through the owned tables; it must not dangle
    CHECK(kl.in_cbasis(kl.cbasis[0])[0] == Laurent(1));
  }
}

TEST_CASE("edges carry the leading coefficients") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 1));
  KLTable kl = build_kl(t);
  WGraph g = build_wgraph(t, kl);
  for (auto& e : g.edges) {
    long long gap = t.dim[e.to] - t.dim[e.from];
    if (gap > 0) {
      Laurent p = kl.poly(e.from, e.to);
      CHECK(p.coeff((int)gap - 1) == e.mu);
    }
  }
  CHECK(g.edges.size() == 5);
}

}  // TEST_SUITE
