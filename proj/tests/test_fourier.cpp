#include <set>

#include "doctest.h"
#include "thetalab/fourier.hpp"
#include "thetalab/hecke.hpp"

using namespace theta;

TEST_SUITE("fourier") {

TEST_CASE("subset pair enumeration") {
  CHECK(enumerate_pp(2, 2).size() == 6);   // 1 + 4 + 1
  CHECK(enumerate_pp(3, 3).size() == 20);
  CHECK(enumerate_pp(1, 3).size() == 4);
  for (auto& ij : enumerate_pp(2, 3)) CHECK(ij.I.size() == ij.J.size());
}

TEST_CASE("staircase matchings from subset pairs") {
  auto lab = [](std::vector<int> I, std::vector<int> J, int m, int n) {
    SubsetPair ij;
    ij.I = std::move(I);
    ij.J = std::move(J);
    return stack_matching(m, n, ij);
  };
  CHECK(lab({}, {}, 2, 2) == Label::parse("{}"));
  CHECK(lab({1}, {2}, 2, 2) == Label::parse("1>2, 2>1"));
  CHECK(lab({1, 2}, {1, 2}, 2, 2) == Label::parse("1>1, 2>2"));
  CHECK(lab({1}, {1}, 2, 2) == Label::parse("1>1"));
  CHECK(lab({2}, {1}, 2, 2) == Label::parse("2>1"));
  CHECK(lab({1}, {3}, 3, 3) == Label::parse("1>3, 2>2, 3>1"));
}

TEST_CASE("subset transform composes to the identity") {
  for (int m = 1; m <= 4; m++)
    for (int n = 1; n <= 4; n++)
      for (auto& ij : enumerate_pp(m, n)) {
        SubsetPair back = psi_bullet(n, m, psi_bullet(m, n, ij));
        CHECK(back.I == ij.I);
        CHECK(back.J == ij.J);
      }
}

TEST_CASE("annihilator transform frozen values") {
  CHECK(psi_transform(2, 2, Label::parse("{}")) == Label::parse("1>2, 2>1"));
  CHECK(psi_transform(2, 2, Label::parse("1>2, 2>1")) == Label::parse("{}"));
  // involution across the swapped ranks
  for (auto& lab : OrbitModel::type2(2, 2).enumerate())
    CHECK(psi_transform(2, 2, psi_transform(2, 2, lab)) == lab);
  for (auto& lab : OrbitModel::type2(2, 1).enumerate())
    CHECK(psi_transform(1, 2, psi_transform(2, 1, lab)) == lab);
}

TEST_CASE("signed model exchange frozen table") {
  const std::map<std::string, std::string> want = {{"{}", "1>2"},
                                                   {"2>1", "1>1"},
                                                   {"1>1", "{}"},
                                                   {"2>-1", "1>-2"},
                                                   {"1>-1", "1>-1"}};
  std::set<std::string> seen;
  for (auto& [from, to] : want) {
    CHECK(phi_transform(2, 1, Label::parse(from)) == Label::parse(to));
    seen.insert(phi_transform(2, 1, Label::parse(from)).str());
  }
  CHECK(seen.size() == want.size());  // bijective onto the partner labels
}

TEST_CASE("conjugated sign flip") {
  CHECK(iota_transform(1, 1, Label::parse("{}")) == Label::parse("1>-1"));
  CHECK(iota_transform(1, 1, Label::parse("1>1")) == Label::parse("1>1"));
  CHECK(iota_transform(2, 1, Label::parse("2>-1")) == Label::parse("{}"));
}

TEST_CASE("glued structure at (2,1)") {
  GluedTables g = build_glued(2, 1);
  CHECK(g.gen_names == std::vector<std::string>{"s1", "s2", "s'1"});
  CHECK(g.edges.size() == 6);
  CHECK(g.cells.size() == 5);
  // the partner table embeds the exchange transform
  for (size_t i = 0; i < g.t1.labels.size(); i++)
    CHECK(g.t2.labels[g.phi[i]] == phi_transform(2, 1, g.t1.labels[i]));
  // flips are involutive and preserve the edge set
  for (size_t i = 0; i < g.iota.size(); i++) CHECK(g.iota[g.iota[i]] == (int)i);
}

TEST_CASE("glued rank one") {
  GluedTables g = build_glued(1, 1);
  CHECK(g.gen_names == std::vector<std::string>{"s'1"});
  CHECK(g.cells.size() == 3);
  const ModelTables& t = g.t1;
  CHECK(g.iota[t.id(Label::parse("{}"))] == t.id(Label::parse("1>-1")));
  CHECK(g.iota[t.id(Label::parse("1>1"))] == t.id(Label::parse("1>1")));
}

TEST_CASE("length-zero generator acts by the flip on the canonical basis") {
  GluedTables g = build_glued(2, 1);
  auto m = glued_gen_matrix(g, "t");
  size_t L = g.t1.labels.size();
  for (size_t a = 0; a < L; a++)
    for (size_t b = 0; b < L; b++) {
      Laurent want = (g.iota[b] == (int)a) ? Laurent(1) : Laurent();
      CHECK(m[a][b] == want);
    }
}

TEST_CASE("transported generator satisfies the quadratic relation") {
  GluedTables g = build_glued(2, 1);
  auto m1 = glued_gen_matrix(g, "s1");
  // the matrix satisfies the quadratic relation (T - v^2)(T + 1) = 0
  size_t L = g.t1.labels.size();
  Laurent v2 = Laurent::v(2);
  for (size_t i = 0; i < L; i++)
    for (size_t j = 0; j < L; j++) {
      Laurent acc;
      for (size_t k = 0; k < L; k++) acc += m1[i][k] * m1[k][j];
      Laurent want = (i == j) ? v2 : Laurent();
      Laurent lin = m1[i][j] * (v2 - Laurent(1));
      CHECK(acc == lin + want);
    }
}

TEST_CASE("indicator route for the length-zero generator") {
  GluedTables g = build_glued(1, 1);
  auto mat = glued_tm_on_indicators(g);
  size_t L = g.t1.labels.size();
  auto coeff_of = [](const ModVec& x, int id) {
    auto it = x.c.find(id);
    return it == x.c.end() ? Laurent() : it->second;
  };
  for (size_t s = 0; s < L; s++)
    for (size_t r = 0; r < L; r++) {
      Laurent acc;
      for (size_t k = 0; k < L; k++)
        acc += mat[r][k] * coeff_of(g.kl1.cbasis[s], (int)k);
      CHECK(acc == coeff_of(g.kl1.cbasis[g.iota[s]], (int)r));
    }
}

}  // TEST_SUITE
