#include <numeric>
#include <set>

#include "doctest.h"
#include "thetalab/kl.hpp"
#include "thetalab/linalg.hpp"
#include "thetalab/oracle.hpp"

using namespace theta;

TEST_SUITE("oracle") {

TEST_CASE("prime field context") {
  FpContext F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.neg(3) == 4);
  CHECK(F.pow(3, 6) == 1);
  uint64_t g = F.primitive_root();
  std::set<uint64_t> powers;
  for (int i = 0; i < 6; i++) powers.insert(F.pow(g, i));
  CHECK(powers.size() == 6);
}

TEST_CASE("rank and nullspace") {
  FpContext F(3);
  FpMat a = {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}};  // row3 = row1 - 2 row2 mod 3
  CHECK(fp_rank(F, a) == 2);
  auto ns = fp_nullspace(F, a);
  CHECK(ns.size() == 1);
  // the kernel vector is annihilated by every row
  for (auto& row : a) {
    uint64_t acc = 0;
    for (size_t j = 0; j < row.size(); j++) acc = F.add(acc, F.mul(row[j], ns[0][j]));
    CHECK(acc == 0);
  }
  FpMat id3 = fp_identity(3);
  CHECK(fp_rank(F, id3) == 3);
  CHECK(fp_mul(F, id3, a) == a);
}

TEST_CASE("bilinear forms of the two signed targets") {
  auto J = target_form(OrbitModel::type1_model1(1, 2), FpContext(5));
  REQUIRE(J.size() == 4);
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) CHECK(J[i][j] == (5 - J[j][i]) % 5);  // antisymmetric
  auto B = target_form(OrbitModel::type1_model2(1, 2), FpContext(5));
  REQUIRE(B.size() == 4);
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++) CHECK(B[i][j] == B[j][i]);  // symmetric
  CHECK(fp_rank(FpContext(5), B) == 4);
}

TEST_CASE("variety sizes over small fields") {
  CHECK(build_space(build_tables(OrbitModel::type2(2, 2)), 3).points.size() == 81);
  CHECK(build_space(build_tables(OrbitModel::type1_model1(1, 1)), 3).points.size() == 9);
  CHECK(build_space(build_tables(OrbitModel::type1_model1(1, 1)), 5).points.size() == 25);
  CHECK(build_space(build_tables(OrbitModel::type1_model2(1, 1)), 3).points.size() == 5);
  CHECK(build_space(build_tables(OrbitModel::type1_model2(2, 1)), 3).points.size() == 17);
  CHECK_THROWS(build_space(build_tables(OrbitModel::type2(2, 2)), 4));  // q must be prime
}

TEST_CASE("orbit decomposition matches the labels") {
  FqSpace s = build_space(build_tables(OrbitModel::type2(1, 1)), 3);
  REQUIRE(s.t.labels.size() == 2);
  long long zero_orbit = s.orbit_size[s.t.id(Label::parse("{}"))];
  long long open_orbit = s.orbit_size[s.t.id(Label::parse("1>1"))];
  CHECK(zero_orbit == 1);
  CHECK(open_orbit == 2);  // the nonzero 1x1 matrices over F_3
  long long total = std::accumulate(s.orbit_size.begin(), s.orbit_size.end(), 0LL);
  CHECK(total == (long long)s.points.size());
}

TEST_CASE("closure sizes sum the orbit sizes below") {
  for (auto mod : {OrbitModel::type2(2, 2), OrbitModel::type2(2, 1)}) {
    ModelTables t = build_tables(mod);
    KLTable kl = build_kl(t);
    FqSpace s = build_space(t, 3);
    for (size_t lab = 0; lab < t.labels.size(); lab++) {
      long long want = 0;
      for (size_t b = 0; b < t.labels.size(); b++)
        if (kl.closure_leq((int)b, (int)lab)) want += s.orbit_size[b];
      CHECK((long long)closure_points(s, t.labels[lab]).size() == want);
    }
  }
}

TEST_CASE("reflection representatives in the rank-one symplectic target") {
  ModelTables t = build_tables(OrbitModel::type1_model1(1, 1));
  FqSpace s = build_space(t, 3);
  REQUIRE(t.gens.size() == 1);
  for (uint64_t tval = 0; tval < 3; tval++) {
    auto m = oracle_rep(s, t.gens[0], tval);
    CHECK(m[0][0] == tval);
    CHECK(m[0][1] == 2);  // -1 mod 3
    CHECK(m[1][0] == 1);
    CHECK(m[1][1] == 0);
  }
}

TEST_CASE("convolution reproduces the generic matrix") {
  ModelTables t = build_tables(OrbitModel::type1_model1(1, 1));
  FqSpace s = build_space(t, 3);
  for (auto& g : t.gens) CHECK(convolution_matrix(s, g) == symbolic_matrix_at_q(t, g, 3));
}

TEST_CASE("borel group orders") {
  FpContext F(3);
  auto gl2 = borel_group_gens(OrbitModel::type2(2, 1), F, GenSide::Source);
  CHECK(matrix_group_order(F, gl2, 1000) == 12);  // (q-1)^2 q
  auto sp4 = borel_group_gens(OrbitModel::type1_model1(1, 2), F, GenSide::Target);
  CHECK(matrix_group_order(F, sp4, 100000) == 324);  // (q-1)^2 q^4
}

TEST_CASE("cyclotomic integers") {
  long long p = 5;
  Cyc zeta_sum = Cyc::zero(p);
  for (long long k = 0; k < p; k++) zeta_sum.add_root(k);
  zeta_sum.reduce();
  CHECK(zeta_sum == Cyc::zero(p));
  Cyc one = Cyc::integer(p, 1);
  CHECK(one.rotated(2).rotated(3) == one);  // full rotation returns
  CHECK(Cyc::integer(p, 3).scaled(4) == Cyc::integer(p, 12));
  Cyc r = Cyc::root(p, 1);
  Cyc acc = Cyc::zero(p);
  for (int i = 0; i < 5; i++) acc += r.rotated(i);
  CHECK(acc == Cyc::zero(p));
}

TEST_CASE("pairing and annihilators") {
  FqSpace xs = build_space(build_tables(OrbitModel::type2(1, 1)), 3);
  FqSpace ys = build_space(build_tables(OrbitModel::type2(1, 1)), 3);
  std::vector<int> everything(xs.points.size());
  std::iota(everything.begin(), everything.end(), 0);
  std::vector<int> zero_only = closure_points(xs, Label::parse("{}"));
  REQUIRE(zero_only.size() == 1);
  CHECK(perp_points(xs, zero_only, ys).size() == ys.points.size());
  CHECK(perp_points(xs, everything, ys).size() == 1);
  // transform of a point mass is constant of modulus one
  Cyc at_zero = fourier_indicator_at(xs, zero_only, ys.points[0]);
  CHECK(at_zero == Cyc::integer(3, 1));
}

TEST_CASE("budget guard") {
  CHECK_THROWS(build_space(build_tables(OrbitModel::type2(4, 4)), 5));
}

}  // TEST_SUITE
