#include "doctest.h"
#include "thetalab/hecke.hpp"

using namespace theta;

TEST_SUITE("hecke") {

TEST_CASE("exponent arithmetic") {
  Laurent p = Laurent::mono(3, 2) + Laurent::v(-1);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.lo() == -1);
  CHECK(p.hi() == 2);
  Laurent q = p * Laurent::v(2);
  CHECK(q.coeff(4) == 3);
  CHECK(q.coeff(1) == 1);
  CHECK((p - p).is_zero());
  CHECK(p.shifted(3).lo() == 2);
  CHECK(p.scaled(-2).coeff(2) == -6);
  CHECK(p.eval(1) == 4);
  CHECK(p.eval(-1) == 2);  // 3*(-1)^2 + (-1)^-1
  Laurent even = Laurent(1) + Laurent::mono(2, 2);
  CHECK(even.eval_v2(3) == 7);
  CHECK_THROWS(p.eval_v2(3));  // odd exponent present
}

TEST_CASE("toral action scales by v^2") {
  ModelTables t = build_tables(OrbitModel::type2(2, 2));
  int zero = t.id(Label::parse("{}"));
  for (size_t g = 0; g < t.gens.size(); g++) {
    ModVec out = act_Ts(t, (int)g, ModVec::unit(zero));
    ModVec want = ModVec::unit(zero).scaled(Laurent::v(2));
    CHECK(out == want);
  }
}

TEST_CASE("lower and upper actions") {
  ModelTables t = build_tables(OrbitModel::type2(2, 2));
  int low = t.id(Label::parse("1>1"));
  int high = t.id(Label::parse("1>2"));
  int s1 = -1;
  for (size_t g = 0; g < t.gens.size(); g++)
    if (t.gens[g].name == "s'1") s1 = (int)g;
  REQUIRE(s1 >= 0);
  // the target swap links 1>1 and 1>2
  ModVec up = act_Ts(t, s1, ModVec::unit(low));
  CHECK(up == ModVec::unit(high));
  ModVec down = act_Ts(t, s1, ModVec::unit(high));
  ModVec want = ModVec::unit(high).scaled(Laurent::v(2) - Laurent(1));
  want += ModVec::unit(low).scaled(Laurent::v(2));
  CHECK(down == want);
}

TEST_CASE("quadratic relation") {
  for (auto mod : {OrbitModel::type2(2, 1), OrbitModel::type1_model1(1, 1),
                   OrbitModel::type1_model2(1, 2)}) {
    ModelTables t = build_tables(mod);
    for (size_t g = 0; g < t.gens.size(); g++)
      for (size_t l = 0; l < t.labels.size(); l++) {
        ModVec x = ModVec::unit((int)l);
        ModVec lhs = act_Ts(t, (int)g, act_Ts(t, (int)g, x));
        ModVec rhs = act_Ts(t, (int)g, x).scaled(Laurent::v(2) - Laurent(1));
        rhs += x.scaled(Laurent::v(2));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("plus-one operator") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 1));
  for (size_t g = 0; g < t.gens.size(); g++)
    for (size_t l = 0; l < t.labels.size(); l++) {
      ModVec x = ModVec::unit((int)l);
      ModVec sum = act_Ts(t, (int)g, x);
      sum += x;
      CHECK(act_Ts_plus_one(t, (int)g, x) == sum);
    }
}

TEST_CASE("word action composes right to left") {
  ModelTables t = build_tables(OrbitModel::type2(2, 2));
  ModVec x = ModVec::unit(t.id(Label::parse("1>1")));
  ModVec direct = act_Ts(t, 0, act_Ts(t, 1, x));
  CHECK(act_word(t, {0, 1}, x) == direct);
  CHECK(act_word(t, {}, x) == x);
}

TEST_CASE("commuting source and target actions") {
  ModelTables t = build_tables(OrbitModel::type1_model1(2, 2));
  for (size_t a = 0; a < t.gens.size(); a++)
    for (size_t b = 0; b < t.gens.size(); b++) {
      if (t.gens[a].side == t.gens[b].side) continue;
      for (size_t l = 0; l < t.labels.size(); l++) {
        ModVec x = ModVec::unit((int)l);
        CHECK(act_Ts(t, (int)a, act_Ts(t, (int)b, x)) ==
              act_Ts(t, (int)b, act_Ts(t, (int)a, x)));
      }
    }
}

}  // TEST_SUITE
