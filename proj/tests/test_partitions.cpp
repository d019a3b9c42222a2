#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "thetalab/partitions.hpp"

using namespace theta;

namespace {

DecPair dp(int x, int y, Dec d = Dec::none) { return DecPair{x, y, d}; }

DecBipartition diagram(std::vector<DecPair> pairs) {
  DecBipartition g;
  g.pairs = std::move(pairs);
  g.canonicalize();
  return g;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
  for (auto& p : partitions_of(6)) {
    CHECK(std::is_sorted(p.rbegin(), p.rend()));
    int s = 0;
    for (int x : p) s += x;
    CHECK(s == 6);
  }
}

TEST_CASE("parity-restricted partitions") {
  // even parts with even multiplicity
  CHECK(orthogonal_partitions(6).size() == 5);
  // odd parts with even multiplicity
  CHECK(symplectic_partitions(6).size() == 8);
  CHECK(symplectic_partitions(4).size() == 4);
  for (auto& p : symplectic_partitions(6)) {
    std::map<int, int> mult;
    for (int x : p) mult[x]++;
    for (auto& [part, k] : mult)
      if (part % 2 == 1) CHECK(k % 2 == 0);
  }
}

TEST_CASE("admissible pair shapes") {
  CHECK(valid_dec_pair(dp(1, 0)));
  CHECK(valid_dec_pair(dp(0, 1)));
  CHECK(valid_dec_pair(dp(2, 1)));
  CHECK(valid_dec_pair(dp(1, 1, Dec::plus)));
  CHECK(valid_dec_pair(dp(1, 1, Dec::minus)));
  CHECK_FALSE(valid_dec_pair(dp(1, 1)));            // equal pair needs a sign
  CHECK_FALSE(valid_dec_pair(dp(0, 0, Dec::plus)));  // zero pair excluded
  CHECK_FALSE(valid_dec_pair(dp(2, 0)));             // gap two
  CHECK_FALSE(valid_dec_pair(dp(1, 2, Dec::plus)));  // unequal pair undecorated
}

TEST_CASE("clash number and relevance") {
  CHECK(clash_number(diagram({dp(2, 1), dp(1, 2)})) == 1);
  CHECK_FALSE(is_relevant(diagram({dp(2, 1), dp(1, 2)})));
  CHECK(clash_number(diagram({dp(1, 2), dp(1, 2)})) == 0);
  CHECK(is_relevant(diagram({dp(1, 2), dp(1, 2)})));
  // relevant diagrams at bidegree (1,1): the two signed equal pairs; the
  // clash pair {(1,0),(0,1)} is excluded
  auto rdp11 = enumerate_rdp(1, 1);
  CHECK(rdp11.size() == 2);
  for (auto& g : rdp11) CHECK(is_relevant(g));
}

TEST_CASE("moment images drop zeros and keep ones") {
  auto [a, b] = moment_images(diagram({dp(1, 0), dp(1, 2)}));
  CHECK(a == Partition{1, 1});
  CHECK(b == Partition{2});
  auto [c, d] = moment_images(diagram({dp(0, 1), dp(0, 1)}));
  CHECK(c == Partition{});
  CHECK(d == Partition{1, 1});
}

TEST_CASE("orthosymplectic filter") {
  CHECK(is_orthosymplectic(diagram({dp(1, 1, Dec::plus), dp(1, 1, Dec::minus)})));
  CHECK_FALSE(is_orthosymplectic(diagram({dp(1, 1, Dec::plus), dp(1, 1, Dec::plus)})));
  // even x in an unequal pair forces even multiplicity
  CHECK(is_orthosymplectic(diagram({dp(1, 2), dp(1, 0)})));
  CHECK_FALSE(is_orthosymplectic(diagram({dp(2, 1), dp(0, 1), dp(0, 1), dp(0, 1)})));
  CHECK(is_orthosymplectic(
      diagram({dp(2, 1), dp(2, 1), dp(0, 1), dp(0, 1)})));
}

TEST_CASE("orthosymplectic enumeration at small bidegree") {
  CHECK(enumerate_rosp(1, 1).size() == 2);
  CHECK(enumerate_rosp(1, 2).size() == 2);
  CHECK(enumerate_rosp(1, 3).size() == 2);
  auto all = enumerate_rosp(2, 3);
  CHECK(all.size() == 8);
  std::set<std::pair<Partition, Partition>> images;
  for (auto& g : all) {
    CHECK(is_relevant(g));
    CHECK(is_orthosymplectic(g));
    CHECK(g.sum_x() == 4);
    CHECK(g.sum_y() == 6);
    images.insert(moment_images(g));
  }
  std::set<std::pair<Partition, Partition>> want = {
      {{2, 2}, {2, 2, 1, 1}}, {{1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}},
      {{1, 1, 1, 1}, {2, 2, 1, 1}}, {{3, 1}, {2, 2, 1, 1}},
      {{2, 2}, {1, 1, 1, 1, 1, 1}}, {{2, 2}, {3, 3}},
      {{1, 1, 1, 1}, {2, 2, 2}}, {{3, 1}, {4, 2}}};
  CHECK(images == want);
}

TEST_CASE("sign groups") {
  CHECK(sign_group_orthogonal({3, 3, 1}).gens == std::vector<std::string>{"a_1", "a_3"});
  CHECK(sign_group_symplectic({4, 2, 2}).gens == std::vector<std::string>{"a_2", "a_4"});
  CHECK(sign_group_symplectic({3, 3}).gens.empty());
  auto dg = sign_group_diagram(diagram({dp(1, 0), dp(1, 2), dp(3, 3, Dec::plus)}));
  // pairs with odd x and even y, including y = 0
  CHECK(dg.gens.size() == 2);
  CHECK(all_characters(dg).size() == 4);
}

TEST_CASE("restriction through the component group") {
  auto g = diagram({dp(1, 2), dp(1, 0)});
  auto orth = sign_group_orthogonal(moment_images(g).first);
  auto symp = sign_group_symplectic(moment_images(g).second);
  auto rest = restriction_map(g, orth, symp);
  REQUIRE(rest.size() == 2);
  // a_(1,0): x-part 1 present, y absent -> trivial symplectic factor
  bool saw_absent = false;
  for (auto& r : rest) {
    CHECK(r.orth_index == 0);  // a_1 is the only orthogonal generator
    if (r.symp_index == -1) saw_absent = true;
  }
  CHECK(saw_absent);
}

TEST_CASE("compatible quintuple enumeration") {
  auto q11 = enumerate_rq(1, 1);
  CHECK(q11.size() == 3);
  int unequal_rows = 0;
  for (auto& q : q11) {
    CHECK(q.g_orth == Partition{1, 1});
    if (q.g_symp == Partition{2}) {
      unequal_rows++;
      // both characters are forced trivial by the two constraint generators
      CHECK(q.chi_orth == SignChar{1});
      CHECK(q.chi_symp == SignChar{1});
    } else {
      CHECK(q.g_symp == Partition{1, 1});
      CHECK(q.chi_symp.empty());
    }
  }
  CHECK(unequal_rows == 1);

  auto q23 = enumerate_rq(2, 3);
  CHECK(q23.size() == 15);
  std::map<DecBipartition, int> per_diagram;
  for (auto& q : q23) per_diagram[q.gamma]++;
  std::multiset<int> counts;
  for (auto& [g, c] : per_diagram) counts.insert(c);
  CHECK(counts == std::multiset<int>{1, 1, 1, 2, 2, 2, 2, 4});
}

TEST_CASE("relevant pairs and multiplicity formula") {
  CHECK(is_relevant_pair({1}, {1}));
  CHECK(pair_multiplicity({1}, {1}) == 2);
  CHECK(pair_multiplicity({4, 3, 1}, {4, 3, 2}) == 4);
  CHECK_FALSE(is_relevant_pair({2}, {}));
  CHECK(pair_multiplicity({2}, {}) == 0);
  CHECK(is_relevant_pair({}, {}));
  CHECK(pair_multiplicity({}, {}) == 1);
  CHECK(pair_multiplicity({2}, {2}) == 2);
  CHECK(fiber_rdp({2}, {2}).size() == 2);
  CHECK(fiber_rdp({4, 3, 1}, {4, 3, 2}).size() == 4);
  for (auto& g : fiber_rdp({4, 3, 1}, {4, 3, 2})) {
    CHECK(moment_images(g) == std::make_pair(Partition{4, 3, 1}, Partition{4, 3, 2}));
    CHECK(is_relevant(g));
  }
}

TEST_CASE("orthosymplectic fiber construction") {
  auto f = fiber_rosp({2, 2}, {3, 3});
  REQUIRE(f.has_value());
  CHECK(moment_images(*f) == std::make_pair(Partition{2, 2}, Partition{3, 3}));
  CHECK(is_orthosymplectic(*f));
  // an odd number of aligned equal pairs cannot satisfy the sign balance
  CHECK_FALSE(fiber_rosp({2, 2, 1}, {2, 1, 1}).has_value());
  CHECK(fiber_rosp({1, 1}, {1, 1}).has_value());
  CHECK_FALSE(fiber_rosp({2, 2}, {}).has_value());
  CHECK_THROWS(fiber_rosp({2}, {2}));  // parity preconditions are enforced
}

TEST_CASE("quintuple compatibility is the pulled-back sign condition") {
  for (auto& q : enumerate_rq(2, 2)) {
    auto orth = sign_group_orthogonal(q.g_orth);
    auto symp = sign_group_symplectic(q.g_symp);
    for (auto& r : restriction_map(q.gamma, orth, symp)) {
      int value = 1;
      if (r.orth_index >= 0) value *= q.chi_orth[r.orth_index];
      if (r.symp_index >= 0) value *= q.chi_symp[r.symp_index];
      CHECK(value == 1);
    }
  }
}

}  // TEST_SUITE
