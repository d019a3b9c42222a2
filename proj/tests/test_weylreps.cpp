#include <map>
#include <set>

#include "doctest.h"
#include "thetalab/weylreps.hpp"

using namespace theta;

TEST_SUITE("weylreps") {

TEST_CASE("symmetric group characters") {
  // S_3 classes: [1,1,1], [2,1], [3]
  CHECK(sym_character({3}, {1, 1, 1}) == 1);
  CHECK(sym_character({3}, {2, 1}) == 1);
  CHECK(sym_character({3}, {3}) == 1);
  CHECK(sym_character({1, 1, 1}, {1, 1, 1}) == 1);
  CHECK(sym_character({1, 1, 1}, {2, 1}) == -1);
  CHECK(sym_character({1, 1, 1}, {3}) == 1);
  CHECK(sym_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(sym_character({2, 1}, {2, 1}) == 0);
  CHECK(sym_character({2, 1}, {3}) == -1);
  CHECK(sym_dim({2, 2}) == 2);
  CHECK(sym_dim({3, 1}) == 3);
  CHECK(sym_dim({4, 3, 1}) == 70);
  CHECK(sym_class_size(3, {2, 1}) == 3);
  CHECK(sym_class_size(3, {3}) == 2);
  // column orthogonality on S_4
  for (auto& r1 : partitions_of(4))
    for (auto& r2 : partitions_of(4)) {
      long long acc = 0;
      for (auto& lam : partitions_of(4)) acc += sym_character(lam, r1) * sym_character(lam, r2);
      if (r1 == r2)
        CHECK(acc * sym_class_size(4, r1) == 24);
      else
        CHECK(acc == 0);
    }
}

TEST_CASE("cycle types and representatives") {
  SPerm w = perm_of_cycle_type(5, {3, 2});
  CHECK(cycle_type(w) == Partition{3, 2});
  CHECK(cycle_type(SPerm::identity(4)) == Partition{1, 1, 1, 1});
  CHECK_THROWS(cycle_type(SPerm::sign_flip(2, 1)));
}

TEST_CASE("hyperoctahedral classes") {
  CHECK(wb_order(2) == 8);
  CHECK(wb_order(3) == 48);
  CHECK(bipartitions(2).size() == 5);
  CHECK(bipartitions(3).size() == 10);
  CHECK(wb_classes(2).size() == 5);
  long long total = 0;
  for (auto& c : wb_classes(3)) total += wb_class_size(3, c);
  CHECK(total == 48);
  CHECK(wb_class_size(2, {{1, 1}, {}}) == 1);
  CHECK(wb_class_size(2, {{2}, {}}) == 2);
  CHECK(wb_class_size(2, {{1}, {1}}) == 2);
  CHECK(wb_class_size(2, {{}, {1, 1}}) == 1);
  CHECK(wb_class_size(2, {{}, {2}}) == 2);
  CHECK(wb_class_of(SPerm::sign_flip(1, 1)) == Bipartition{{}, {1}});
  CHECK(wb_class_of(SPerm::identity(2)) == Bipartition{{1, 1}, {}});
  SPerm neg2 = SPerm::transposition(2, 1, 2).compose(SPerm::sign_flip(2, 2));
  CHECK(wb_class_of(neg2) == Bipartition{{}, {2}});
}

TEST_CASE("rank-two character table") {
  using C = Bipartition;
  const std::vector<C> classes = {
      {{1, 1}, {}}, {{2}, {}}, {{1}, {1}}, {{}, {1, 1}}, {{}, {2}}};
  auto row = [&](const C& lab) {
    std::vector<long long> out;
    for (auto& c : classes) out.push_back(wb_character(lab, c));
    return out;
  };
  CHECK(row({{2}, {}}) == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(row({{1, 1}, {}}) == std::vector<long long>{1, -1, 1, 1, -1});
  CHECK(row({{1}, {1}}) == std::vector<long long>{2, 0, 0, -2, 0});
  CHECK(row({{}, {2}}) == std::vector<long long>{1, 1, -1, 1, -1});
  CHECK(row({{}, {1, 1}}) == std::vector<long long>{1, -1, -1, 1, 1});
}

TEST_CASE("character orthogonality at rank three") {
  auto classes = wb_classes(3);
  auto labs = bipartitions(3);
  long long dim2 = 0;
  for (auto& lab : labs) {
    long long d = wb_dim(3, lab);
    CHECK(d == wb_character(lab, {{1, 1, 1}, {}}));
    dim2 += d * d;
  }
  CHECK(dim2 == 48);
  for (auto& l1 : labs)
    for (auto& l2 : labs) {
      long long acc = 0;
      for (auto& c : classes)
        acc += wb_class_size(3, c) * wb_character(l1, c) * wb_character(l2, c);
      CHECK(acc == (l1 == l2 ? 48 : 0));
    }
}

TEST_CASE("restriction to the even subgroup") {
  CHECK(wd_restriction_norm(2, {{2}, {}}) == 1);
  CHECK(wd_restriction_norm(2, {{}, {1, 1}}) == 1);
  CHECK(wd_restriction_norm(2, {{1}, {1}}) == 2);  // equal halves split
  CHECK(wd_restriction_norm(1, {{1}, {}}) == 1);
}

TEST_CASE("concrete hyperoctahedral groups") {
  for (int k = 1; k <= 3; k++) {
    WBGroup g = build_wb_group(k);
    CHECK((long long)g.elements.size() == wb_order(k));
    CHECK(g.class_rep.size() == wb_classes(k).size());
    for (auto& [cls, id] : g.class_rep) CHECK(wb_class_of(g.elements[id]) == cls);
    // words reproduce their elements
    for (size_t i = 0; i < g.elements.size(); i++) {
      SPerm acc = SPerm::identity(k);
      for (int s : g.words[i]) acc = acc.compose(g.gen(s));
      CHECK(acc == g.elements[i]);
    }
  }
}

TEST_CASE("trivial-character orbit labels") {
  CHECK(trivial_springer_label({2}, false) == Bipartition{{1}, {}});
  CHECK(trivial_springer_label({1, 1}, false) == Bipartition{{}, {1}});
  CHECK(trivial_springer_label({2, 2}, false) == Bipartition{{1}, {1}});
  CHECK(trivial_springer_label({4}, false) == Bipartition{{2}, {}});
  CHECK(trivial_springer_label({1, 1, 1, 1}, false) == Bipartition{{}, {1, 1}});
  CHECK(trivial_springer_label({4, 2}, false) == Bipartition{{2}, {1}});
  CHECK(trivial_springer_label({3, 3}, false) == Bipartition{{1}, {2}});
  CHECK(trivial_springer_label({2, 2, 1, 1}, false) == Bipartition{{1}, {1, 1}});
  // the orthogonal family swaps the two sides
  CHECK(trivial_springer_label({5, 1}, true) == Bipartition{{3}, {}});
  CHECK(trivial_springer_label({3, 3}, true) == Bipartition{{2}, {1}});
  CHECK(trivial_springer_label({3, 1, 1, 1}, true) == Bipartition{{2, 1}, {}});
  CHECK(trivial_springer_label({2, 2, 1, 1}, true) == Bipartition{{1, 1}, {1}});
  CHECK(trivial_springer_label({1, 1, 1, 1, 1, 1}, true) == Bipartition{{1, 1, 1}, {}});
}

TEST_CASE("symplectic label table") {
  SpringerTable t = springer_symplectic(2);
  CHECK(t.rows.size() == 7);
  long long with_label = 0;
  for (auto& [key, val] : t.rows)
    if (val) with_label++;
  CHECK(with_label == 5);
  CHECK(t.row({2, 2}, {1}) == Bipartition{{1}, {1}});
  CHECK(t.row({2, 2}, {-1}) == Bipartition{{}, {2}});
  CHECK(t.row({4}, {1}) == Bipartition{{2}, {}});
  CHECK_FALSE(t.row({4}, {-1}).has_value());
  CHECK_FALSE(t.row({2, 1, 1}, {-1}).has_value());

  SpringerTable t3 = springer_symplectic(3);
  CHECK(t3.rows.size() == 16);
  long long labeled3 = 0;
  for (auto& [key, val] : t3.rows)
    if (val) labeled3++;
  CHECK(labeled3 == 10);
  CHECK(t3.row({4, 2}, {-1, -1}) == Bipartition{{}, {3}});
  CHECK(t3.row({2, 2, 1, 1}, {-1}) == Bipartition{{}, {2, 1}});
  CHECK_FALSE(t3.row({4, 2}, {-1, 1}).has_value());
  CHECK_FALSE(t3.row({4, 2}, {1, -1}).has_value());
  CHECK(t3.row({3, 3}, {}) == Bipartition{{1}, {2}});
  CHECK_THROWS(springer_symplectic(4));
}

TEST_CASE("orthogonal label table") {
  SpringerTable t = springer_orthogonal(3);
  CHECK(t.rows.size() == 14);
  long long labeled = 0;
  for (auto& [key, val] : t.rows)
    if (val) labeled++;
  CHECK(labeled == 10);
  CHECK(t.row({5, 1}, {1, 1}) == Bipartition{{3}, {}});
  // the all-minus character swaps the trivial label
  CHECK(t.row({5, 1}, {-1, -1}) == Bipartition{{}, {3}});
  CHECK_FALSE(t.row({5, 1}, {1, -1}).has_value());
  CHECK(t.row({3, 3}, {1}) == Bipartition{{2}, {1}});
  CHECK(t.row({3, 3}, {-1}) == Bipartition{{1}, {2}});
  CHECK_THROWS(springer_orthogonal(4));
}

TEST_CASE("matching fixed points under permutation pairs") {
  // identity pair: every plain matching is fixed
  CHECK(pm_fixed_count(1, 1, SPerm::identity(1), SPerm::identity(1)) == 2);
  CHECK(pm_fixed_count(2, 2, SPerm::identity(2), SPerm::identity(2)) == 7);
  // a source transposition fixes arcless slots and swapped arc pairs
  CHECK(pm_fixed_count(2, 1, SPerm::transposition(2, 1, 2), SPerm::identity(1)) == 1);
  // induced route agrees by arc count
  for (int i = 0; i <= 2; i++)
    CHECK(pm_fixed_count(2, 2, SPerm::transposition(2, 1, 2), SPerm::identity(2), i) ==
          pm_induced_count(2, 2, SPerm::transposition(2, 1, 2), SPerm::identity(2), i));
  CHECK(pm_stabilizer_is_diagonal(2, 2, 1));
  CHECK(pm_stabilizer_is_diagonal(3, 2, 2));
}

}  // TEST_SUITE
