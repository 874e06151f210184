#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "combistat/core.hpp"

using namespace combistat;

namespace {

Filling make_filling(std::vector<int> heights,
                     std::vector<std::pair<int, int>> cells) {
  return Filling::from_cells(PartitionShape(std::move(heights)),
                             std::move(cells));
}

// Nine-column running example: flat column-strict filling.
Filling running_example() {
  return make_filling({1, 2, 3, 4, 4, 4, 5, 5, 6},
                      {{1, 1},
                       {2, 2},
                       {3, 1},
                       {4, 2},
                       {5, 1},
                       {6, 1},
                       {7, 1},
                       {8, 4},
                       {9, 5}});
}

Matching nine_arc_matching() {
  return Matching::from_pairs({{1, 6},
                               {7, 9},
                               {2, 10},
                               {8, 12},
                               {3, 13},
                               {4, 14},
                               {5, 16},
                               {11, 17},
                               {15, 18}});
}

long long factorial(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

TEST_CASE("permutation word access and validation") {
  const Permutation p({3, 4, 1, 2});
  CHECK(p.size() == 4);
  CHECK(p.value_at(1) == 3);
  CHECK(p.value_at(4) == 2);
  CHECK(p.position_of(4) == 2);
  CHECK(p.position_of(1) == 3);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("ascent tops and silly ascent tops") {
  const Permutation p({7, 3, 5, 6, 4, 1, 8, 9, 2});
  CHECK(ascent_top_values(p) == IndexSet{5, 6, 8, 9});
  CHECK(silly_ascent_top_values(p) == IndexSet{5, 6, 7, 8});
  const Permutation q({3, 4, 1, 2});
  CHECK(ascent_top_values(q) == IndexSet{2, 4});
  CHECK(silly_ascent_top_values(q) == IndexSet{2, 3});
  const Permutation single({1});
  CHECK(ascent_top_values(single).empty());
  CHECK(silly_ascent_top_values(single).empty());
}

TEST_CASE("barred and hatted permutations validate their decorations") {
  const Permutation p({7, 3, 5, 6, 4, 1, 8, 9, 2});
  CHECK_NOTHROW(BarredPermutation(p, {5, 6, 8}));
  CHECK_THROWS_AS(BarredPermutation(p, {7}), std::invalid_argument);
  CHECK_NOTHROW(HattedPermutation(p, {5, 6, 7, 8}));
  CHECK_THROWS_AS(HattedPermutation(p, {9}), std::invalid_argument);
  CHECK_THROWS_AS(HattedPermutation(p, {2}), std::invalid_argument);
}

TEST_CASE("matching normalizes arcs by increasing closer") {
  const Matching m = nine_arc_matching();
  CHECK(m.size() == 9);
  CHECK(m.arc(1) == Arc{1, 6});
  CHECK(m.arc(2) == Arc{7, 9});
  CHECK(m.arc(9) == Arc{15, 18});
  CHECK(m.arc_index_of_opener(11) == 8);
  CHECK(m.arc_index_of_opener(6) == 0);
  CHECK(m.arc_index_of_closer(6) == 1);
  CHECK(m.is_opener(5));
  CHECK(!m.is_opener(18));

  // Orientation of the input pairs does not matter.
  CHECK(Matching::from_pairs({{3, 1}, {2, 4}}) ==
        Matching::from_pairs({{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(Matching::from_pairs({{1, 2}, {2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Matching::from_pairs({{1, 3}}), std::invalid_argument);
}

TEST_CASE("right adjacencies and left nestings") {
  CHECK(right_adjacency_indices(nine_arc_matching()) ==
        IndexSet{3, 5, 6, 8, 9});
  CHECK(!matching_has_left_nesting(nine_arc_matching()));
  CHECK(matching_has_left_nesting(Matching::from_pairs({{1, 4}, {2, 3}})));
  CHECK(!matching_has_left_nesting(Matching::from_pairs({{1, 3}, {2, 4}})));

  CHECK_NOTHROW(MarkedMatching(nine_arc_matching(), {5, 6, 8}));
  CHECK_THROWS_AS(MarkedMatching(nine_arc_matching(), {4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MarkedMatching(Matching::from_pairs({{1, 4}, {2, 3}}), {}),
                  std::invalid_argument);
}

TEST_CASE("partition shape geometry") {
  const PartitionShape shape({1, 2, 3, 4, 4, 4, 5, 5, 6});
  CHECK(shape.length() == 9);
  CHECK(shape.row_count() == 6);
  CHECK(shape.column_height(5) == 4);
  CHECK(shape.row_length(1) == 9);
  CHECK(shape.row_length(4) == 6);
  CHECK(shape.row_length(6) == 1);
  CHECK(shape.cell_count() == 34);
  CHECK(shape.lazy_columns() == IndexSet{5, 6, 8});
  CHECK(PartitionShape::flat_from_lazy(9, {5, 6, 8}) == shape);
  CHECK(PartitionShape::flat_from_lazy(1, {}) == PartitionShape({1}));
  CHECK_THROWS_AS(PartitionShape({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionShape({0, 1}), std::invalid_argument);
}

TEST_CASE("filling storage and validation") {
  const Filling t = running_example();
  CHECK(t.length() == 9);
  CHECK(t.dot_count() == 9);
  CHECK(t.column_dots(8) == IndexSet{4});
  CHECK(t.single_dot_row(9) == 5);
  CHECK(t.has_dot(2, 2));
  CHECK(!t.has_dot(2, 1));
  CHECK(t.row_dot_columns(1) == IndexSet{1, 3, 5, 6, 7});
  CHECK(t.cells().size() == 9);

  CHECK_THROWS_AS(make_filling({1, 2}, {{2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_filling({1, 2}, {{1, 1}, {1, 1}}),
                  std::invalid_argument);

  const FillingFlags flags = filling_predicates(t);
  CHECK(flags.column_strict);
  CHECK(flags.column_positive);
  CHECK(flags.flat);
  CHECK(!flags.steep);
  CHECK(!flags.row_positive);

  const FillingFlags stair =
      filling_predicates(make_filling({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}}));
  CHECK(stair.staircase);
  CHECK(stair.steep);
  CHECK(stair.flat);
}

TEST_CASE("enriched permutation predicate") {
  // A dot is leftmost in its row exactly when topmost in its column.
  const Filling good = make_filling(
      {5, 5, 5, 5, 5},
      {{1, 2}, {2, 1}, {3, 1}, {3, 5}, {4, 4}, {5, 2}, {5, 3}});
  CHECK(filling_predicates(good).enriched_permutation);
  const Filling bad = make_filling({2, 2}, {{1, 1}, {1, 2}, {2, 2}});
  CHECK(!filling_predicates(bad).enriched_permutation);
}

TEST_CASE("direct sums of permutations and their components") {
  const Permutation sum =
      direct_sum(direct_sum(Permutation({2, 1}), Permutation({1})),
                 Permutation({2, 4, 1, 3}));
  CHECK(sum == Permutation({2, 1, 3, 5, 7, 4, 6}));
  const auto parts = irreducible_components(sum);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Permutation({2, 1}));
  CHECK(parts[1] == Permutation({1}));
  CHECK(parts[2] == Permutation({2, 4, 1, 3}));
  CHECK(irreducible_components(Permutation({3, 1, 2})).size() == 1);
}

TEST_CASE("a bar welds a component to its predecessor") {
  const BarredPermutation barred(Permutation({2, 1, 3, 5, 7, 4, 6}), {3, 6});
  const auto parts = irreducible_components(barred);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == BarredPermutation(Permutation({2, 1, 3}), {3}));
  CHECK(parts[1] == BarredPermutation(Permutation({2, 4, 1, 3}), {3}));
  CHECK(direct_sum(parts[0], parts[1]) == barred);
}

TEST_CASE("a hat on a block maximum welds it to the next component") {
  const HattedPermutation hatted(Permutation({2, 1, 3, 5, 7, 4, 6}), {3, 6});
  const auto parts = irreducible_components(hatted);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == HattedPermutation(Permutation({2, 1}), {}));
  CHECK(parts[1] == HattedPermutation(Permutation({1, 3, 5, 2, 4}), {1, 4}));
  CHECK(direct_sum(parts[0], parts[1]) == hatted);
}

TEST_CASE("matching direct sums and components") {
  const Matching a = Matching::from_pairs({{1, 3}, {2, 4}});
  const Matching b = Matching::from_pairs({{1, 2}});
  const Matching sum = direct_sum(a, b);
  CHECK(sum == Matching::from_pairs({{1, 3}, {2, 4}, {5, 6}}));
  const auto parts = irreducible_components(sum);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == a);
  CHECK(parts[1] == b);
  CHECK(irreducible_components(nine_arc_matching()).size() == 1);

  const MarkedMatching msum =
      direct_sum(MarkedMatching(a, {2}), MarkedMatching(b, {}));
  const auto mparts = irreducible_components(msum);
  REQUIRE(mparts.size() == 2);
  CHECK(mparts[0] == MarkedMatching(a, {2}));
  CHECK(mparts[1] == MarkedMatching(b, {}));
}

TEST_CASE("filling direct sums and components") {
  const Filling a = make_filling({1}, {{1, 1}});
  const Filling b = make_filling({1, 2}, {{1, 1}, {2, 2}});
  const Filling sum = direct_sum(a, b);
  CHECK(sum == make_filling({1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}}));
  // b itself splits into two one-cell dots, so the sum has three parts.
  const auto parts = irreducible_components(sum);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == a);
  CHECK(parts[1] == a);
  CHECK(parts[2] == a);
  CHECK(direct_sum(direct_sum(parts[0], parts[1]), parts[2]) == sum);
  CHECK(irreducible_components(running_example()).size() == 1);
}

TEST_CASE("boxed sums of enriched fillings") {
  const Filling a =
      make_filling({3, 3, 3}, {{1, 2}, {2, 2}, {2, 3}, {3, 1}});
  const Filling b = make_filling({2, 2}, {{1, 1}, {2, 1}, {2, 2}});
  const Filling sum = boxed_sum(a, b);
  CHECK(sum == make_filling({5, 5, 5, 5, 5}, {{1, 2},
                                              {2, 2},
                                              {2, 3},
                                              {3, 1},
                                              {4, 4},
                                              {5, 4},
                                              {5, 5}}));
  const auto parts = box_components(sum);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == a);
  CHECK(parts[1] == b);
}

TEST_CASE("permutation enumeration is complete and canonical") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    CHECK(static_cast<long long>(perms.size()) == factorial(n));
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    CHECK(std::adjacent_find(perms.begin(), perms.end()) == perms.end());
  }
}

TEST_CASE("insertion tables hit known images") {
  CHECK(permutation_from_insertion_table({1}) == Permutation({1}));
  CHECK(permutation_from_insertion_table({1, 2, 1, 2}) ==
        Permutation({3, 4, 1, 2}));
  CHECK(matching_from_insertion_table({1, 2, 1, 2}) ==
        Matching::from_pairs({{1, 3}, {4, 6}, {2, 7}, {5, 8}}));
  CHECK_THROWS_AS(permutation_from_insertion_table({1, 3}),
                  std::invalid_argument);
}

TEST_CASE("left-nesting-free enumeration: both routes agree and count n!") {
  for (int n = 1; n <= 5; ++n) {
    const auto fast = all_left_nesting_free_matchings(n);
    CHECK(static_cast<long long>(fast.size()) == factorial(n));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    CHECK(all_left_nesting_free_matchings_by_filtering(n) == fast);
    for (const Matching& m : fast) CHECK(!matching_has_left_nesting(m));
  }
}

TEST_CASE("all matchings counted by double factorials") {
  const long long expected[] = {1, 3, 15, 105};
  for (int n = 1; n <= 4; ++n) {
    const auto ms = all_matchings(n);
    CHECK(static_cast<long long>(ms.size()) == expected[n - 1]);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
  }
}

TEST_CASE("fillings of a shape enumerate all dot subsets") {
  for (const auto& heights :
       std::vector<std::vector<int>>{{1}, {1, 2}, {2, 2}, {1, 2, 3}}) {
    const PartitionShape shape(heights);
    const auto fills = fillings_of_shape(shape);
    CHECK(fills.size() == (1u << shape.cell_count()));
    CHECK(std::is_sorted(fills.begin(), fills.end()));
  }
}

TEST_CASE("flat shapes and flat column-strict fillings") {
  for (int len = 1; len <= 5; ++len) {
    const auto shapes = flat_shapes(len);
    CHECK(shapes.size() == (1u << (len - 1)));
    for (const auto& s : shapes) {
      CHECK(s.length() == len);
      CHECK(filling_predicates(Filling(s, std::vector<IndexSet>(
                                              static_cast<std::size_t>(len))))
                .flat);
    }
    // One dot per column, anywhere: matches the count of barred permutations.
    long long barred = 0;
    for (const Permutation& p : all_permutations(len))
      barred += 1LL << ascent_top_values(p).size();
    const auto fills = flat_column_strict_fillings(len);
    CHECK(static_cast<long long>(fills.size()) == barred);
    for (const Filling& f : fills) {
      CHECK(filling_predicates(f).flat);
      CHECK(filling_predicates(f).column_strict);
    }
  }
}

TEST_CASE("staircase column-positive fillings") {
  long long expected = 1;
  for (int len = 1; len <= 5; ++len) {
    expected *= (1LL << len) - 1;
    const auto fills = staircase_column_positive_fillings(len);
    CHECK(static_cast<long long>(fills.size()) == expected);
    for (const Filling& f : fills) {
      CHECK(filling_predicates(f).staircase);
      CHECK(filling_predicates(f).column_positive);
    }
  }
}

TEST_CASE("component counts add across direct sums") {
  const auto perms = all_permutations(3);
  for (const Permutation& a : perms) {
    for (const Permutation& b : perms) {
      CHECK(irreducible_components(direct_sum(a, b)).size() ==
            irreducible_components(a).size() +
                irreducible_components(b).size());
    }
  }
  const auto ms = all_left_nesting_free_matchings(3);
  for (const Matching& a : ms) {
    for (const Matching& b : ms) {
      CHECK(irreducible_components(direct_sum(a, b)).size() ==
            irreducible_components(a).size() +
                irreducible_components(b).size());
    }
  }
}
