#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "combistat/statistics.hpp"

using namespace combistat;

namespace {

Filling make_filling(std::vector<int> heights,
                     std::vector<std::pair<int, int>> cells) {
  return Filling::from_cells(PartitionShape(std::move(heights)),
                             std::move(cells));
}

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

}  // namespace

TEST_CASE("permutation statistics on the nine-entry example") {
  const PermStats st = perm_stats(Permutation({7, 3, 5, 6, 4, 1, 8, 9, 2}));
  CHECK(st.asc == IndexSet{5, 6, 8, 9});
  CHECK(st.des == IndexSet{1, 2, 3, 4});
  CHECK(st.p == IndexSet{5});
  CHECK(st.q == IndexSet{8});
  CHECK(st.adjasc == IndexSet{6, 9});
  CHECK(st.asc_silly == IndexSet{5, 6, 7, 8});
  CHECK(st.p_silly == IndexSet{6});
  CHECK(st.q_silly == IndexSet{5, 7, 8});
  CHECK(st.rmin == IndexSet{1, 2});
  CHECK(st.rmax == IndexSet{2, 9});
  CHECK(st.ascbottom == IndexSet{1, 3, 5, 8});
  CHECK(st.ascbottom_long == IndexSet{1, 3});
  CHECK(st.comp == 1);
  CHECK(st.asc_count() == 4);
  CHECK(st.des_count() == 4);
}

TEST_CASE("silly split on short examples") {
  const PermStats a = perm_stats(Permutation({3, 4, 1, 2}));
  CHECK(a.p_silly == IndexSet{2});
  CHECK(a.q_silly == IndexSet{3});
  const PermStats b = perm_stats(Permutation({5, 7, 6, 3, 4, 1, 8, 9, 2}));
  CHECK(b.p_silly == IndexSet{4});
  CHECK(b.q_silly == IndexSet{5, 7, 8});
  const PermStats single = perm_stats(Permutation({1}));
  CHECK(single.asc.empty());
  CHECK(single.rmin == IndexSet{1});
  CHECK(single.comp == 1);
}

TEST_CASE("matching statistics on the nine-arc example") {
  const MatchStats st = match_stats(nine_arc_matching());
  CHECK(st.n == 9);
  CHECK(st.radj == IndexSet{3, 5, 6, 8, 9});
  CHECK(st.ladj == IndexSet{1, 2, 3, 5, 6});
  CHECK(st.rne == IndexSet{3, 5});
  CHECK(st.rcr == IndexSet{6, 8, 9});
  CHECK(st.lrcr == IndexSet{6});
  CHECK(st.lcr == IndexSet{1, 2, 3, 5, 6});
  CHECK(st.rcr_single == IndexSet{8, 9});
  CHECK(st.lcr_single == IndexSet{1, 2, 3, 6});
  CHECK(st.min_arcs == IndexSet{1, 3, 5, 6, 7});
  CHECK(!st.has_left_nesting);
  CHECK(st.comp == 1);
  CHECK(st.inter_count() == 4);
}

TEST_CASE("matching statistics on small matchings") {
  const MatchStats a =
      match_stats(Matching::from_pairs({{1, 3}, {4, 6}, {2, 7}, {5, 8}}));
  CHECK(a.radj == IndexSet{3, 4});
  CHECK(a.rne == IndexSet{3});
  CHECK(a.rcr == IndexSet{4});

  const MatchStats single = match_stats(Matching::from_pairs({{1, 2}}));
  CHECK(single.min_count() == 1);
  CHECK(single.inter_count() == 1);
  CHECK(single.radj.empty());

  const MatchStats nested = match_stats(Matching::from_pairs({{1, 4}, {2, 3}}));
  CHECK(nested.has_left_nesting);
}

TEST_CASE("filling statistics on the running example") {
  const FillStats st = fill_stats(running_example());
  CHECK(st.lazy == IndexSet{5, 6, 8});
  CHECK(st.min_set == IndexSet{1, 3, 5, 6, 7});
  CHECK(st.max_set == IndexSet{1, 2});
  CHECK(st.column_strict);
  CHECK(st.rmax_set() == IndexSet{2, 9});
  CHECK(st.des_set() == IndexSet{3, 5});
  CHECK(st.asc_set() == IndexSet{2, 4, 8, 9});
  CHECK(st.rep_set() == IndexSet{6, 7});
  CHECK(st.rmax_count == 2);
}

TEST_CASE("column-strict accessors reject general fillings") {
  const Filling general = make_filling({2, 2}, {{1, 1}, {1, 2}, {2, 2}});
  const FillStats st = fill_stats(general);
  CHECK(!st.column_strict);
  CHECK_THROWS_AS(st.des_set(), std::domain_error);
  CHECK_THROWS_AS(st.rmax_set(), std::domain_error);
}

TEST_CASE("rmax and lmin on a staircase filling and its image shape") {
  const Filling stair = make_filling(
      {1, 2, 3, 4, 5},
      {{1, 1}, {2, 1}, {3, 1}, {3, 3}, {4, 3}, {5, 2}, {5, 3}});
  const FillStats st = fill_stats(stair);
  CHECK(st.min_count() == 3);
  CHECK(st.rmax_count == 4);

  const Filling enriched = make_filling(
      {5, 5, 5, 5, 5},
      {{1, 2}, {2, 1}, {3, 1}, {3, 5}, {4, 4}, {5, 2}, {5, 3}});
  const FillStats est = fill_stats(enriched);
  CHECK(est.lmin_count == 3);
  CHECK(est.rmax_count == 4);
}

TEST_CASE("ascent tops split into the three pattern classes") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const PermStats st = perm_stats(p);
      CHECK(set_union(set_union(st.p, st.q), st.adjasc) == st.asc);
      CHECK(sets_disjoint(st.p, st.q));
      CHECK(sets_disjoint(st.p, st.adjasc));
      CHECK(sets_disjoint(st.q, st.adjasc));
      CHECK(st.asc_silly.size() == st.asc.size());
      CHECK(set_union(st.p_silly, st.q_silly) == st.asc_silly);
      CHECK(sets_disjoint(st.p_silly, st.q_silly));
      CHECK(st.des_count() == n - 1 - st.asc_count());
      // asc and des split the values seen at positions 2..n.
      IndexSet tail;
      for (int j = 2; j <= n; ++j) tail.push_back(p.value_at(j));
      CHECK(set_union(st.asc, st.des) == make_set(tail));
      CHECK(static_cast<int>(st.ascbottom_long.size()) ==
            st.p_count() + st.q_count());
    }
  }
}

TEST_CASE("right adjacencies split into nestings and crossings") {
  for (int n = 1; n <= 6; ++n) {
    for (const Matching& m : all_left_nesting_free_matchings(n)) {
      const MatchStats st = match_stats(m);
      CHECK(set_union(st.rne, st.rcr) == st.radj);
      CHECK(sets_disjoint(st.rne, st.rcr));
      CHECK(st.lrcr == set_intersection(st.lrcr, st.rcr));
      CHECK(st.lcr_single ==
            set_difference(st.lcr, set_shifted(st.lrcr, -1)));
      // Left adjacencies and crossings coincide without left nestings.
      CHECK(st.ladj == st.lcr);
      CHECK(st.radj_count() == st.ladj_count());
    }
  }
}

TEST_CASE("adjacency counts agree on every matching") {
  for (int n = 1; n <= 5; ++n) {
    for (const Matching& m : all_matchings(n)) {
      const MatchStats st = match_stats(m);
      CHECK(st.radj_count() == st.ladj_count());
    }
  }
}

TEST_CASE("column-strict fillings split columns two onward") {
  for (int len = 1; len <= 5; ++len) {
    for (const Filling& f : flat_column_strict_fillings(len)) {
      const FillStats st = fill_stats(f);
      IndexSet rest;
      for (int i = 2; i <= len; ++i) rest.push_back(i);
      CHECK(set_union(set_union(st.des_set(), st.asc_set()), st.rep_set()) ==
            rest);
      CHECK(sets_disjoint(st.des_set(), st.asc_set()));
      CHECK(sets_disjoint(st.des_set(), st.rep_set()));
      CHECK(sets_disjoint(st.asc_set(), st.rep_set()));
    }
  }
}
