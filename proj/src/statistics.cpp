#include "combistat/statistics.hpp"

#include <stdexcept>

namespace combistat {

PermStats perm_stats(const Permutation& perm) {
  PermStats st;
  const int n = perm.size();
  st.asc = ascent_top_values(perm);
  st.asc_silly = silly_ascent_top_values(perm);
  for (int j = 2; j <= n; ++j)
    if (perm.value_at(j - 1) > perm.value_at(j)) st.des.push_back(perm.value_at(j));
  st.des = make_set(std::move(st.des));

  for (int a : st.asc) {
    const int j = perm.position_of(a);
    if (perm.value_at(j - 1) == a - 1)
      st.adjasc.push_back(a);
    else if (perm.position_of(a - 1) > j)
      st.p.push_back(a);
    else
      st.q.push_back(a);  // a-1 sits left of the entry before a
  }

  for (int a : st.asc_silly) {
    // a < n, so a+1 exists.
    if (perm.position_of(a + 1) < perm.position_of(a))
      st.p_silly.push_back(a);
    else
      st.q_silly.push_back(a);
  }

  int best = n + 1;
  for (int j = n; j >= 1; --j)
    if (perm.value_at(j) < best) {
      best = perm.value_at(j);
      st.rmin.push_back(best);
    }
  st.rmin = make_set(std::move(st.rmin));
  best = 0;
  for (int j = n; j >= 1; --j)
    if (perm.value_at(j) > best) {
      best = perm.value_at(j);
      st.rmax.push_back(best);
    }
  st.rmax = make_set(std::move(st.rmax));

  for (int j = 1; j < n; ++j) {
    if (perm.value_at(j) < perm.value_at(j + 1))
      st.ascbottom.push_back(perm.value_at(j));
    if (perm.value_at(j) < perm.value_at(j + 1) - 1)
      st.ascbottom_long.push_back(perm.value_at(j));
  }
  st.ascbottom = make_set(std::move(st.ascbottom));
  st.ascbottom_long = make_set(std::move(st.ascbottom_long));

  st.comp = static_cast<int>(irreducible_components(perm).size());
  return st;
}

MatchStats match_stats(const Matching& m) {
  MatchStats st;
  st.n = m.size();
  st.radj = right_adjacency_indices(m);
  for (int i : st.radj) {
    if (m.arc(i).opener < m.arc(i - 1).opener)
      st.rne.push_back(i);
    else
      st.rcr.push_back(i);
    if (m.arc(i - 1).opener + 1 == m.arc(i).opener) st.lrcr.push_back(i);
  }
  for (int i = 1; i <= st.n; ++i) {
    const int j = m.arc_index_of_opener(m.arc(i).opener + 1);
    if (j == 0) continue;
    st.ladj.push_back(i);
    if (m.arc(i).closer < m.arc(j).closer) st.lcr.push_back(i);
  }
  st.ladj = make_set(std::move(st.ladj));
  st.lcr = make_set(std::move(st.lcr));
  st.rcr_single = set_difference(st.rcr, st.lrcr);
  st.lcr_single = set_difference(st.lcr, set_shifted(st.lrcr, -1));
  for (int i = 1; i <= st.n; ++i)
    if (m.arc(i).opener < m.arc(1).closer) st.min_arcs.push_back(i);
  st.has_left_nesting = matching_has_left_nesting(m);
  st.comp = static_cast<int>(irreducible_components(m).size());
  return st;
}

namespace {

const IndexSet& require_column_strict(const std::optional<IndexSet>& field) {
  if (!field)
    throw std::domain_error("statistic requires a column-strict filling");
  return *field;
}

}  // namespace

const IndexSet& FillStats::rmax_set() const { return require_column_strict(rmax_cols); }
const IndexSet& FillStats::des_set() const { return require_column_strict(des_cols); }
const IndexSet& FillStats::asc_set() const { return require_column_strict(asc_cols); }
const IndexSet& FillStats::rep_set() const { return require_column_strict(rep_cols); }

FillStats fill_stats(const Filling& f) {
  FillStats st;
  const PartitionShape& shape = f.shape();
  const int len = f.length();
  st.lazy = shape.lazy_columns();
  for (int i = 1; i <= len; ++i) {
    if (f.has_dot(i, 1)) st.min_set.push_back(i);
    if (f.has_dot(i, shape.column_height(i))) st.max_set.push_back(i);
  }

  const auto dots = f.cells();
  for (const auto& [c, r] : dots) {
    const int depth = shape.column_height(c) - r;
    bool rightmost_shallow = true;
    bool leftmost_low = true;
    for (const auto& [c2, r2] : dots) {
      if (c2 > c && shape.column_height(c2) - r2 <= depth)
        rightmost_shallow = false;
      if (r2 < r && c2 <= c) leftmost_low = false;
    }
    if (rightmost_shallow) ++st.rmax_count;
    if (leftmost_low) ++st.lmin_count;
  }

  st.column_strict = filling_predicates(f).column_strict;
  if (st.column_strict) {
    IndexSet rmax, des, asc, rep;
    for (int i = 1; i <= len; ++i) {
      const int depth = shape.column_height(i) - f.single_dot_row(i);
      bool best = true;
      for (int j = i + 1; j <= len; ++j)
        if (shape.column_height(j) - f.single_dot_row(j) <= depth) best = false;
      if (best) rmax.push_back(i);
      if (i >= 2) {
        const int prev = f.single_dot_row(i - 1);
        const int cur = f.single_dot_row(i);
        if (prev > cur)
          des.push_back(i);
        else if (prev < cur)
          asc.push_back(i);
        else
          rep.push_back(i);
      }
    }
    st.rmax_cols = std::move(rmax);
    st.des_cols = std::move(des);
    st.asc_cols = std::move(asc);
    st.rep_cols = std::move(rep);
  }
  return st;
}

}  // namespace combistat
