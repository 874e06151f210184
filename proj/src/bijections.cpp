#include "combistat/bijections.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "combistat/statistics.hpp"

namespace combistat {

namespace {

void require_flat_column_strict(const Filling& f, const char* what) {
  const FillingFlags flags = filling_predicates(f);
  if (!flags.flat || !flags.column_strict)
    throw std::domain_error(std::string(what) +
                            " requires a flat column-strict filling");
}

void require_staircase_positive(const Filling& f, const char* what) {
  const FillingFlags flags = filling_predicates(f);
  if (!flags.staircase || !flags.column_positive)
    throw std::domain_error(std::string(what) +
                            " requires a column-positive staircase filling");
}

void require_enriched(const Filling& f, const char* what) {
  if (!filling_predicates(f).enriched_permutation)
    throw std::domain_error(std::string(what) +
                            " requires an enriched permutation filling");
}

}  // namespace

// ---------------------------------------------------------------------------
// Fillings <-> barred permutations
// ---------------------------------------------------------------------------

BarredPermutation flat_to_barred(const Filling& f) {
  require_flat_column_strict(f, "flat_to_barred");
  const IndexSet lazy = f.shape().lazy_columns();
  std::vector<std::vector<int>> blocks{{1}};
  IndexSet bars;
  for (int i = 2; i <= f.length(); ++i) {
    const int a = f.single_dot_row(i);
    if (set_contains(lazy, i)) {
      blocks[a - 1].push_back(i);
      bars.push_back(i);
    } else if (a == static_cast<int>(blocks.size()) + 1) {
      blocks.push_back({i});
    } else {
      blocks.insert(blocks.begin() + (a - 1), {i});
    }
  }
  std::vector<int> word;
  for (const auto& block : blocks) word.insert(word.end(), block.begin(), block.end());
  return BarredPermutation(Permutation(std::move(word)), std::move(bars));
}

Filling barred_to_flat(const BarredPermutation& p) {
  const int n = p.size();
  const PartitionShape shape = PartitionShape::flat_from_lazy(n, p.bars());
  std::vector<IndexSet> dots(n);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int pos = 1; pos <= p.base().position_of(i); ++pos) {
      const int v = p.base().value_at(pos);
      if (v <= i && !set_contains(p.bars(), v)) ++count;
    }
    dots[i - 1] = {count};
  }
  return Filling(shape, std::move(dots));
}

// ---------------------------------------------------------------------------
// Fillings <-> hatted permutations
// ---------------------------------------------------------------------------

HattedPermutation flat_to_hatted(const Filling& f) {
  require_flat_column_strict(f, "flat_to_hatted");
  const IndexSet lazy = f.shape().lazy_columns();
  // Sentinel entry 0 keeps the first block addressable; dropped at the end.
  std::vector<std::vector<int>> blocks{{0}};
  IndexSet hats;
  for (int i = 1; i <= f.length(); ++i) {
    const int a = f.single_dot_row(i);
    if (set_contains(lazy, i + 1)) {
      blocks[a - 1].push_back(i);
      hats.push_back(i);
    } else {
      blocks.insert(blocks.begin() + a, {i});
    }
  }
  std::vector<int> word;
  for (const auto& block : blocks) word.insert(word.end(), block.begin(), block.end());
  word.erase(word.begin());
  return HattedPermutation(Permutation(std::move(word)), std::move(hats));
}

Filling hatted_to_flat(const HattedPermutation& p) {
  const int n = p.size();
  const PartitionShape shape =
      PartitionShape::flat_from_lazy(n, set_shifted(p.hats(), 1));
  std::vector<IndexSet> dots(n);
  for (int i = 1; i <= n; ++i) {
    int count = 1;
    for (int pos = 1; pos < p.base().position_of(i); ++pos) {
      const int v = p.base().value_at(pos);
      if (v < i && !set_contains(p.hats(), v)) ++count;
    }
    dots[i - 1] = {count};
  }
  return Filling(shape, std::move(dots));
}

// ---------------------------------------------------------------------------
// Row surgery helpers
// ---------------------------------------------------------------------------

namespace {

// Rows bottom to top; lengths are weakly decreasing upward.
std::vector<int> row_lengths(const PartitionShape& shape) {
  std::vector<int> out;
  for (int j = 1; j <= shape.row_count(); ++j) out.push_back(shape.row_length(j));
  return out;
}

Filling remove_empty_rows(const Filling& f) {
  std::vector<int> kept;  // nonempty rows, ascending
  for (int j = 1; j <= f.shape().row_count(); ++j)
    if (!f.row_dot_columns(j).empty()) kept.push_back(j);
  auto rank = [&](int row) {
    return static_cast<int>(std::lower_bound(kept.begin(), kept.end(), row) -
                            kept.begin()) +
           1;
  };
  std::vector<int> heights;
  std::vector<IndexSet> dots;
  for (int i = 1; i <= f.length(); ++i) {
    const int h = f.shape().column_height(i);
    heights.push_back(static_cast<int>(
        std::upper_bound(kept.begin(), kept.end(), h) - kept.begin()));
    IndexSet col;
    for (int r : f.column_dots(i)) col.push_back(rank(r));
    dots.push_back(std::move(col));
  }
  return Filling(PartitionShape(std::move(heights)), std::move(dots));
}

}  // namespace

// ---------------------------------------------------------------------------
// Matchings <-> fillings (border labelling)
// ---------------------------------------------------------------------------

Filling matching_to_flat(const Matching& m) {
  if (matching_has_left_nesting(m))
    throw std::domain_error("matching_to_flat requires no left nesting");
  const int n = m.size();
  // Openers sorted ascending give the strict filling's row order.
  std::vector<int> openers;
  for (const Arc& a : m.arcs()) openers.push_back(a.opener);
  std::sort(openers.begin(), openers.end());
  std::vector<int> heights;
  std::vector<IndexSet> dots;
  for (int i = 1; i <= n; ++i) {
    const Arc& a = m.arc(i);
    const int below = static_cast<int>(
        std::lower_bound(openers.begin(), openers.end(), a.closer) -
        openers.begin());
    const int row = static_cast<int>(
        std::lower_bound(openers.begin(), openers.end(), a.opener) -
        openers.begin()) +
        1;
    heights.push_back(below);
    dots.push_back({row});
  }
  return flatten(Filling(PartitionShape(std::move(heights)), std::move(dots)));
}

Matching flat_to_matching(const Filling& f) {
  const FillingFlags flags = filling_predicates(f);
  if (!flags.flat || !flags.column_strict || !flags.row_positive)
    throw std::domain_error(
        "flat_to_matching requires a flat column-strict row-positive filling");
  const int len = f.length();
  const std::vector<int> lengths = row_lengths(f.shape());
  // Split every row into one row per dot; dots spread bottom-up by column.
  std::vector<int> split_offset(lengths.size() + 1, 0);
  for (std::size_t j = 1; j <= lengths.size(); ++j)
    split_offset[j] = split_offset[j - 1] +
                      static_cast<int>(f.row_dot_columns(static_cast<int>(j)).size());
  std::vector<int> split_heights(len, 0);
  for (int i = 1; i <= len; ++i) {
    int total = 0;
    for (std::size_t j = 1; j <= lengths.size(); ++j)
      if (lengths[j - 1] >= len - i + 1)
        total += static_cast<int>(f.row_dot_columns(static_cast<int>(j)).size());
    split_heights[i - 1] = total;
  }
  auto opener_label = [&](int split_row) {
    int shorter = 0;
    for (int h : split_heights)
      if (h < split_row) ++shorter;
    return split_row + shorter;
  };
  std::vector<Arc> arcs;
  for (int i = 1; i <= len; ++i) {
    const int j = f.single_dot_row(i);
    const IndexSet in_row = f.row_dot_columns(j);
    const int rank = static_cast<int>(
        std::lower_bound(in_row.begin(), in_row.end(), i) - in_row.begin()) +
        1;
    const int split_row = split_offset[j - 1] + rank;
    arcs.push_back(Arc{opener_label(split_row), i + split_heights[i - 1]});
  }
  return Matching(std::move(arcs));
}

// ---------------------------------------------------------------------------
// Fillings <-> marked matchings
// ---------------------------------------------------------------------------

MarkedMatching flat_to_marked(const Filling& f) {
  require_flat_column_strict(f, "flat_to_marked");
  const Matching m = flat_to_matching(remove_empty_rows(f));
  return MarkedMatching(m, f.shape().lazy_columns());
}

Filling marked_to_flat(const MarkedMatching& m) {
  const Filling packed = matching_to_flat(m.base());
  const int len = packed.length();
  const IndexSet packed_lazy = packed.shape().lazy_columns();
  if (!set_difference(m.marks(), packed_lazy).empty())
    throw std::logic_error("marks escaped the packed lazy set");
  const PartitionShape shape =
      PartitionShape::flat_from_lazy(len, m.marks());
  // Rows keep their lengths; locate each packed row inside the padded shape.
  const std::vector<int> packed_lengths = row_lengths(packed.shape());
  const std::vector<int> padded_lengths = row_lengths(shape);
  auto padded_row = [&](int packed_row) {
    const int want = packed_lengths[packed_row - 1];
    for (std::size_t j = 0; j < padded_lengths.size(); ++j)
      if (padded_lengths[j] == want) return static_cast<int>(j) + 1;
    throw std::logic_error("row length vanished while padding");
  };
  std::vector<IndexSet> dots;
  for (int i = 1; i <= len; ++i)
    dots.push_back({padded_row(packed.single_dot_row(i))});
  return Filling(shape, std::move(dots));
}

// ---------------------------------------------------------------------------
// steepen / flatten
// ---------------------------------------------------------------------------

Filling steepen(const Filling& f) {
  const std::vector<int>& heights = f.shape().column_heights();
  std::vector<int> new_heights;
  std::vector<int> new_col(f.length() + 1, 0);
  for (int i = 1; i <= f.length(); ++i) {
    if (new_heights.empty() || heights[i - 1] != new_heights.back())
      new_heights.push_back(heights[i - 1]);
    new_col[i] = static_cast<int>(new_heights.size());
  }
  std::vector<IndexSet> dots(new_heights.size());
  std::set<std::pair<int, int>> taken;
  for (const auto& [c, r] : f.cells()) {
    if (!taken.insert({new_col[c], r}).second)
      throw std::domain_error("steepen would merge two dots into one cell");
    dots[new_col[c] - 1].push_back(r);
  }
  return Filling(PartitionShape(std::move(new_heights)), std::move(dots));
}

Filling flatten(const Filling& f) {
  if (!filling_predicates(f).column_strict)
    throw std::domain_error("flatten requires a column-strict filling");
  const std::vector<int> lengths = row_lengths(f.shape());
  // new_row[j] = number of distinct lengths among rows 1..j.
  std::vector<int> new_row(lengths.size() + 1, 0);
  for (std::size_t j = 1; j <= lengths.size(); ++j)
    new_row[j] =
        new_row[j - 1] + (j == 1 || lengths[j - 1] != lengths[j - 2] ? 1 : 0);
  std::vector<int> heights;
  std::vector<IndexSet> dots;
  for (int i = 1; i <= f.length(); ++i) {
    heights.push_back(new_row[f.shape().column_height(i)]);
    dots.push_back({new_row[f.single_dot_row(i)]});
  }
  return Filling(PartitionShape(std::move(heights)), std::move(dots));
}

// ---------------------------------------------------------------------------
// Staircase <-> enriched square fillings
// ---------------------------------------------------------------------------

Filling staircase_to_enriched(const Filling& f) {
  require_staircase_positive(f, "staircase_to_enriched");
  const int len = f.length();
  std::vector<std::pair<int, int>> cells = {{1, 1}};
  for (int i = 2; i <= len; ++i) {
    const int m = f.column_dots(i).back();
    for (auto& [c, r] : cells)
      if (r >= m) ++r;
    for (int r : f.column_dots(i)) cells.emplace_back(i, r);
  }
  return Filling::from_cells(PartitionShape(std::vector<int>(len, len)),
                             std::move(cells));
}

Filling enriched_to_staircase(const Filling& f) {
  require_enriched(f, "enriched_to_staircase");
  const int len = f.length();
  std::vector<int> leftmost(len + 1, 0);
  for (int j = 1; j <= len; ++j) leftmost[j] = f.row_dot_columns(j).front();
  std::vector<int> heights;
  std::vector<IndexSet> dots;
  for (int i = 1; i <= len; ++i) {
    IndexSet kept;  // rows surviving in column i, bottom to top
    for (int j = 1; j <= len; ++j)
      if (leftmost[j] <= i) kept.push_back(j);
    IndexSet col;
    for (int r : f.column_dots(i))
      col.push_back(static_cast<int>(
                        std::lower_bound(kept.begin(), kept.end(), r) -
                        kept.begin()) +
                    1);
    heights.push_back(static_cast<int>(kept.size()));
    dots.push_back(std::move(col));
  }
  const Filling out(PartitionShape(std::move(heights)), std::move(dots));
  if (!filling_predicates(out).staircase)
    throw std::logic_error("flushed filling is not a staircase");
  return out;
}

Filling transpose_square(const Filling& f) {
  const int len = f.length();
  for (int h : f.shape().column_heights())
    if (h != len)
      throw std::domain_error("transpose_square requires a square shape");
  std::vector<std::pair<int, int>> cells;
  for (const auto& [c, r] : f.cells())
    cells.emplace_back(len + 1 - r, len + 1 - c);
  return Filling::from_cells(f.shape(), std::move(cells));
}

Filling staircase_involution(const Filling& f) {
  return enriched_to_staircase(transpose_square(staircase_to_enriched(f)));
}

// ---------------------------------------------------------------------------
// Left crossings to ascent bottoms
// ---------------------------------------------------------------------------

namespace {

std::vector<int> left_crossing_word(const std::vector<Arc>& arcs) {
  const int n = static_cast<int>(arcs.size());
  if (n == 1) return {1};
  const Arc last = arcs.back();
  if (last.closer != 2 * n) throw std::logic_error("arcs not sorted by closer");
  const int o = last.opener;
  std::vector<Arc> rest(arcs.begin(), arcs.end() - 1);
  for (Arc& a : rest) {
    if (a.opener > o) --a.opener;
    if (a.closer > o) --a.closer;
  }
  std::vector<int> word = left_crossing_word(rest);
  if (o == 2 * n - 1) {
    word.insert(word.begin(), n);
    return word;
  }
  int succ_closer_arc = 0;  // arc closing at o+1
  int pred_closer_arc = 0;  // arc closing at o-1
  int pred_opener_arc = 0;  // arc opening at o-1
  for (int i = 1; i < n; ++i) {
    if (arcs[i - 1].closer == o + 1) succ_closer_arc = i;
    if (arcs[i - 1].closer == o - 1) pred_closer_arc = i;
    if (arcs[i - 1].opener == o - 1) pred_opener_arc = i;
  }
  if (succ_closer_arc == 0)
    throw std::logic_error("point after the last opener must be a closer");
  if (pred_closer_arc != 0) {
    const auto at = std::find(word.begin(), word.end(), succ_closer_arc);
    word.insert(at, n);
  } else if (pred_opener_arc != 0) {
    const auto at = std::find(word.begin(), word.end(), pred_opener_arc);
    word.insert(at + 1, n);
  } else {
    throw std::logic_error("point before the last opener is unmatched");
  }
  return word;
}

}  // namespace

Permutation left_crossing_permutation(const Matching& m) {
  if (matching_has_left_nesting(m))
    throw std::domain_error(
        "left_crossing_permutation requires no left nesting");
  return Permutation(left_crossing_word(m.arcs()));
}

}  // namespace combistat
