#pragma once

#include <utility>
#include <vector>

#include "combistat/sets.hpp"

namespace combistat {

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

// Single-row word on values 1..n, n >= 1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  int value_at(int pos) const;     // 1-based position
  int position_of(int value) const;
  const std::vector<int>& word() const { return word_; }

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> pos_;  // pos_[v-1] = position of value v
};

// Values v = word[j] with j >= 2 and word[j-1] < v.
IndexSet ascent_top_values(const Permutation& p);
// (ascent tops united with the first entry) minus {n}.
IndexSet silly_ascent_top_values(const Permutation& p);

// Bars sit on ascent tops (value set).
class BarredPermutation {
 public:
  BarredPermutation(Permutation base, IndexSet bars);
  const Permutation& base() const { return base_; }
  const IndexSet& bars() const { return bars_; }
  int size() const { return base_.size(); }
  bool operator==(const BarredPermutation& o) const {
    return base_ == o.base_ && bars_ == o.bars_;
  }

 private:
  Permutation base_;
  IndexSet bars_;
};

// Hats sit on silly ascent tops (value set).
class HattedPermutation {
 public:
  HattedPermutation(Permutation base, IndexSet hats);
  const Permutation& base() const { return base_; }
  const IndexSet& hats() const { return hats_; }
  int size() const { return base_.size(); }
  bool operator==(const HattedPermutation& o) const {
    return base_ == o.base_ && hats_ == o.hats_;
  }

 private:
  Permutation base_;
  IndexSet hats_;
};

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

struct Arc {
  int opener = 0;
  int closer = 0;
  bool operator==(const Arc& o) const {
    return opener == o.opener && closer == o.closer;
  }
};

// Perfect matching on points 1..2n; arcs stored sorted by closer and
// indexed 1..n in that order.
class Matching {
 public:
  explicit Matching(std::vector<Arc> arcs);
  static Matching from_pairs(const std::vector<std::pair<int, int>>& pairs);

  int size() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int index) const;  // 1-based
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool is_opener(int point) const;
  int arc_index_of_opener(int point) const;  // 0 when not an opener
  int arc_index_of_closer(int point) const;  // 0 when not a closer

  // Flattened (opener, closer) pairs in arc order; the defining sequence.
  std::vector<int> defining_sequence() const;

  bool operator==(const Matching& o) const { return arcs_ == o.arcs_; }
  bool operator<(const Matching& o) const {
    return defining_sequence() < o.defining_sequence();
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<int> opener_arc_;  // point -> arc index, 0 if closer
  std::vector<int> closer_arc_;
};

// Indices i >= 2 with closer(i-1) + 1 == closer(i).
IndexSet right_adjacency_indices(const Matching& m);
// Adjacent openers o, o+1 whose left arc closes later than the right one.
bool matching_has_left_nesting(const Matching& m);

// Base must be left-nesting-free; marks are a subset of its right adjacencies.
class MarkedMatching {
 public:
  MarkedMatching(Matching base, IndexSet marks);
  const Matching& base() const { return base_; }
  const IndexSet& marks() const { return marks_; }
  int size() const { return base_.size(); }
  bool operator==(const MarkedMatching& o) const {
    return base_ == o.base_ && marks_ == o.marks_;
  }

 private:
  Matching base_;
  IndexSet marks_;
};

// ---------------------------------------------------------------------------
// Shapes and fillings
// ---------------------------------------------------------------------------

// Bottom-justified partition shape given by weakly increasing positive column
// heights, columns numbered 1.. from the left, rows 1.. from the bottom.
class PartitionShape {
 public:
  explicit PartitionShape(std::vector<int> column_heights);

  int length() const { return static_cast<int>(heights_.size()); }
  int column_height(int i) const;  // 1-based
  const std::vector<int>& column_heights() const { return heights_; }
  int row_count() const { return heights_.back(); }
  int row_length(int j) const;  // columns covered by row j
  int cell_count() const;

  // Columns i >= 2 with height(i-1) == height(i); the lazy set.
  IndexSet lazy_columns() const;

  bool operator==(const PartitionShape& o) const {
    return heights_ == o.heights_;
  }

  // Flat shape of given length with the given lazy set (subset of 2..length).
  static PartitionShape flat_from_lazy(int length, const IndexSet& lazy);

 private:
  std::vector<int> heights_;
};

// Dots inside a shape; any number of dots per cell is forbidden beyond one.
class Filling {
 public:
  Filling(PartitionShape shape, std::vector<IndexSet> dots_by_column);
  static Filling from_cells(PartitionShape shape,
                            std::vector<std::pair<int, int>> cells);

  const PartitionShape& shape() const { return shape_; }
  int length() const { return shape_.length(); }
  int dot_count() const;
  const IndexSet& column_dots(int i) const;  // sorted rows, 1-based column
  int single_dot_row(int i) const;           // requires exactly one dot
  bool has_dot(int col, int row) const;
  std::vector<std::pair<int, int>> cells() const;  // sorted (col, row)
  IndexSet row_dot_columns(int j) const;

  // (heights..., then flattened sorted cells); the defining sequence.
  std::vector<int> defining_sequence() const;

  bool operator==(const Filling& o) const {
    return shape_ == o.shape_ && dots_ == o.dots_;
  }
  bool operator<(const Filling& o) const {
    return defining_sequence() < o.defining_sequence();
  }

 private:
  PartitionShape shape_;
  std::vector<IndexSet> dots_;
};

struct FillingFlags {
  bool column_positive = false;  // every column has a dot
  bool column_strict = false;    // every column has exactly one dot
  bool row_positive = false;
  bool row_strict = false;
  bool strict_filling = false;   // column_strict and row_strict
  bool flat = false;             // all row lengths distinct
  bool steep = false;            // all column heights distinct
  bool staircase = false;        // heights are exactly 1, 2, ..., length
  bool enriched_permutation = false;
};
FillingFlags filling_predicates(const Filling& f);

// ---------------------------------------------------------------------------
// Direct sums, components, boxed sums
// ---------------------------------------------------------------------------

Permutation direct_sum(const Permutation& a, const Permutation& b);
BarredPermutation direct_sum(const BarredPermutation& a,
                             const BarredPermutation& b);
HattedPermutation direct_sum(const HattedPermutation& a,
                             const HattedPermutation& b);
Matching direct_sum(const Matching& a, const Matching& b);
MarkedMatching direct_sum(const MarkedMatching& a, const MarkedMatching& b);
Filling direct_sum(const Filling& a, const Filling& b);

std::vector<Permutation> irreducible_components(const Permutation& p);
std::vector<BarredPermutation> irreducible_components(
    const BarredPermutation& p);
std::vector<HattedPermutation> irreducible_components(
    const HattedPermutation& p);
std::vector<Matching> irreducible_components(const Matching& m);
std::vector<MarkedMatching> irreducible_components(const MarkedMatching& m);
std::vector<Filling> irreducible_components(const Filling& f);

// Both operands must be enriched permutation fillings.
Filling boxed_sum(const Filling& a, const Filling& b);
std::vector<Filling> box_components(const Filling& f);

// ---------------------------------------------------------------------------
// Enumeration (canonical order: lexicographic on the defining sequence)
// ---------------------------------------------------------------------------

std::vector<Permutation> all_permutations(int n);

// Insertion tables alpha with alpha[j] in 1..j.
Permutation permutation_from_insertion_table(const std::vector<int>& table);
Matching matching_from_insertion_table(const std::vector<int>& table);

std::vector<Matching> all_left_nesting_free_matchings(int n);
// Independent slow route: filter all matchings.
std::vector<Matching> all_left_nesting_free_matchings_by_filtering(int n);
std::vector<Matching> all_matchings(int n);

std::vector<Filling> fillings_of_shape(const PartitionShape& shape);
std::vector<PartitionShape> flat_shapes(int length);
std::vector<Filling> flat_column_strict_fillings(int length);
std::vector<Filling> staircase_column_positive_fillings(int length);

}  // namespace combistat
