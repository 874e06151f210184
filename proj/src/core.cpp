#include "combistat/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace combistat {

// ---------------------------------------------------------------------------
// Set utilities
// ---------------------------------------------------------------------------

IndexSet make_set(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool set_contains(const IndexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

IndexSet set_shifted(const IndexSet& s, int delta) {
  IndexSet out = s;
  for (int& v : out) v += delta;
  return out;
}

bool sets_disjoint(const IndexSet& a, const IndexSet& b) {
  return set_intersection(a, b).empty();
}

std::string set_to_string(const IndexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw std::invalid_argument("permutation must be nonempty");
  pos_.assign(n, 0);
  for (int j = 1; j <= n; ++j) {
    const int v = word_[j - 1];
    if (v < 1 || v > n || pos_[v - 1] != 0)
      throw std::invalid_argument("word is not a permutation of 1..n");
    pos_[v - 1] = j;
  }
}

int Permutation::value_at(int pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("position out of range");
  return word_[pos - 1];
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size()) throw std::out_of_range("value out of range");
  return pos_[value - 1];
}

IndexSet ascent_top_values(const Permutation& p) {
  IndexSet out;
  for (int j = 2; j <= p.size(); ++j)
    if (p.value_at(j - 1) < p.value_at(j)) out.push_back(p.value_at(j));
  return make_set(std::move(out));
}

IndexSet silly_ascent_top_values(const Permutation& p) {
  IndexSet out = ascent_top_values(p);
  out = set_union(out, {p.value_at(1)});
  return set_difference(out, {p.size()});
}

BarredPermutation::BarredPermutation(Permutation base, IndexSet bars)
    : base_(std::move(base)), bars_(make_set(std::move(bars))) {
  if (!set_difference(bars_, ascent_top_values(base_)).empty())
    throw std::invalid_argument("bars must sit on ascent tops");
}

HattedPermutation::HattedPermutation(Permutation base, IndexSet hats)
    : base_(std::move(base)), hats_(make_set(std::move(hats))) {
  if (!set_difference(hats_, silly_ascent_top_values(base_)).empty())
    throw std::invalid_argument("hats must sit on silly ascent tops");
}

// ---------------------------------------------------------------------------
// Matching
// ---------------------------------------------------------------------------

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  const int n = static_cast<int>(arcs_.size());
  if (n < 1) throw std::invalid_argument("matching must be nonempty");
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return a.closer < b.closer; });
  opener_arc_.assign(2 * n + 1, 0);
  closer_arc_.assign(2 * n + 1, 0);
  std::vector<bool> seen(2 * n + 1, false);
  for (int i = 1; i <= n; ++i) {
    const Arc& a = arcs_[i - 1];
    if (a.opener < 1 || a.closer < 1 || a.opener > 2 * n || a.closer > 2 * n)
      throw std::invalid_argument("arc endpoint outside 1..2n");
    if (a.opener >= a.closer)
      throw std::invalid_argument("arc opener must precede its closer");
    if (seen[a.opener] || seen[a.closer])
      throw std::invalid_argument("repeated matching endpoint");
    seen[a.opener] = seen[a.closer] = true;
    opener_arc_[a.opener] = i;
    closer_arc_[a.closer] = i;
  }
}

Matching Matching::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    arcs.push_back(Arc{std::min(a, b), std::max(a, b)});
  return Matching(std::move(arcs));
}

const Arc& Matching::arc(int index) const {
  if (index < 1 || index > size()) throw std::out_of_range("arc index");
  return arcs_[index - 1];
}

bool Matching::is_opener(int point) const {
  return arc_index_of_opener(point) != 0;
}

int Matching::arc_index_of_opener(int point) const {
  if (point < 1 || point > 2 * size()) return 0;
  return opener_arc_[point];
}

int Matching::arc_index_of_closer(int point) const {
  if (point < 1 || point > 2 * size()) return 0;
  return closer_arc_[point];
}

std::vector<int> Matching::defining_sequence() const {
  std::vector<int> out;
  out.reserve(2 * arcs_.size());
  for (const Arc& a : arcs_) {
    out.push_back(a.opener);
    out.push_back(a.closer);
  }
  return out;
}

IndexSet right_adjacency_indices(const Matching& m) {
  IndexSet out;
  for (int i = 2; i <= m.size(); ++i)
    if (m.arc(i - 1).closer + 1 == m.arc(i).closer) out.push_back(i);
  return out;
}

bool matching_has_left_nesting(const Matching& m) {
  for (int p = 1; p + 1 <= 2 * m.size(); ++p) {
    const int i = m.arc_index_of_opener(p);
    const int j = m.arc_index_of_opener(p + 1);
    if (i != 0 && j != 0 && m.arc(i).closer > m.arc(j).closer) return true;
  }
  return false;
}

MarkedMatching::MarkedMatching(Matching base, IndexSet marks)
    : base_(std::move(base)), marks_(make_set(std::move(marks))) {
  if (matching_has_left_nesting(base_))
    throw std::invalid_argument("marked matching base has a left nesting");
  if (!set_difference(marks_, right_adjacency_indices(base_)).empty())
    throw std::invalid_argument("marks must sit on right adjacencies");
}

// ---------------------------------------------------------------------------
// PartitionShape and Filling
// ---------------------------------------------------------------------------

PartitionShape::PartitionShape(std::vector<int> column_heights)
    : heights_(std::move(column_heights)) {
  if (heights_.empty()) throw std::invalid_argument("shape must be nonempty");
  int prev = 1;
  for (int h : heights_) {
    if (h < prev)
      throw std::invalid_argument("column heights must be weakly increasing");
    prev = h;
  }
  if (heights_.front() < 1)
    throw std::invalid_argument("column heights must be positive");
}

int PartitionShape::column_height(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("column index");
  return heights_[i - 1];
}

int PartitionShape::row_length(int j) const {
  if (j < 1 || j > row_count()) throw std::out_of_range("row index");
  int count = 0;
  for (int h : heights_)
    if (h >= j) ++count;
  return count;
}

int PartitionShape::cell_count() const {
  return std::accumulate(heights_.begin(), heights_.end(), 0);
}

IndexSet PartitionShape::lazy_columns() const {
  IndexSet out;
  for (int i = 2; i <= length(); ++i)
    if (heights_[i - 2] == heights_[i - 1]) out.push_back(i);
  return out;
}

PartitionShape PartitionShape::flat_from_lazy(int length, const IndexSet& lazy) {
  if (length < 1) throw std::invalid_argument("shape length must be positive");
  for (int i : lazy)
    if (i < 2 || i > length)
      throw std::invalid_argument("lazy column outside 2..length");
  std::vector<int> heights(length);
  heights[0] = 1;
  for (int i = 2; i <= length; ++i)
    heights[i - 1] = heights[i - 2] + (set_contains(lazy, i) ? 0 : 1);
  return PartitionShape(std::move(heights));
}

Filling::Filling(PartitionShape shape, std::vector<IndexSet> dots_by_column)
    : shape_(std::move(shape)), dots_(std::move(dots_by_column)) {
  if (static_cast<int>(dots_.size()) != shape_.length())
    throw std::invalid_argument("one dot list per column required");
  for (int i = 1; i <= shape_.length(); ++i) {
    IndexSet& col = dots_[i - 1];
    const std::size_t given = col.size();
    col = make_set(std::move(col));
    if (col.size() != given)
      throw std::invalid_argument("duplicate dot in a column");
    for (int r : col)
      if (r < 1 || r > shape_.column_height(i))
        throw std::invalid_argument("dot outside its column");
  }
}

Filling Filling::from_cells(PartitionShape shape,
                            std::vector<std::pair<int, int>> cells) {
  std::vector<IndexSet> dots(shape.length());
  for (const auto& [col, row] : cells) {
    if (col < 1 || col > shape.length())
      throw std::invalid_argument("dot outside the shape");
    dots[col - 1].push_back(row);
  }
  return Filling(std::move(shape), std::move(dots));
}

int Filling::dot_count() const {
  int total = 0;
  for (const IndexSet& col : dots_) total += static_cast<int>(col.size());
  return total;
}

const IndexSet& Filling::column_dots(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("column index");
  return dots_[i - 1];
}

int Filling::single_dot_row(int i) const {
  const IndexSet& col = column_dots(i);
  if (col.size() != 1)
    throw std::domain_error("column does not hold exactly one dot");
  return col.front();
}

bool Filling::has_dot(int col, int row) const {
  return set_contains(column_dots(col), row);
}

std::vector<std::pair<int, int>> Filling::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= length(); ++i)
    for (int r : dots_[i - 1]) out.emplace_back(i, r);
  return out;
}

IndexSet Filling::row_dot_columns(int j) const {
  IndexSet out;
  for (int i = 1; i <= length(); ++i)
    if (set_contains(dots_[i - 1], j)) out.push_back(i);
  return out;
}

std::vector<int> Filling::defining_sequence() const {
  std::vector<int> out = shape_.column_heights();
  for (const auto& [c, r] : cells()) {
    out.push_back(c);
    out.push_back(r);
  }
  return out;
}

FillingFlags filling_predicates(const Filling& f) {
  FillingFlags flags;
  const PartitionShape& shape = f.shape();
  const int len = f.length();

  flags.column_positive = true;
  flags.column_strict = true;
  for (int i = 1; i <= len; ++i) {
    const std::size_t d = f.column_dots(i).size();
    if (d == 0) flags.column_positive = false;
    if (d != 1) flags.column_strict = false;
  }

  flags.row_positive = true;
  flags.row_strict = true;
  for (int j = 1; j <= shape.row_count(); ++j) {
    const std::size_t d = f.row_dot_columns(j).size();
    if (d == 0) flags.row_positive = false;
    if (d != 1) flags.row_strict = false;
  }

  flags.strict_filling = flags.column_strict && flags.row_strict;

  std::vector<int> row_lengths;
  for (int j = 1; j <= shape.row_count(); ++j)
    row_lengths.push_back(shape.row_length(j));
  flags.flat = make_set(row_lengths).size() == row_lengths.size();

  flags.steep =
      make_set(shape.column_heights()).size() == shape.column_heights().size();

  flags.staircase = true;
  for (int i = 1; i <= len; ++i)
    if (shape.column_height(i) != i) flags.staircase = false;

  bool square = true;
  for (int i = 1; i <= len; ++i)
    if (shape.column_height(i) != len) square = false;
  flags.enriched_permutation =
      square && flags.column_positive && flags.row_positive;
  if (flags.enriched_permutation) {
    for (const auto& [c, r] : f.cells()) {
      const bool leftmost = f.row_dot_columns(r).front() == c;
      const bool topmost = f.column_dots(c).back() == r;
      if (leftmost != topmost) {
        flags.enriched_permutation = false;
        break;
      }
    }
  }
  return flags;
}

// ---------------------------------------------------------------------------
// Direct sums
// ---------------------------------------------------------------------------

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> word = a.word();
  for (int v : b.word()) word.push_back(v + a.size());
  return Permutation(std::move(word));
}

BarredPermutation direct_sum(const BarredPermutation& a,
                             const BarredPermutation& b) {
  return BarredPermutation(direct_sum(a.base(), b.base()),
                           set_union(a.bars(), set_shifted(b.bars(), a.size())));
}

HattedPermutation direct_sum(const HattedPermutation& a,
                             const HattedPermutation& b) {
  return HattedPermutation(direct_sum(a.base(), b.base()),
                           set_union(a.hats(), set_shifted(b.hats(), a.size())));
}

Matching direct_sum(const Matching& a, const Matching& b) {
  std::vector<Arc> arcs = a.arcs();
  for (const Arc& arc : b.arcs())
    arcs.push_back(Arc{arc.opener + 2 * a.size(), arc.closer + 2 * a.size()});
  return Matching(std::move(arcs));
}

MarkedMatching direct_sum(const MarkedMatching& a, const MarkedMatching& b) {
  return MarkedMatching(
      direct_sum(a.base(), b.base()),
      set_union(a.marks(), set_shifted(b.marks(), a.size())));
}

Filling direct_sum(const Filling& a, const Filling& b) {
  const int row_shift = a.shape().row_count();
  std::vector<int> heights = a.shape().column_heights();
  for (int h : b.shape().column_heights()) heights.push_back(h + row_shift);
  std::vector<IndexSet> dots;
  for (int i = 1; i <= a.length(); ++i) dots.push_back(a.column_dots(i));
  for (int i = 1; i <= b.length(); ++i)
    dots.push_back(set_shifted(b.column_dots(i), row_shift));
  return Filling(PartitionShape(std::move(heights)), std::move(dots));
}

// ---------------------------------------------------------------------------
// Irreducible components
// ---------------------------------------------------------------------------

namespace {

// Positions j with max(word[1..j]) == j; each ends a plain component.
std::vector<int> permutation_cut_positions(const Permutation& p) {
  std::vector<int> cuts;
  int running_max = 0;
  for (int j = 1; j <= p.size(); ++j) {
    running_max = std::max(running_max, p.value_at(j));
    if (running_max == j) cuts.push_back(j);
  }
  return cuts;
}

Permutation extract_permutation_block(const Permutation& p, int lo, int hi) {
  std::vector<int> word;
  for (int j = lo; j <= hi; ++j) word.push_back(p.value_at(j) - (lo - 1));
  return Permutation(std::move(word));
}

IndexSet values_in_range_shifted(const IndexSet& s, int lo, int hi) {
  IndexSet out;
  for (int v : s)
    if (v >= lo && v <= hi) out.push_back(v - (lo - 1));
  return out;
}

}  // namespace

std::vector<Permutation> irreducible_components(const Permutation& p) {
  std::vector<Permutation> out;
  int lo = 1;
  for (int cut : permutation_cut_positions(p)) {
    out.push_back(extract_permutation_block(p, lo, cut));
    lo = cut + 1;
  }
  return out;
}

std::vector<BarredPermutation> irreducible_components(
    const BarredPermutation& p) {
  const std::vector<int> cuts = permutation_cut_positions(p.base());
  // A bar on the first entry of a plain component welds it to the previous one.
  std::vector<std::pair<int, int>> blocks;  // position ranges
  int lo = 1;
  for (int cut : cuts) {
    const bool starts_barred =
        !blocks.empty() && set_contains(p.bars(), p.base().value_at(lo));
    if (starts_barred)
      blocks.back().second = cut;
    else
      blocks.emplace_back(lo, cut);
    lo = cut + 1;
  }
  std::vector<BarredPermutation> out;
  for (const auto& [a, b] : blocks)
    out.emplace_back(extract_permutation_block(p.base(), a, b),
                     values_in_range_shifted(p.bars(), a, b));
  return out;
}

std::vector<HattedPermutation> irreducible_components(
    const HattedPermutation& p) {
  const std::vector<int> cuts = permutation_cut_positions(p.base());
  // A hat on the maximum of a plain component welds it to the next one.
  // Component k covers positions (and values) cuts[k-1]+1 .. cuts[k].
  std::vector<std::pair<int, int>> blocks;
  int lo = 1;
  for (int cut : cuts) {
    // The block max equals the right end of its position range.
    if (!blocks.empty() && set_contains(p.hats(), lo - 1))
      blocks.back().second = cut;
    else
      blocks.emplace_back(lo, cut);
    lo = cut + 1;
  }
  std::vector<HattedPermutation> out;
  for (const auto& [a, b] : blocks)
    out.emplace_back(extract_permutation_block(p.base(), a, b),
                     values_in_range_shifted(p.hats(), a, b));
  return out;
}

namespace {

// Points 2k after which no arc is open; each ends a component.
std::vector<int> matching_cut_points(const Matching& m) {
  std::vector<int> cuts;
  int open = 0;
  for (int point = 1; point <= 2 * m.size(); ++point) {
    if (m.is_opener(point))
      ++open;
    else
      --open;
    if (open == 0) cuts.push_back(point);
  }
  return cuts;
}

}  // namespace

std::vector<Matching> irreducible_components(const Matching& m) {
  std::vector<Matching> out;
  int point_lo = 1;
  for (int cut : matching_cut_points(m)) {
    std::vector<Arc> arcs;
    for (const Arc& a : m.arcs())
      if (a.opener >= point_lo && a.closer <= cut)
        arcs.push_back(Arc{a.opener - (point_lo - 1), a.closer - (point_lo - 1)});
    out.emplace_back(std::move(arcs));
    point_lo = cut + 1;
  }
  return out;
}

std::vector<MarkedMatching> irreducible_components(const MarkedMatching& m) {
  // Closers inside a component are consecutive, so arc indices split into
  // contiguous ranges and a right adjacency never straddles a component cut.
  std::vector<MarkedMatching> out;
  int arc_lo = 1;
  for (const Matching& part : irreducible_components(m.base())) {
    const int arc_hi = arc_lo + part.size() - 1;
    out.emplace_back(part, values_in_range_shifted(m.marks(), arc_lo, arc_hi));
    arc_lo = arc_hi + 1;
  }
  return out;
}

namespace {

// Columns i after which the filling splits as a direct sum.
std::vector<int> filling_cut_columns(const Filling& f) {
  std::vector<int> cuts;
  const PartitionShape& shape = f.shape();
  for (int i = 1; i < f.length(); ++i) {
    if (shape.column_height(i + 1) <= shape.column_height(i)) continue;
    bool clean = true;
    for (int c = i + 1; c <= f.length() && clean; ++c)
      for (int r : f.column_dots(c))
        if (r <= shape.column_height(i)) {
          clean = false;
          break;
        }
    if (clean) cuts.push_back(i);
  }
  cuts.push_back(f.length());
  return cuts;
}

Filling extract_filling_block(const Filling& f, int col_lo, int col_hi,
                              int row_shift) {
  std::vector<int> heights;
  std::vector<IndexSet> dots;
  for (int i = col_lo; i <= col_hi; ++i) {
    heights.push_back(f.shape().column_height(i) - row_shift);
    dots.push_back(set_shifted(f.column_dots(i), -row_shift));
  }
  return Filling(PartitionShape(std::move(heights)), std::move(dots));
}

}  // namespace

std::vector<Filling> irreducible_components(const Filling& f) {
  std::vector<Filling> out;
  int col_lo = 1;
  int row_shift = 0;
  for (int cut : filling_cut_columns(f)) {
    out.push_back(extract_filling_block(f, col_lo, cut, row_shift));
    row_shift = f.shape().column_height(cut);
    col_lo = cut + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boxed sums
// ---------------------------------------------------------------------------

namespace {

void require_enriched(const Filling& f, const char* what) {
  if (!filling_predicates(f).enriched_permutation)
    throw std::domain_error(std::string(what) +
                            " requires an enriched permutation filling");
}

}  // namespace

Filling boxed_sum(const Filling& a, const Filling& b) {
  require_enriched(a, "boxed_sum");
  require_enriched(b, "boxed_sum");
  const int la = a.length();
  const int len = la + b.length();
  std::vector<IndexSet> dots(len);
  for (int i = 1; i <= la; ++i) dots[i - 1] = a.column_dots(i);
  for (int i = 1; i <= b.length(); ++i)
    dots[la + i - 1] = set_shifted(b.column_dots(i), la);
  return Filling(PartitionShape(std::vector<int>(len, len)), std::move(dots));
}

std::vector<Filling> box_components(const Filling& f) {
  require_enriched(f, "box_components");
  std::vector<Filling> out;
  const int len = f.length();
  int lo = 1;
  for (int i = 1; i <= len; ++i) {
    if (i < len) {
      bool clean = true;
      for (const auto& [c, r] : f.cells())
        if ((c <= i) != (r <= i)) {
          clean = false;
          break;
        }
      if (!clean) continue;
    }
    const int size = i - lo + 1;
    std::vector<IndexSet> dots;
    for (int c = lo; c <= i; ++c)
      dots.push_back(set_shifted(f.column_dots(c), -(lo - 1)));
    out.emplace_back(PartitionShape(std::vector<int>(size, size)),
                     std::move(dots));
    lo = i + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

void require_positive_size(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
}

// All tables with table[j-1] in 1..j, visited in lexicographic order.
template <typename Fn>
void for_each_insertion_table(int n, Fn&& fn) {
  std::vector<int> table(n, 1);
  while (true) {
    fn(table);
    int j = n - 1;
    while (j >= 0 && table[j] == j + 1) table[j--] = 1;
    if (j < 0) break;
    ++table[j];
  }
}

}  // namespace

std::vector<Permutation> all_permutations(int n) {
  require_positive_size(n);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation permutation_from_insertion_table(const std::vector<int>& table) {
  const int n = static_cast<int>(table.size());
  require_positive_size(n);
  std::vector<int> word;
  word.reserve(n);
  for (int j = 1; j <= n; ++j) {
    if (table[j - 1] < 1 || table[j - 1] > j)
      throw std::invalid_argument("insertion table entry outside 1..j");
    word.insert(word.begin() + (table[j - 1] - 1), j);
  }
  return Permutation(std::move(word));
}

Matching matching_from_insertion_table(const std::vector<int>& table) {
  const int n = static_cast<int>(table.size());
  require_positive_size(n);
  // Token stream of arc ends; true marks a closer.
  std::vector<std::pair<int, bool>> tokens;
  for (int j = 1; j <= n; ++j) {
    if (table[j - 1] < 1 || table[j - 1] > j)
      throw std::invalid_argument("insertion table entry outside 1..j");
    tokens.emplace_back(j, true);
    int seen = 0;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (!tokens[k].second) continue;
      if (++seen == table[j - 1]) {
        tokens.insert(tokens.begin() + k, {j, false});
        break;
      }
    }
  }
  std::vector<Arc> arcs(n);
  for (int point = 1; point <= 2 * n; ++point) {
    const auto& [id, is_closer] = tokens[point - 1];
    (is_closer ? arcs[id - 1].closer : arcs[id - 1].opener) = point;
  }
  return Matching(std::move(arcs));
}

std::vector<Matching> all_left_nesting_free_matchings(int n) {
  require_positive_size(n);
  std::vector<Matching> out;
  for_each_insertion_table(n, [&](const std::vector<int>& table) {
    out.push_back(matching_from_insertion_table(table));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> all_matchings(int n) {
  require_positive_size(n);
  std::vector<Matching> out;
  std::vector<Arc> arcs;
  std::vector<bool> used(2 * n + 1, false);
  auto recurse = [&](auto&& self, int placed) -> void {
    if (placed == n) {
      out.emplace_back(arcs);
      return;
    }
    int opener = 1;
    while (used[opener]) ++opener;
    used[opener] = true;
    for (int closer = opener + 1; closer <= 2 * n; ++closer) {
      if (used[closer]) continue;
      used[closer] = true;
      arcs.push_back(Arc{opener, closer});
      self(self, placed + 1);
      arcs.pop_back();
      used[closer] = false;
    }
    used[opener] = false;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> all_left_nesting_free_matchings_by_filtering(int n) {
  std::vector<Matching> out;
  for (const Matching& m : all_matchings(n))
    if (!matching_has_left_nesting(m)) out.push_back(m);
  return out;
}

std::vector<Filling> fillings_of_shape(const PartitionShape& shape) {
  const int cells = shape.cell_count();
  if (cells > 22)
    throw std::invalid_argument("shape has too many cells to enumerate");
  std::vector<std::pair<int, int>> all_cells;
  for (int i = 1; i <= shape.length(); ++i)
    for (int r = 1; r <= shape.column_height(i); ++r) all_cells.emplace_back(i, r);
  std::vector<Filling> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (int k = 0; k < cells; ++k)
      if (mask >> k & 1) chosen.push_back(all_cells[k]);
    out.push_back(Filling::from_cells(shape, std::move(chosen)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionShape> flat_shapes(int length) {
  require_positive_size(length);
  std::vector<PartitionShape> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (length - 1));
       ++mask) {
    IndexSet lazy;
    for (int i = 2; i <= length; ++i)
      if (mask >> (i - 2) & 1) lazy.push_back(i);
    out.push_back(PartitionShape::flat_from_lazy(length, lazy));
  }
  std::sort(out.begin(), out.end(),
            [](const PartitionShape& a, const PartitionShape& b) {
              return a.column_heights() < b.column_heights();
            });
  return out;
}

std::vector<Filling> flat_column_strict_fillings(int length) {
  std::vector<Filling> out;
  for (const PartitionShape& shape : flat_shapes(length)) {
    std::vector<int> alpha(length, 1);
    while (true) {
      std::vector<IndexSet> dots;
      for (int v : alpha) dots.push_back({v});
      out.emplace_back(shape, std::move(dots));
      int i = length - 1;
      while (i >= 0 && alpha[i] == shape.column_height(i + 1)) alpha[i--] = 1;
      if (i < 0) break;
      ++alpha[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Filling> staircase_column_positive_fillings(int length) {
  require_positive_size(length);
  std::vector<int> heights(length);
  std::iota(heights.begin(), heights.end(), 1);
  const PartitionShape shape(heights);
  std::vector<Filling> out;
  std::vector<IndexSet> dots(length);
  auto recurse = [&](auto&& self, int col) -> void {
    if (col > length) {
      out.emplace_back(shape, dots);
      return;
    }
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << col); ++mask) {
      IndexSet rows;
      for (int r = 1; r <= col; ++r)
        if (mask >> (r - 1) & 1) rows.push_back(r);
      dots[col - 1] = std::move(rows);
      self(self, col + 1);
    }
    dots[col - 1].clear();
  };
  recurse(recurse, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace combistat
