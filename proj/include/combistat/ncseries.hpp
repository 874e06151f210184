#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combistat/core.hpp"
#include "combistat/poly.hpp"
#include "combistat/sets.hpp"

namespace combistat {

// Noncommuting letters. Coefficients stay commutative (Poly).
enum class Letter : std::uint8_t { u = 0, v, w, t, x, y, z, ups };
std::string_view letter_name(Letter l);

// A word is a sequence of letters; series are truncated by word length.
using Word = std::vector<std::uint8_t>;
Word word_of(std::initializer_list<Letter> letters);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Power series in noncommuting letters, truncated beyond max_degree.
class NCSeries {
 public:
  NCSeries(std::vector<Letter> alphabet, int max_degree);
  static NCSeries constant(const std::vector<Letter>& alphabet,
                           int max_degree, const Poly& value);
  static NCSeries letter_term(const std::vector<Letter>& alphabet,
                              int max_degree, Letter l);

  const std::vector<Letter>& alphabet() const { return alphabet_; }
  int max_degree() const { return max_degree_; }
  const std::map<Word, Poly, WordLess>& terms() const { return terms_; }

  void add_term(const Word& w, const Poly& c);  // silently drops beyond cap
  Poly coefficient(const Word& w) const;

  NCSeries operator+(const NCSeries& o) const;
  NCSeries operator-(const NCSeries& o) const;
  NCSeries operator*(const NCSeries& o) const;
  NCSeries scaled(const Poly& c) const;
  // Multiplicative inverse; requires constant term +1 or -1.
  NCSeries inverse() const;
  bool operator==(const NCSeries& o) const;

  // One term per line, ascending by length then letter code:
  // "t·v\t<coeff>"; the empty word prints as "1".
  std::string to_text() const;

 private:
  std::vector<Letter> alphabet_;
  int max_degree_;
  std::map<Word, Poly, WordLess> terms_;
};

// Removes one leading `l` from every word. Requires zero constant term and
// every word to start with `l`; the degree cap is kept unchanged.
NCSeries left_strip(const NCSeries& series, Letter l);

// Word of length n with position i (1-based) carrying its marked letter, or
// `filler` when unmarked. Marked sets must be disjoint subsets of 1..n.
Word word_from_position_sets(
    int n, const std::vector<std::pair<IndexSet, Letter>>& marked,
    Letter filler);

// Replaces each mapped letter by a formal sum of letters; unmapped letters
// pass through.
NCSeries substitute_letters(const NCSeries& series,
                            const std::map<Letter, std::vector<Letter>>& image,
                            std::vector<Letter> new_alphabet);

enum class MainVariant { general_w, silly_s, full };
enum class ExtremeSide { min_side, max_side };

// Alphabet {u, v, w, t} of the main identity.
const std::vector<Letter>& main_alphabet();

// Single column factor of the main noncommutative identity, over alphabet
// {u, v, w, t}. Every word of the result starts with v.
NCSeries eval_extreme_factor(int k, int max_degree, MainVariant variant,
                             ExtremeSide side);

// Sum over m of the product of the column factors, each stripped of its
// leading v and re-prefixed by t.
NCSeries eval_main(int max_degree, MainVariant variant, ExtremeSide side);

struct WordAssignment {
  std::vector<std::pair<IndexSet, Letter>> marked;
  Poly coeff = Poly(1);
};

// Exhaustive sums of position-marked words, one word per object, for sizes
// 1..max_n.
NCSeries brute_series_perms(
    int max_n, const std::vector<Letter>& alphabet,
    const std::function<WordAssignment(const Permutation&)>& spec);
NCSeries brute_series_matchings(
    int max_n, const std::vector<Letter>& alphabet,
    const std::function<WordAssignment(const Matching&)>& spec);

// x -> u+v+t, y -> v+t, z -> v+w+t; result lives over {u, v, w, t}.
NCSeries apply_pattern_substitution(const NCSeries& series);

}  // namespace combistat
