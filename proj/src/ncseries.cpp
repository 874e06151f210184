#include "combistat/ncseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace combistat {

std::string_view letter_name(Letter l) {
  switch (l) {
    case Letter::u: return "u";
    case Letter::v: return "v";
    case Letter::w: return "w";
    case Letter::t: return "t";
    case Letter::x: return "x";
    case Letter::y: return "y";
    case Letter::z: return "z";
    case Letter::ups: return "υ";
  }
  throw std::logic_error("unknown letter");
}

Word word_of(std::initializer_list<Letter> letters) {
  Word w;
  w.reserve(letters.size());
  for (Letter l : letters) w.push_back(static_cast<std::uint8_t>(l));
  return w;
}

NCSeries::NCSeries(std::vector<Letter> alphabet, int max_degree)
    : alphabet_(std::move(alphabet)), max_degree_(max_degree) {
  if (max_degree_ < 0) throw std::domain_error("negative degree cap");
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                  alphabet_.end());
}

NCSeries NCSeries::constant(const std::vector<Letter>& alphabet,
                            int max_degree, const Poly& value) {
  NCSeries s(alphabet, max_degree);
  s.add_term({}, value);
  return s;
}

NCSeries NCSeries::letter_term(const std::vector<Letter>& alphabet,
                               int max_degree, Letter l) {
  NCSeries s(alphabet, max_degree);
  s.add_term({static_cast<std::uint8_t>(l)}, Poly(1));
  return s;
}

void NCSeries::add_term(const Word& w, const Poly& c) {
  if (static_cast<int>(w.size()) > max_degree_) return;
  if (c.is_zero()) return;
  for (auto code : w) {
    Letter l = static_cast<Letter>(code);
    if (!std::binary_search(alphabet_.begin(), alphabet_.end(), l))
      throw std::domain_error("letter outside alphabet");
  }
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly NCSeries::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Poly() : it->second;
}

namespace {

void require_same_alphabet(const NCSeries& a, const NCSeries& b) {
  if (a.alphabet() != b.alphabet())
    throw std::domain_error("alphabet mismatch");
}

}  // namespace

NCSeries NCSeries::operator+(const NCSeries& o) const {
  require_same_alphabet(*this, o);
  NCSeries out(alphabet_, std::min(max_degree_, o.max_degree_));
  for (const auto& [w, c] : terms_) out.add_term(w, c);
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

NCSeries NCSeries::operator-(const NCSeries& o) const {
  require_same_alphabet(*this, o);
  NCSeries out(alphabet_, std::min(max_degree_, o.max_degree_));
  for (const auto& [w, c] : terms_) out.add_term(w, c);
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

NCSeries NCSeries::operator*(const NCSeries& o) const {
  require_same_alphabet(*this, o);
  NCSeries out(alphabet_, std::min(max_degree_, o.max_degree_));
  for (const auto& [wa, ca] : terms_) {
    if (static_cast<int>(wa.size()) > out.max_degree_) continue;
    for (const auto& [wb, cb] : o.terms_) {
      if (static_cast<int>(wa.size() + wb.size()) > out.max_degree_) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCSeries NCSeries::scaled(const Poly& c) const {
  NCSeries out(alphabet_, max_degree_);
  for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
  return out;
}

NCSeries NCSeries::inverse() const {
  const Poly unit = coefficient({});
  const Int* cv = unit.constant_value();
  if (cv == nullptr || (*cv != 1 && *cv != -1))
    throw std::domain_error("inverse requires constant term +1 or -1");
  // S = c(1 + N) with N free of constant term; S^-1 = c * sum (-N)^i.
  NCSeries neg_n(alphabet_, max_degree_);
  for (const auto& [w, c] : terms_) {
    if (w.empty()) continue;
    neg_n.add_term(w, -(c * Poly(*cv)));  // -c^-1 * c_w, and c^-1 == c
  }
  NCSeries power = NCSeries::constant(alphabet_, max_degree_, Poly(1));
  NCSeries sum = power;
  for (int i = 1; i <= max_degree_; ++i) {
    power = power * neg_n;
    if (power.terms_.empty()) break;
    sum = sum + power;
  }
  return sum.scaled(Poly(Int(*cv)));
}

bool NCSeries::operator==(const NCSeries& o) const {
  return alphabet_ == o.alphabet_ && max_degree_ == o.max_degree_ &&
         terms_ == o.terms_;
}

std::string NCSeries::to_text() const {
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string name;
    for (auto code : w) {
      if (!name.empty()) name += "·";
      name += letter_name(static_cast<Letter>(code));
    }
    if (name.empty()) name = "1";
    out += name;
    out += '\t';
    out += c.to_string();
    out += '\n';
  }
  return out;
}

NCSeries left_strip(const NCSeries& series, Letter l) {
  NCSeries out(series.alphabet(), series.max_degree());
  const auto code = static_cast<std::uint8_t>(l);
  for (const auto& [w, c] : series.terms()) {
    if (w.empty() || w.front() != code)
      throw std::domain_error("word does not start with the stripped letter");
    out.add_term(Word(w.begin() + 1, w.end()), c);
  }
  return out;
}

Word word_from_position_sets(
    int n, const std::vector<std::pair<IndexSet, Letter>>& marked,
    Letter filler) {
  if (n < 0) throw std::domain_error("negative length");
  Word w(static_cast<std::size_t>(n), static_cast<std::uint8_t>(filler));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [positions, letter] : marked) {
    for (int i : positions) {
      if (i < 1 || i > n) throw std::domain_error("position out of range");
      if (seen[static_cast<std::size_t>(i)])
        throw std::domain_error("marked position sets overlap");
      seen[static_cast<std::size_t>(i)] = true;
      w[static_cast<std::size_t>(i) - 1] = static_cast<std::uint8_t>(letter);
    }
  }
  return w;
}

NCSeries substitute_letters(const NCSeries& series,
                            const std::map<Letter, std::vector<Letter>>& image,
                            std::vector<Letter> new_alphabet) {
  NCSeries out(std::move(new_alphabet), series.max_degree());
  for (const auto& [w, c] : series.terms()) {
    // Expand position by position; each mapped letter fans out.
    std::vector<Word> expansions{Word{}};
    for (auto code : w) {
      auto it = image.find(static_cast<Letter>(code));
      std::vector<Word> next;
      for (const Word& prefix : expansions) {
        if (it == image.end()) {
          Word e = prefix;
          e.push_back(code);
          next.push_back(std::move(e));
        } else {
          for (Letter target : it->second) {
            Word e = prefix;
            e.push_back(static_cast<std::uint8_t>(target));
            next.push_back(std::move(e));
          }
        }
      }
      expansions = std::move(next);
    }
    for (const Word& e : expansions) out.add_term(e, c);
  }
  return out;
}

namespace {

const std::vector<Letter> kMainAlphabet = {Letter::u, Letter::v, Letter::w,
                                           Letter::t};

NCSeries nc_pow(const NCSeries& base, int e) {
  NCSeries out =
      NCSeries::constant(base.alphabet(), base.max_degree(), Poly(1));
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

}  // namespace

const std::vector<Letter>& main_alphabet() { return kMainAlphabet; }

NCSeries eval_extreme_factor(int k, int max_degree, MainVariant variant,
                             ExtremeSide side) {
  if (k < 1) throw std::domain_error("factor index must be positive");
  const auto one = NCSeries::constant(kMainAlphabet, max_degree, Poly(1));
  const auto lu = NCSeries::letter_term(kMainAlphabet, max_degree, Letter::u);
  const auto lv = NCSeries::letter_term(kMainAlphabet, max_degree, Letter::v);
  const auto lw = NCSeries::letter_term(kMainAlphabet, max_degree, Letter::w);
  const Poly s_mark = variant == MainVariant::general_w
                          ? Poly(1)
                          : Poly::variable(Var::s);
  const bool with_w = variant != MainVariant::silly_s;

  NCSeries head = with_w
                      ? one + lu.scaled(s_mark) *
                                  (one - lw.scaled(s_mark)).inverse()
                      : one + lu.scaled(s_mark);
  NCSeries tail_base = with_w ? one + lu * (one - lw).inverse() : one + lu;
  NCSeries tail = nc_pow(tail_base, k - 1);

  NCSeries product =
      side == ExtremeSide::max_side ? head * tail : tail * head;
  NCSeries inner = lv * left_strip(product - one, Letter::u);
  return (one - inner).inverse() - one;
}

NCSeries eval_main(int max_degree, MainVariant variant, ExtremeSide side) {
  const auto lt = NCSeries::letter_term(kMainAlphabet, max_degree, Letter::t);
  NCSeries total(kMainAlphabet, max_degree);
  for (int m = 1; m <= max_degree; ++m) {
    NCSeries prod =
        NCSeries::constant(kMainAlphabet, max_degree, Poly(1));
    for (int k = 1; k <= m; ++k) {
      NCSeries factor = eval_extreme_factor(k, max_degree, variant, side);
      prod = prod * (lt * left_strip(factor, Letter::v));
    }
    total = total + prod;
  }
  return total;
}

NCSeries brute_series_perms(
    int max_n, const std::vector<Letter>& alphabet,
    const std::function<WordAssignment(const Permutation&)>& spec) {
  NCSeries total(alphabet, max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      WordAssignment a = spec(p);
      total.add_term(word_from_position_sets(n, a.marked, Letter::t), a.coeff);
    }
  }
  return total;
}

NCSeries brute_series_matchings(
    int max_n, const std::vector<Letter>& alphabet,
    const std::function<WordAssignment(const Matching&)>& spec) {
  NCSeries total(alphabet, max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (const Matching& m : all_left_nesting_free_matchings(n)) {
      WordAssignment a = spec(m);
      total.add_term(word_from_position_sets(n, a.marked, Letter::t), a.coeff);
    }
  }
  return total;
}

NCSeries apply_pattern_substitution(const NCSeries& series) {
  static const std::map<Letter, std::vector<Letter>> kImage = {
      {Letter::x, {Letter::u, Letter::v, Letter::t}},
      {Letter::y, {Letter::v, Letter::t}},
      {Letter::z, {Letter::v, Letter::w, Letter::t}},
  };
  return substitute_letters(series, kImage, kMainAlphabet);
}

}  // namespace combistat
