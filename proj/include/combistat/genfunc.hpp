#pragma once

#include <map>
#include <utility>
#include <vector>

#include "combistat/ncseries.hpp"
#include "combistat/poly.hpp"

namespace combistat {

// Power series in t truncated at t^max_n, coefficients multivariate
// polynomials. Index 0 is the constant term.
class CommSeries {
 public:
  explicit CommSeries(int max_n);
  static CommSeries constant(int max_n, const Poly& value);
  // coeff * t^power
  static CommSeries t_power(int max_n, int power, const Poly& coeff);

  int max_n() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& at(int n) const;
  void add_at(int n, const Poly& value);

  CommSeries operator+(const CommSeries& o) const;
  CommSeries operator-(const CommSeries& o) const;
  CommSeries operator*(const CommSeries& o) const;
  CommSeries pow(int e) const;
  CommSeries scaled(const Poly& c) const;
  // Multiplicative inverse; requires constant coefficient +1 or -1.
  CommSeries inverse() const;
  // Exact per-coefficient polynomial division; throws on any remainder.
  CommSeries divided_by(const Poly& divisor) const;
  CommSeries substituted(Var v, const Poly& value) const;
  bool operator==(const CommSeries& o) const { return coeffs_ == o.coeffs_; }

  // Header "n,monomial,coefficient"; one row per monomial, n from 1 up,
  // LF endings.
  std::string to_csv() const;

 private:
  std::vector<Poly> coeffs_;
};

// Collapses words to commutative monomials: each letter contributes its
// image polynomial and the word length sets the power of t. Every letter
// that occurs must be mapped.
CommSeries abelianize(const NCSeries& series,
                      const std::map<Letter, Poly>& image);

// Closed forms, expanded in t.
CommSeries eval_theorem_main_xyz(int max_n);
CommSeries eval_theorem_main_sxy(int max_n);
CommSeries eval_conj20_formula(int max_n);
std::vector<Int> eval_fishburn(int max_n);

enum class LeftCrossVariant { xyz_upsilon, sxy_upsilon };
CommSeries eval_leftcrossing(int max_n, LeftCrossVariant variant);

// Both sides of the (s, x, w) identity at one size: permutations with
// (rmin, p_silly, des) against matchings with (min, rne, inter-1).
std::pair<Poly, Poly> eval_conj21_identity(int n);

// Closed form of the ascent-bottom identity over letters {ups, z, t}.
NCSeries eval_ascentbottom_nc(int max_deg);

// Enumeration sides, as series in t with one monomial per object.
CommSeries perm_sum_xyz(int max_n);            // x^p y^q z^adjasc
CommSeries match_sum_xyz(int max_n);           // x^rne y^rcr' z^lrcr
CommSeries perm_sum_sxy(int max_n);            // s^rmin x^p y^(q+adjasc)
CommSeries perm_sum_sxy_silly(int max_n);      // s^rmin x^p_silly y^q_silly
CommSeries match_sum_sxy(int max_n);           // s^min x^rne y^rcr
CommSeries perm_sum_conj20(int max_n);         // r^comp s^rmax x^p_silly
CommSeries match_sum_conj20(int max_n);        // r^comp s^min x^rne
// Upsilon-refined sums; constant term 1 to align with the closed forms.
CommSeries perm_sum_leftcross_xyz(int max_n);  // ... ups^(p+q)
CommSeries match_sum_leftcross_xyz(int max_n);  // ... ups^lcr'
CommSeries perm_sum_leftcross_sxy(int max_n);   // ... ups^asc
CommSeries perm_sum_leftcross_sxy_silly(int max_n);
CommSeries match_sum_leftcross_sxy(int max_n);  // ... ups^lcr

}  // namespace combistat
