#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace combistat {

using Int = boost::multiprecision::cpp_int;

// Commutative coefficient variables.
enum class Var : std::uint8_t { x = 0, y, z, s, r, w, ups };
inline constexpr std::size_t kVarCount = 7;
std::string_view var_name(Var v);

// Exponent vector; compared in graded lexicographic order.
struct Monomial {
  std::array<std::uint8_t, kVarCount> exp{};
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  int degree() const;
  std::string to_string() const;  // alphabetical by variable name; "1" if empty
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over arbitrary-precision integers. Zero
// coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  Poly(long long constant);  // implicit by design: enables `coeff * 3`
  explicit Poly(const Int& constant);
  static Poly variable(Var v, int power = 1);
  static Poly monomial(const Monomial& m, const Int& coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Int* constant_value() const;  // nullptr unless constant (or zero)

  const std::map<Monomial, Int, MonomialLess>& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly pow(int e) const;
  Poly substituted(Var v, const Poly& value) const;

  // Quotient of an exact division; throws std::domain_error on any remainder.
  static Poly exact_div(const Poly& numerator, const Poly& denominator);

  std::string to_string() const;  // descending graded-lex term order

 private:
  void add_term(const Monomial& m, const Int& c);
  std::map<Monomial, Int, MonomialLess> terms_;
};

}  // namespace combistat
