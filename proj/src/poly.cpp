#include "combistat/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace combistat {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::s: return "s";
    case Var::r: return "r";
    case Var::w: return "w";
    case Var::ups: return "υ";
  }
  throw std::logic_error("unknown variable");
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

std::string Monomial::to_string() const {
  // Print order: alphabetical by variable name, non-ASCII last.
  static constexpr Var kPrintOrder[] = {Var::r, Var::s, Var::w, Var::x,
                                        Var::y, Var::z, Var::ups};
  std::string out;
  for (Var v : kPrintOrder) {
    auto e = exp[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += var_name(v);
    out += '^';
    out += std::to_string(static_cast<int>(e));
  }
  return out.empty() ? "1" : out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

Poly::Poly(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Int(constant));
}

Poly::Poly(const Int& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(Var v, int power) {
  if (power < 0) throw std::domain_error("negative power");
  Poly p;
  if (power > 255) throw std::domain_error("exponent overflow");
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  p.terms_.emplace(m, Int(1));
  return p;
}

Poly Poly::monomial(const Monomial& m, const Int& coefficient) {
  Poly p;
  if (coefficient != 0) p.terms_.emplace(m, coefficient);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

const Int* Poly::constant_value() const {
  static const Int kZero = 0;
  if (terms_.empty()) return &kZero;
  if (terms_.size() == 1 && terms_.begin()->first == Monomial{})
    return &terms_.begin()->second;
  return nullptr;
}

Int Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        int e = ma.exp[i] + mb.exp[i];
        if (e > 255) throw std::domain_error("exponent overflow");
        m.exp[i] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  Poly out(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Poly Poly::substituted(Var v, const Poly& value) const {
  auto idx = static_cast<std::size_t>(v);
  std::vector<Poly> powers{Poly(1)};
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exp[idx];
    while (static_cast<int>(powers.size()) <= e)
      powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.exp[idx] = 0;
    out += Poly::monomial(rest, c) * powers[static_cast<std::size_t>(e)];
  }
  return out;
}

Poly Poly::exact_div(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by zero");
  Poly rem = numerator;
  Poly quot;
  const auto& [dm, dc] = *denominator.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    Monomial q;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (rm.exp[i] < dm.exp[i]) throw std::domain_error("not divisible");
      q.exp[i] = static_cast<std::uint8_t>(rm.exp[i] - dm.exp[i]);
    }
    if (rc % dc != 0) throw std::domain_error("not divisible");
    Poly t = Poly::monomial(q, rc / dc);
    quot += t;
    rem -= t * denominator;
  }
  return quot;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Int a = c;
    if (out.empty()) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    bool unit_coeff = (a == 1) && !(m == Monomial{});
    if (!unit_coeff) out += a.str();
    if (!(m == Monomial{})) {
      if (!unit_coeff) out += ' ';
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace combistat
