#include "combistat/genfunc.hpp"

#include <stdexcept>

#include "combistat/statistics.hpp"

namespace combistat {

CommSeries::CommSeries(int max_n) {
  if (max_n < 0) throw std::domain_error("negative truncation");
  coeffs_.assign(static_cast<std::size_t>(max_n) + 1, Poly());
}

CommSeries CommSeries::constant(int max_n, const Poly& value) {
  CommSeries s(max_n);
  s.coeffs_[0] = value;
  return s;
}

CommSeries CommSeries::t_power(int max_n, int power, const Poly& coeff) {
  CommSeries s(max_n);
  if (power < 0) throw std::domain_error("negative power");
  if (power <= max_n) s.coeffs_[static_cast<std::size_t>(power)] = coeff;
  return s;
}

const Poly& CommSeries::at(int n) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("coefficient index");
  return coeffs_[static_cast<std::size_t>(n)];
}

void CommSeries::add_at(int n, const Poly& value) {
  if (n < 0 || n > max_n()) throw std::out_of_range("coefficient index");
  coeffs_[static_cast<std::size_t>(n)] += value;
}

CommSeries CommSeries::operator+(const CommSeries& o) const {
  CommSeries out(std::min(max_n(), o.max_n()));
  for (int n = 0; n <= out.max_n(); ++n)
    out.coeffs_[static_cast<std::size_t>(n)] = at(n) + o.at(n);
  return out;
}

CommSeries CommSeries::operator-(const CommSeries& o) const {
  CommSeries out(std::min(max_n(), o.max_n()));
  for (int n = 0; n <= out.max_n(); ++n)
    out.coeffs_[static_cast<std::size_t>(n)] = at(n) - o.at(n);
  return out;
}

CommSeries CommSeries::operator*(const CommSeries& o) const {
  CommSeries out(std::min(max_n(), o.max_n()));
  for (int a = 0; a <= out.max_n(); ++a) {
    if (at(a).is_zero()) continue;
    for (int b = 0; a + b <= out.max_n(); ++b)
      out.coeffs_[static_cast<std::size_t>(a + b)] += at(a) * o.at(b);
  }
  return out;
}

CommSeries CommSeries::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  CommSeries out = CommSeries::constant(max_n(), Poly(1));
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

CommSeries CommSeries::scaled(const Poly& c) const {
  CommSeries out(max_n());
  for (int n = 0; n <= max_n(); ++n)
    out.coeffs_[static_cast<std::size_t>(n)] = at(n) * c;
  return out;
}

CommSeries CommSeries::inverse() const {
  const Int* c0 = at(0).constant_value();
  if (c0 == nullptr || (*c0 != 1 && *c0 != -1))
    throw std::domain_error("inverse requires constant term +1 or -1");
  // S = c(1+N); S^-1 = c * sum (-N)^i, N without constant term.
  CommSeries neg_n(max_n());
  for (int n = 1; n <= max_n(); ++n)
    neg_n.coeffs_[static_cast<std::size_t>(n)] = at(n) * Poly(-*c0);
  CommSeries power = CommSeries::constant(max_n(), Poly(1));
  CommSeries sum = power;
  for (int i = 1; i <= max_n(); ++i) {
    power = power * neg_n;
    sum = sum + power;
  }
  return sum.scaled(Poly(Int(*c0)));
}

CommSeries CommSeries::divided_by(const Poly& divisor) const {
  CommSeries out(max_n());
  for (int n = 0; n <= max_n(); ++n)
    out.coeffs_[static_cast<std::size_t>(n)] =
        Poly::exact_div(at(n), divisor);
  return out;
}

CommSeries CommSeries::substituted(Var v, const Poly& value) const {
  CommSeries out(max_n());
  for (int n = 0; n <= max_n(); ++n)
    out.coeffs_[static_cast<std::size_t>(n)] = at(n).substituted(v, value);
  return out;
}

std::string CommSeries::to_csv() const {
  std::string out = "n,monomial,coefficient\n";
  for (int n = 1; n <= max_n(); ++n) {
    for (const auto& [m, c] : at(n).terms()) {
      out += std::to_string(n);
      out += ',';
      out += m.to_string();
      out += ',';
      out += c.str();
      out += '\n';
    }
  }
  return out;
}

CommSeries abelianize(const NCSeries& series,
                      const std::map<Letter, Poly>& image) {
  CommSeries out(series.max_degree());
  for (const auto& [word, coeff] : series.terms()) {
    Poly product = coeff;
    for (auto code : word) {
      auto it = image.find(static_cast<Letter>(code));
      if (it == image.end()) throw std::domain_error("unmapped letter");
      product *= it->second;
    }
    out.add_at(static_cast<int>(word.size()), product);
  }
  return out;
}

namespace {

const Poly kX = Poly::variable(Var::x);
const Poly kY = Poly::variable(Var::y);
const Poly kZ = Poly::variable(Var::z);
const Poly kS = Poly::variable(Var::s);
const Poly kR = Poly::variable(Var::r);
const Poly kW = Poly::variable(Var::w);
const Poly kUps = Poly::variable(Var::ups);

// (1 - E)^-1 - 1 divided exactly by `unit_factor`, where E carries one
// `unit_factor` per power; shared tail of every closed form here.
CommSeries fold_factor(const CommSeries& e, const Poly& unit_factor) {
  const CommSeries one = CommSeries::constant(e.max_n(), Poly(1));
  return ((one - e).inverse() - one).divided_by(unit_factor);
}

// Sum over m of prefix products of factor(k); factors carry t, so m stops
// at the truncation.
CommSeries sum_of_prefix_products(
    int max_n, const std::function<CommSeries(int)>& factor) {
  CommSeries prefix = CommSeries::constant(max_n, Poly(1));
  CommSeries total(max_n);
  for (int k = 1; k <= max_n; ++k) {
    prefix = prefix * factor(k);
    total = total + prefix;
  }
  return total;
}

}  // namespace

CommSeries eval_theorem_main_xyz(int max_n) {
  const Poly xmy = kX - kY, ym1 = kY - Poly(1), zmy = kZ - kY;
  const CommSeries one = CommSeries::constant(max_n, Poly(1));
  const CommSeries geo =
      (one - CommSeries::t_power(max_n, 1, zmy)).inverse();
  const CommSeries base =
      one + CommSeries::t_power(max_n, 1, xmy) * geo;
  return sum_of_prefix_products(max_n, [&](int k) {
    const CommSeries inner = base.pow(k) - one;
    return fold_factor(inner.divided_by(xmy).scaled(ym1), ym1);
  });
}

CommSeries eval_theorem_main_sxy(int max_n) {
  const Poly xmy = kX - kY, ym1 = kY - Poly(1);
  const CommSeries one = CommSeries::constant(max_n, Poly(1));
  const CommSeries plain = one + CommSeries::t_power(max_n, 1, xmy);
  const CommSeries marked =
      one + CommSeries::t_power(max_n, 1, xmy * kS);
  return sum_of_prefix_products(max_n, [&](int k) {
    const CommSeries inner = plain.pow(k - 1) * marked - one;
    return fold_factor(inner.divided_by(xmy).scaled(ym1), ym1);
  });
}

CommSeries eval_conj20_formula(int max_n) {
  const Poly xm1 = kX - Poly(1);
  const CommSeries one = CommSeries::constant(max_n, Poly(1));
  const CommSeries plain = one + CommSeries::t_power(max_n, 1, xm1);
  const CommSeries marked =
      one + CommSeries::t_power(max_n, 1, xm1 * kS);
  const CommSeries numerator =
      sum_of_prefix_products(max_n, [&](int k) {
        return (plain.pow(k - 1) * marked - one).divided_by(xm1);
      }).scaled(kR);
  const CommSeries plain_sum = sum_of_prefix_products(max_n, [&](int k) {
    return (plain.pow(k) - one).divided_by(xm1);
  });
  const CommSeries denominator =
      one + plain_sum.scaled(Poly(1) - kR);
  return numerator * denominator.inverse();
}

std::vector<Int> eval_fishburn(int max_n) {
  const CommSeries one = CommSeries::constant(max_n, Poly(1));
  const CommSeries shrink = one - CommSeries::t_power(max_n, 1, Poly(1));
  const CommSeries total =
      one + sum_of_prefix_products(max_n, [&](int k) {
        return one - shrink.pow(k);
      });
  std::vector<Int> out;
  for (int n = 0; n <= max_n; ++n) {
    const Int* value = total.at(n).constant_value();
    if (value == nullptr) throw std::logic_error("nonconstant coefficient");
    out.push_back(*value);
  }
  return out;
}

CommSeries eval_leftcrossing(int max_n, LeftCrossVariant variant) {
  const Poly xmy = kX - kY;
  const Poly unit = kUps * kY - Poly(1);
  const Poly carry = kUps * xmy;
  const CommSeries one = CommSeries::constant(max_n, Poly(1));
  CommSeries sum(max_n);
  if (variant == LeftCrossVariant::xyz_upsilon) {
    const CommSeries geo =
        (one - CommSeries::t_power(max_n, 1, kZ - kY * kUps)).inverse();
    const CommSeries base =
        one + CommSeries::t_power(max_n, 1, carry) * geo;
    sum = sum_of_prefix_products(max_n, [&](int k) {
      const CommSeries inner = base.pow(k) - one;
      return fold_factor(inner.divided_by(carry).scaled(unit), unit);
    });
  } else {
    const CommSeries plain = one + CommSeries::t_power(max_n, 1, carry);
    const CommSeries marked =
        one + CommSeries::t_power(max_n, 1, carry * kS);
    sum = sum_of_prefix_products(max_n, [&](int k) {
      const CommSeries inner = plain.pow(k - 1) * marked - one;
      return fold_factor(inner.divided_by(carry).scaled(unit), unit);
    });
  }
  return one + sum;  // the empty object contributes 1
}

std::pair<Poly, Poly> eval_conj21_identity(int n) {
  Poly perm_side;
  for (const Permutation& p : all_permutations(n)) {
    const PermStats st = perm_stats(p);
    perm_side += Poly::variable(Var::s, st.rmin_count()) *
                 Poly::variable(Var::x, st.p_silly_count()) *
                 Poly::variable(Var::w, st.des_count());
  }
  Poly match_side;
  for (const Matching& m : all_left_nesting_free_matchings(n)) {
    const MatchStats st = match_stats(m);
    match_side += Poly::variable(Var::s, st.min_count()) *
                  Poly::variable(Var::x, st.rne_count()) *
                  Poly::variable(Var::w, st.inter_count() - 1);
  }
  return {perm_side, match_side};
}

NCSeries eval_ascentbottom_nc(int max_deg) {
  const std::vector<Letter> alphabet = {Letter::ups, Letter::z, Letter::t};
  const auto one = NCSeries::constant(alphabet, max_deg, Poly(1));
  const auto lt = NCSeries::letter_term(alphabet, max_deg, Letter::t);
  const auto lz = NCSeries::letter_term(alphabet, max_deg, Letter::z);
  const auto lups = NCSeries::letter_term(alphabet, max_deg, Letter::ups);
  const NCSeries core = (one - lz + lups).inverse();
  const NCSeries rise = lups - lt;
  NCSeries total(alphabet, max_deg);
  for (int m = 1; m <= max_deg; ++m) {
    NCSeries prod = one;
    for (int k = 1; k <= m; ++k) {
      const Poly scale(static_cast<long long>(m + 1 - k));
      const NCSeries bracket =
          (one - (core * rise).scaled(scale)).inverse();
      prod = prod * (bracket * core * lt).scaled(scale);
    }
    total = total + prod;
  }
  return total;
}

namespace {

template <typename Object, typename StatsFn, typename MonomialFn>
CommSeries family_sum(int max_n, bool with_constant,
                      const std::function<std::vector<Object>(int)>& objects,
                      StatsFn stats, MonomialFn monomial) {
  CommSeries out(max_n);
  if (with_constant) out.add_at(0, Poly(1));
  for (int n = 1; n <= max_n; ++n)
    for (const Object& obj : objects(n)) out.add_at(n, monomial(stats(obj)));
  return out;
}

CommSeries perm_sum(int max_n, bool with_constant,
                    const std::function<Poly(const PermStats&)>& monomial) {
  return family_sum<Permutation>(
      max_n, with_constant, [](int n) { return all_permutations(n); },
      [](const Permutation& p) { return perm_stats(p); }, monomial);
}

CommSeries match_sum(int max_n, bool with_constant,
                     const std::function<Poly(const MatchStats&)>& monomial) {
  return family_sum<Matching>(
      max_n, with_constant,
      [](int n) { return all_left_nesting_free_matchings(n); },
      [](const Matching& m) { return match_stats(m); }, monomial);
}

Poly power(Var v, int e) { return Poly::variable(v, e); }

}  // namespace

CommSeries perm_sum_xyz(int max_n) {
  return perm_sum(max_n, false, [](const PermStats& st) {
    return power(Var::x, st.p_count()) * power(Var::y, st.q_count()) *
           power(Var::z, st.adjasc_count());
  });
}

CommSeries match_sum_xyz(int max_n) {
  return match_sum(max_n, false, [](const MatchStats& st) {
    return power(Var::x, st.rne_count()) *
           power(Var::y, static_cast<int>(st.rcr_single.size())) *
           power(Var::z, st.lrcr_count());
  });
}

CommSeries perm_sum_sxy(int max_n) {
  return perm_sum(max_n, false, [](const PermStats& st) {
    return power(Var::s, st.rmin_count()) * power(Var::x, st.p_count()) *
           power(Var::y, st.q_count() + st.adjasc_count());
  });
}

CommSeries perm_sum_sxy_silly(int max_n) {
  return perm_sum(max_n, false, [](const PermStats& st) {
    return power(Var::s, st.rmin_count()) *
           power(Var::x, st.p_silly_count()) *
           power(Var::y, st.q_silly_count());
  });
}

CommSeries match_sum_sxy(int max_n) {
  return match_sum(max_n, false, [](const MatchStats& st) {
    return power(Var::s, st.min_count()) * power(Var::x, st.rne_count()) *
           power(Var::y, st.rcr_count());
  });
}

CommSeries perm_sum_conj20(int max_n) {
  return perm_sum(max_n, false, [](const PermStats& st) {
    return power(Var::r, st.comp) * power(Var::s, st.rmax_count()) *
           power(Var::x, st.p_silly_count());
  });
}

CommSeries match_sum_conj20(int max_n) {
  return match_sum(max_n, false, [](const MatchStats& st) {
    return power(Var::r, st.comp) * power(Var::s, st.min_count()) *
           power(Var::x, st.rne_count());
  });
}

CommSeries perm_sum_leftcross_xyz(int max_n) {
  return perm_sum(max_n, true, [](const PermStats& st) {
    return power(Var::x, st.p_count()) * power(Var::y, st.q_count()) *
           power(Var::z, st.adjasc_count()) *
           power(Var::ups, st.p_count() + st.q_count());
  });
}

CommSeries match_sum_leftcross_xyz(int max_n) {
  return match_sum(max_n, true, [](const MatchStats& st) {
    return power(Var::x, st.rne_count()) *
           power(Var::y, static_cast<int>(st.rcr_single.size())) *
           power(Var::z, st.lrcr_count()) *
           power(Var::ups, static_cast<int>(st.lcr_single.size()));
  });
}

CommSeries perm_sum_leftcross_sxy(int max_n) {
  return perm_sum(max_n, true, [](const PermStats& st) {
    return power(Var::s, st.rmin_count()) * power(Var::x, st.p_count()) *
           power(Var::y, st.q_count() + st.adjasc_count()) *
           power(Var::ups, st.asc_count());
  });
}

CommSeries perm_sum_leftcross_sxy_silly(int max_n) {
  return perm_sum(max_n, true, [](const PermStats& st) {
    return power(Var::s, st.rmin_count()) *
           power(Var::x, st.p_silly_count()) *
           power(Var::y, st.q_silly_count()) *
           power(Var::ups, st.asc_count());
  });
}

CommSeries match_sum_leftcross_sxy(int max_n) {
  return match_sum(max_n, true, [](const MatchStats& st) {
    return power(Var::s, st.min_count()) * power(Var::x, st.rne_count()) *
           power(Var::y, st.rcr_count()) * power(Var::ups, st.lcr_count());
  });
}

}  // namespace combistat
