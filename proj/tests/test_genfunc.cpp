#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "combistat/genfunc.hpp"
#include "combistat/statistics.hpp"

using namespace combistat;

namespace {

const Poly kOne(1);

Poly pvar(Var v, int e = 1) { return Poly::variable(v, e); }

CommSeries all_ones(const CommSeries& s, std::initializer_list<Var> vars) {
  CommSeries out = s;
  for (Var v : vars) out = out.substituted(v, kOne);
  return out;
}

}  // namespace

TEST_CASE("series container basics") {
  CommSeries s(3);
  CHECK(s.max_n() == 3);
  CHECK(s.at(0).is_zero());
  CHECK_THROWS_AS(s.at(4), std::out_of_range);
  s.add_at(1, pvar(Var::x));
  s.add_at(1, kOne);
  CHECK(s.at(1) == pvar(Var::x) + 1);

  const CommSeries one = CommSeries::constant(3, kOne);
  const CommSeries t = CommSeries::t_power(3, 1, kOne);
  CommSeries geometric(3);
  for (int n = 0; n <= 3; ++n) geometric.add_at(n, kOne);
  CHECK((one - t).inverse() == geometric);
  CHECK((one - t) * geometric == one);
  CHECK(t.pow(2) == CommSeries::t_power(3, 2, kOne));
  CHECK_THROWS_AS(t.inverse(), std::domain_error);

  const CommSeries scaled = t.scaled(pvar(Var::y) - 1);
  CHECK(scaled.divided_by(pvar(Var::y) - 1) == t);
  CHECK_THROWS_AS(t.scaled(pvar(Var::y)).divided_by(pvar(Var::x)),
                  std::domain_error);
  CHECK(scaled.substituted(Var::y, Poly(3)) == t.scaled(Poly(2)));
}

TEST_CASE("csv rendering is deterministic") {
  CHECK(CommSeries::t_power(2, 1, Poly(2)).to_csv() ==
        "n,monomial,coefficient\n1,1,2\n");
  CHECK(eval_theorem_main_xyz(2).to_csv() ==
        "n,monomial,coefficient\n1,1,1\n2,1,1\n2,z^1,1\n");
}

TEST_CASE("the closed form counts objects at full specialization") {
  const CommSeries formula = eval_theorem_main_xyz(5);
  const CommSeries plain = all_ones(formula, {Var::x, Var::y, Var::z});
  long long factorial = 1;
  for (int n = 1; n <= 5; ++n) {
    factorial *= n;
    REQUIRE(plain.at(n).constant_value() != nullptr);
    CHECK(*plain.at(n).constant_value() == factorial);
  }
}

TEST_CASE("three-variable identity at small truncation") {
  const CommSeries formula = eval_theorem_main_xyz(4);
  CHECK(formula.at(1) == kOne);
  CHECK(formula.at(2) == pvar(Var::z) + 1);
  CHECK(formula == perm_sum_xyz(4));
  CHECK(formula == match_sum_xyz(4));
}

TEST_CASE("s-refined identity at small truncation") {
  const CommSeries formula = eval_theorem_main_sxy(4);
  CHECK(formula.at(1) == pvar(Var::s));
  CHECK(formula.at(2) ==
        pvar(Var::s, 2) * pvar(Var::y) + pvar(Var::s));
  CHECK(formula == perm_sum_sxy(4));
  CHECK(formula == perm_sum_sxy_silly(4));
  CHECK(formula == match_sum_sxy(4));
}

TEST_CASE("component-refined identity at small truncation") {
  const CommSeries formula = eval_conj20_formula(4);
  CHECK(formula.at(1) == pvar(Var::r) * pvar(Var::s));
  CHECK(formula.at(2) == pvar(Var::r, 2) * pvar(Var::s) +
                             pvar(Var::r) * pvar(Var::s, 2));
  CHECK(formula == perm_sum_conj20(4));
  CHECK(formula == match_sum_conj20(4));
}

TEST_CASE("interval identity holds size by size") {
  for (int n = 1; n <= 5; ++n) {
    const auto [perm_side, match_side] = eval_conj21_identity(n);
    CHECK(perm_side == match_side);
  }
  const auto [perm_side, match_side] = eval_conj21_identity(2);
  CHECK(perm_side == pvar(Var::s, 2) + pvar(Var::s) * pvar(Var::w));
  CHECK(match_side == perm_side);
}

TEST_CASE("known low counts of pattern-free objects") {
  const std::vector<Int> values = eval_fishburn(6);
  const Int expected[] = {1, 1, 2, 5, 15, 53, 217};
  REQUIRE(values.size() == 7);
  for (int i = 0; i <= 6; ++i)
    CHECK(values[static_cast<std::size_t>(i)] == expected[i]);
}

TEST_CASE("extra-variable refinement matches enumeration and collapses") {
  const CommSeries xyz = eval_leftcrossing(4, LeftCrossVariant::xyz_upsilon);
  CHECK(xyz.at(0) == kOne);
  CHECK(xyz.at(1) == kOne);
  CHECK(xyz == perm_sum_leftcross_xyz(4));
  CHECK(xyz == match_sum_leftcross_xyz(4));

  const CommSeries sxy = eval_leftcrossing(4, LeftCrossVariant::sxy_upsilon);
  CHECK(sxy == perm_sum_leftcross_sxy(4));
  CHECK(sxy == perm_sum_leftcross_sxy_silly(4));
  CHECK(sxy == match_sum_leftcross_sxy(4));

  const CommSeries one = CommSeries::constant(4, kOne);
  CHECK(xyz.substituted(Var::ups, kOne) == one + eval_theorem_main_xyz(4));
  CHECK(sxy.substituted(Var::ups, kOne) == one + eval_theorem_main_sxy(4));
}

TEST_CASE("word series of ascent bottoms matches both families") {
  const int deg = 4;
  const std::vector<Letter> ab = {Letter::ups, Letter::z, Letter::t};
  const NCSeries formula = eval_ascentbottom_nc(deg);
  const NCSeries perms = brute_series_perms(
      deg, ab, [](const Permutation& p) {
        const PermStats st = perm_stats(p);
        WordAssignment a;
        a.marked = {{st.ascbottom_long, Letter::ups},
                    {set_shifted(st.adjasc, -1), Letter::z}};
        return a;
      });
  const NCSeries matchings = brute_series_matchings(
      deg, ab, [](const Matching& m) {
        const MatchStats st = match_stats(m);
        WordAssignment a;
        a.marked = {{st.lcr_single, Letter::ups},
                    {set_shifted(st.lrcr, -1), Letter::z}};
        return a;
      });
  CHECK(formula == perms);
  CHECK(formula == matchings);

  // Low-degree words, frozen by hand.
  CHECK(formula.coefficient(word_of({Letter::t})) == kOne);
  CHECK(formula.coefficient(word_of({Letter::z, Letter::t})) == kOne);
  CHECK(formula.coefficient(word_of({Letter::t, Letter::t})) == kOne);
  CHECK(formula.coefficient(word_of({Letter::ups, Letter::t})).is_zero());
  CHECK(formula.coefficient(
            word_of({Letter::ups, Letter::t, Letter::t})) == Poly(2));
  CHECK(formula.coefficient(
            word_of({Letter::t, Letter::z, Letter::t})) == kOne);

  const CommSeries collapsed =
      abelianize(formula, {{Letter::ups, pvar(Var::ups)},
                           {Letter::z, pvar(Var::z)},
                           {Letter::t, kOne}});
  const CommSeries refined =
      eval_leftcrossing(deg, LeftCrossVariant::xyz_upsilon)
          .substituted(Var::x, kOne)
          .substituted(Var::y, kOne) -
      CommSeries::constant(deg, kOne);
  CHECK(collapsed == refined);
}

TEST_CASE("abelianized main identity reproduces the commutative form") {
  const NCSeries nc =
      eval_main(4, MainVariant::general_w, ExtremeSide::max_side);
  const CommSeries mapped =
      abelianize(nc, {{Letter::u, pvar(Var::x) - pvar(Var::y)},
                      {Letter::v, pvar(Var::y) - 1},
                      {Letter::w, pvar(Var::z) - pvar(Var::y)},
                      {Letter::t, kOne}});
  CHECK(mapped == eval_theorem_main_xyz(4));

  CHECK_THROWS_AS(abelianize(nc, {{Letter::u, kOne}}), std::domain_error);
}
