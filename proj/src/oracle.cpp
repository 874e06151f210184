#include "combistat/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "combistat/bijections.hpp"
#include "combistat/genfunc.hpp"

namespace combistat {

namespace {

using nlohmann::json;

std::string describe(const Permutation& p) {
  std::string out = "perm [";
  for (int j = 1; j <= p.size(); ++j) {
    if (j > 1) out += ' ';
    out += std::to_string(p.value_at(j));
  }
  return out + "]";
}

std::string describe(const Matching& m) {
  std::string out = "matching [";
  for (int i = 1; i <= m.size(); ++i) {
    if (i > 1) out += ' ';
    out += '(' + std::to_string(m.arc(i).opener) + ',' +
           std::to_string(m.arc(i).closer) + ')';
  }
  return out + "]";
}

std::string describe(const Filling& f) {
  std::string out = "filling heights=[";
  for (int i = 1; i <= f.shape().length(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(f.shape().column_height(i));
  }
  out += "] dots=[";
  bool first = true;
  for (const auto& [col, row] : f.cells()) {
    if (!first) out += ' ';
    first = false;
    out += '(' + std::to_string(col) + ',' + std::to_string(row) + ')';
  }
  return out + "]";
}

Int factorial(int n) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "perms") return Family::perms;
  if (name == "nlm") return Family::nlm_matchings;
  if (name == "matchings") return Family::all_matchings;
  throw std::invalid_argument("unknown family: " + name);
}

const std::vector<std::string>& perm_stat_names() {
  static const std::vector<std::string> kNames = {
      "Asc",      "Des",          "P",
      "Q",        "R",            "Asc_silly",
      "P_silly",  "Q_silly",      "P_silly_plus",
      "Q_silly_plus", "Rmin",     "Rmax",
      "Ascbottom", "Ascbottom_long",
      "asc",      "des",          "p",
      "q",        "adjasc",       "ascproper",
      "asc_silly", "p_silly",     "q_silly",
      "rmin",     "rmax",         "ascbottom",
      "ascbottom_long", "comp"};
  return kNames;
}

const std::vector<std::string>& match_stat_names() {
  static const std::vector<std::string> kNames = {
      "Radj", "Ladj", "Rne",  "Rcr",  "Lcr",  "LRcr", "Rcr_single",
      "Lcr_single", "Min",  "radj", "ladj", "rne",  "rcr",  "lcr",
      "lrcr", "rcr_single", "lcr_single", "min", "comp", "inter"};
  return kNames;
}

std::string perm_stat_value(const PermStats& st, const std::string& name) {
  if (name == "Asc") return set_to_string(st.asc);
  if (name == "Des") return set_to_string(st.des);
  if (name == "P") return set_to_string(st.p);
  if (name == "Q") return set_to_string(st.q);
  if (name == "R") return set_to_string(st.adjasc);
  if (name == "Asc_silly") return set_to_string(st.asc_silly);
  if (name == "P_silly") return set_to_string(st.p_silly);
  if (name == "Q_silly") return set_to_string(st.q_silly);
  if (name == "P_silly_plus") return set_to_string(set_shifted(st.p_silly, 1));
  if (name == "Q_silly_plus") return set_to_string(set_shifted(st.q_silly, 1));
  if (name == "Rmin") return set_to_string(st.rmin);
  if (name == "Rmax") return set_to_string(st.rmax);
  if (name == "Ascbottom") return set_to_string(st.ascbottom);
  if (name == "Ascbottom_long") return set_to_string(st.ascbottom_long);
  if (name == "asc") return std::to_string(st.asc_count());
  if (name == "des") return std::to_string(st.des_count());
  if (name == "p") return std::to_string(st.p_count());
  if (name == "q") return std::to_string(st.q_count());
  if (name == "adjasc") return std::to_string(st.adjasc_count());
  if (name == "ascproper") return std::to_string(st.p_count() + st.q_count());
  if (name == "asc_silly")
    return std::to_string(static_cast<int>(st.asc_silly.size()));
  if (name == "p_silly") return std::to_string(st.p_silly_count());
  if (name == "q_silly") return std::to_string(st.q_silly_count());
  if (name == "rmin") return std::to_string(st.rmin_count());
  if (name == "rmax") return std::to_string(st.rmax_count());
  if (name == "ascbottom")
    return std::to_string(static_cast<int>(st.ascbottom.size()));
  if (name == "ascbottom_long")
    return std::to_string(static_cast<int>(st.ascbottom_long.size()));
  if (name == "comp") return std::to_string(st.comp);
  throw std::invalid_argument("unknown permutation statistic: " + name);
}

std::string match_stat_value(const MatchStats& st, const std::string& name) {
  if (name == "Radj") return set_to_string(st.radj);
  if (name == "Ladj") return set_to_string(st.ladj);
  if (name == "Rne") return set_to_string(st.rne);
  if (name == "Rcr") return set_to_string(st.rcr);
  if (name == "Lcr") return set_to_string(st.lcr);
  if (name == "LRcr") return set_to_string(st.lrcr);
  if (name == "Rcr_single") return set_to_string(st.rcr_single);
  if (name == "Lcr_single") return set_to_string(st.lcr_single);
  if (name == "Min") return set_to_string(st.min_arcs);
  if (name == "radj") return std::to_string(st.radj_count());
  if (name == "ladj") return std::to_string(st.ladj_count());
  if (name == "rne") return std::to_string(st.rne_count());
  if (name == "rcr") return std::to_string(st.rcr_count());
  if (name == "lcr") return std::to_string(st.lcr_count());
  if (name == "lrcr") return std::to_string(st.lrcr_count());
  if (name == "rcr_single")
    return std::to_string(static_cast<int>(st.rcr_single.size()));
  if (name == "lcr_single")
    return std::to_string(static_cast<int>(st.lcr_single.size()));
  if (name == "min") return std::to_string(st.min_count());
  if (name == "comp") return std::to_string(st.comp);
  if (name == "inter") return std::to_string(st.inter_count());
  throw std::invalid_argument("unknown matching statistic: " + name);
}

std::uint64_t Distribution::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : counts) sum += count;
  return sum;
}

std::string Distribution::to_csv() const {
  std::string out = "n,key,count\n";
  for (const auto& [key, count] : counts) {
    std::string joined;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0) joined += ';';
      joined += key[i];
    }
    out += std::to_string(n);
    out += ",\"" + joined + "\",";
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

std::string Distribution::to_json() const {
  json rows = json::array();
  for (const auto& [key, count] : counts)
    rows.push_back({{"key", key}, {"count", count}});
  json doc = {{"n", n}, {"schema", key_schema}, {"counts", rows}};
  return doc.dump(2) + "\n";
}

namespace {

template <typename T>
Distribution tally(int n, const std::vector<std::string>& schema,
                   const std::vector<T>& objects,
                   const std::function<std::vector<std::string>(const T&)>&
                       key_of,
                   int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const std::size_t count = objects.size();
  jobs = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs),
                            std::max<std::size_t>(count, 1)));
  std::vector<std::map<std::vector<std::string>, std::uint64_t>> partial(
      static_cast<std::size_t>(jobs));
  const std::size_t chunk =
      (count + static_cast<std::size_t>(jobs) - 1) /
      static_cast<std::size_t>(jobs);
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      const std::size_t lo = static_cast<std::size_t>(j) * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i)
        ++partial[static_cast<std::size_t>(j)][key_of(objects[i])];
    });
  }
  for (auto& w : workers) w.join();
  Distribution d;
  d.n = n;
  d.key_schema = schema;
  for (const auto& p : partial)
    for (const auto& [key, c] : p) d.counts[key] += c;
  return d;
}

}  // namespace

Distribution make_distribution(Family family, int n,
                               const std::vector<std::string>& schema,
                               int jobs) {
  if (family == Family::perms) {
    return tally<Permutation>(
        n, schema, all_permutations(n),
        [&schema](const Permutation& p) {
          const PermStats st = perm_stats(p);
          std::vector<std::string> key;
          key.reserve(schema.size());
          for (const auto& name : schema)
            key.push_back(perm_stat_value(st, name));
          return key;
        },
        jobs);
  }
  const auto objects = family == Family::nlm_matchings
                           ? all_left_nesting_free_matchings(n)
                           : all_matchings(n);
  return tally<Matching>(
      n, schema, objects,
      [&schema](const Matching& m) {
        const MatchStats st = match_stats(m);
        std::vector<std::string> key;
        key.reserve(schema.size());
        for (const auto& name : schema)
          key.push_back(match_stat_value(st, name));
        return key;
      },
      jobs);
}

std::string CheckReport::to_json() const {
  json doc = {{"check_id", check_id},
              {"n_max", n_max},
              {"status", verified ? "verified" : "counterexample"}};
  if (!verified) doc["witness"] = witness;
  return doc.dump(2) + "\n";
}

namespace {

class Checker {
 public:
  explicit Checker(std::string id, int n_max)
      : start_(std::chrono::steady_clock::now()) {
    report_.check_id = std::move(id);
    report_.n_max = n_max;
    report_.verified = true;
  }

  bool ok() const { return report_.verified; }

  // Records the first failure only.
  void require(bool condition, const std::function<std::string()>& witness) {
    if (!report_.verified || condition) return;
    report_.verified = false;
    report_.witness = witness();
  }

  CheckReport finish() {
    report_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    return report_;
  }

 private:
  CheckReport report_;
  std::chrono::steady_clock::time_point start_;
};

void compare_series(Checker& c, const CommSeries& a, const CommSeries& b,
                    const std::string& label_a, const std::string& label_b) {
  for (int n = 0; n <= std::min(a.max_n(), b.max_n()); ++n) {
    c.require(a.at(n) == b.at(n), [&, n] {
      std::ostringstream os;
      os << "t^" << n << ": " << label_a << " = " << a.at(n).to_string()
         << " but " << label_b << " = " << b.at(n).to_string();
      return os.str();
    });
    if (!c.ok()) return;
  }
}

void compare_nc(Checker& c, const NCSeries& a, const NCSeries& b,
                const std::string& label_a, const std::string& label_b) {
  c.require(a == b, [&] {
    return label_a + " and " + label_b + " differ:\n" + a.to_text() + "--\n" +
           b.to_text();
  });
}

void require_factorial_specialization(Checker& c, const CommSeries& s,
                                      const std::vector<Var>& vars,
                                      const std::string& label) {
  CommSeries plain = s;
  for (Var v : vars) plain = plain.substituted(v, Poly(1));
  for (int n = 1; n <= plain.max_n(); ++n) {
    const Int* value = plain.at(n).constant_value();
    c.require(value != nullptr && *value == factorial(n), [&, n] {
      return label + " at all-ones, t^" + std::to_string(n) +
             ": " + plain.at(n).to_string();
    });
    if (!c.ok()) return;
  }
}

CheckReport check_zagier(int n_max) {
  Checker c("zagier", n_max);
  const std::vector<Int> fish = eval_fishburn(n_max);
  static const Int kKnown[] = {1, 1, 2, 5, 15, 53, 217};
  for (int n = 0; n <= std::min(n_max, 6); ++n)
    c.require(fish[static_cast<std::size_t>(n)] == kKnown[n], [&, n] {
      return "closed form t^" + std::to_string(n) + " = " +
             fish[static_cast<std::size_t>(n)].str() +
             ", expected " + kKnown[n].str();
    });
  for (int n = 1; n_max >= 1 && n <= n_max && c.ok(); ++n) {
    Int perms_flat = 0;
    for (const Permutation& p : all_permutations(n))
      if (perm_stats(p).p_count() == 0) ++perms_flat;
    Int match_flat = 0;
    for (const Matching& m : all_left_nesting_free_matchings(n))
      if (match_stats(m).rne_count() == 0) ++match_flat;
    const Int expected = fish[static_cast<std::size_t>(n)];
    c.require(perms_flat == expected, [&, n] {
      return "n=" + std::to_string(n) + ": permutations without the x-pattern"
             " = " + perms_flat.str() + ", closed form = " + expected.str();
    });
    c.require(match_flat == expected, [&, n] {
      return "n=" + std::to_string(n) + ": matchings without right nestings"
             " = " + match_flat.str() + ", closed form = " + expected.str();
    });
  }
  return c.finish();
}

CheckReport check_main_xyz(int n_max) {
  Checker c("main_xyz", n_max);
  const CommSeries formula = eval_theorem_main_xyz(n_max);
  compare_series(c, formula, perm_sum_xyz(n_max), "closed form",
                 "permutation sum");
  if (c.ok())
    compare_series(c, formula, match_sum_xyz(n_max), "closed form",
                   "matching sum");
  if (c.ok())
    require_factorial_specialization(c, formula, {Var::x, Var::y, Var::z},
                                     "closed form");
  return c.finish();
}

CheckReport check_main_sxy(int n_max) {
  Checker c("main_sxy", n_max);
  const CommSeries formula = eval_theorem_main_sxy(n_max);
  compare_series(c, formula, match_sum_sxy(n_max), "closed form",
                 "matching sum");
  if (c.ok())
    compare_series(c, formula, perm_sum_sxy(n_max), "closed form",
                   "permutation sum");
  if (c.ok())
    compare_series(c, formula, perm_sum_sxy_silly(n_max), "closed form",
                   "silly permutation sum");
  if (c.ok())
    require_factorial_specialization(c, formula, {Var::s, Var::x, Var::y},
                                     "closed form");
  return c.finish();
}

CheckReport check_conj20(int n_max) {
  Checker c("conj20", n_max);
  const CommSeries formula = eval_conj20_formula(n_max);
  compare_series(c, formula, perm_sum_conj20(n_max), "closed form",
                 "permutation sum");
  if (c.ok())
    compare_series(c, formula, match_sum_conj20(n_max), "closed form",
                   "matching sum");
  if (c.ok())
    require_factorial_specialization(c, formula, {Var::r, Var::s, Var::x},
                                     "closed form");
  return c.finish();
}

CheckReport check_conj21(int n_max) {
  Checker c("conj21", n_max);
  for (int n = 1; n <= n_max && c.ok(); ++n) {
    const auto [perm_side, match_side] = eval_conj21_identity(n);
    c.require(perm_side == match_side, [&, n] {
      return "n=" + std::to_string(n) + ": permutation side " +
             perm_side.to_string() + " vs matching side " +
             match_side.to_string();
    });
  }
  return c.finish();
}

CheckReport check_leftcross(int n_max) {
  Checker c("leftcross", n_max);
  const CommSeries f1 =
      eval_leftcrossing(n_max, LeftCrossVariant::xyz_upsilon);
  compare_series(c, f1, perm_sum_leftcross_xyz(n_max), "xyz closed form",
                 "permutation sum");
  if (c.ok())
    compare_series(c, f1, match_sum_leftcross_xyz(n_max), "xyz closed form",
                   "matching sum");
  const CommSeries f2 =
      eval_leftcrossing(n_max, LeftCrossVariant::sxy_upsilon);
  if (c.ok())
    compare_series(c, f2, perm_sum_leftcross_sxy(n_max), "sxy closed form",
                   "permutation sum");
  if (c.ok())
    compare_series(c, f2, perm_sum_leftcross_sxy_silly(n_max),
                   "sxy closed form", "silly permutation sum");
  if (c.ok())
    compare_series(c, f2, match_sum_leftcross_sxy(n_max), "sxy closed form",
                   "matching sum");
  // Dropping the extra variable recovers the unrefined identities.
  if (c.ok()) {
    const CommSeries one = CommSeries::constant(n_max, Poly(1));
    compare_series(c, f1.substituted(Var::ups, Poly(1)),
                   one + eval_theorem_main_xyz(n_max), "xyz form at 1",
                   "base closed form");
    compare_series(c, f2.substituted(Var::ups, Poly(1)),
                   one + eval_theorem_main_sxy(n_max), "sxy form at 1",
                   "base closed form");
  }
  return c.finish();
}

CheckReport check_ascbottom_nc(int max_deg) {
  Checker c("ascbottom_nc", max_deg);
  const std::vector<Letter> alphabet = {Letter::ups, Letter::z, Letter::t};
  const NCSeries formula = eval_ascentbottom_nc(max_deg);
  const NCSeries perms = brute_series_perms(
      max_deg, alphabet, [](const Permutation& p) {
        const PermStats st = perm_stats(p);
        WordAssignment a;
        a.marked = {{st.ascbottom_long, Letter::ups},
                    {set_shifted(st.adjasc, -1), Letter::z}};
        return a;
      });
  const NCSeries matchings = brute_series_matchings(
      max_deg, alphabet, [](const Matching& m) {
        const MatchStats st = match_stats(m);
        WordAssignment a;
        a.marked = {{st.lcr_single, Letter::ups},
                    {set_shifted(st.lrcr, -1), Letter::z}};
        return a;
      });
  compare_nc(c, formula, perms, "closed form", "permutation words");
  if (c.ok())
    compare_nc(c, formula, matchings, "closed form", "matching words");
  if (c.ok()) {
    const CommSeries collapsed =
        abelianize(formula, {{Letter::ups, Poly::variable(Var::ups)},
                             {Letter::z, Poly::variable(Var::z)},
                             {Letter::t, Poly(1)}});
    const CommSeries refined =
        eval_leftcrossing(max_deg, LeftCrossVariant::xyz_upsilon)
            .substituted(Var::x, Poly(1))
            .substituted(Var::y, Poly(1)) -
        CommSeries::constant(max_deg, Poly(1));
    compare_series(c, collapsed, refined, "collapsed word series",
                   "refined closed form");
  }
  return c.finish();
}

CheckReport check_sbij(int n_max) {
  Checker c("sbij", n_max);
  for (int len = 1; len <= n_max && c.ok(); ++len) {
    for (const Filling& t : flat_column_strict_fillings(len)) {
      const BarredPermutation barred = flat_to_barred(t);
      const auto fail = [&](const std::string& what) {
        return [&, what] {
          return describe(t) + ": " + what + " (image " +
                 describe(barred.base()) + " bars " +
                 set_to_string(barred.bars()) + ")";
        };
      };
      c.require(barred_to_flat(barred) == t, fail("round trip"));
      if (!c.ok()) break;
      const FillStats ft = fill_stats(t);
      const PermStats ps = perm_stats(barred.base());
      const IndexSet& bars = barred.bars();
      c.require(t.dot_count() == barred.base().size(), fail("size"));
      c.require(static_cast<int>(irreducible_components(t).size()) ==
                    static_cast<int>(irreducible_components(barred).size()),
                fail("component count"));
      c.require(ft.max_set == ps.rmin, fail("top dots vs right minima"));
      c.require(ft.rmax_set() == ps.rmax, fail("shallow dots vs maxima"));
      c.require(ft.lazy == bars, fail("lazy columns vs bars"));
      c.require(set_intersection(ft.des_set(), ft.lazy) ==
                    set_intersection(ps.p, bars),
                fail("lazy descents"));
      c.require(set_intersection(ft.asc_set(), ft.lazy) ==
                    set_intersection(ps.q, bars),
                fail("lazy ascents"));
      c.require(set_intersection(ft.rep_set(), ft.lazy) ==
                    set_intersection(ps.adjasc, bars),
                fail("lazy repeats"));
      if (!c.ok()) break;
    }
  }
  return c.finish();
}

CheckReport check_ssillybij(int n_max) {
  Checker c("ssillybij", n_max);
  for (int len = 1; len <= n_max && c.ok(); ++len) {
    for (const Filling& t : flat_column_strict_fillings(len)) {
      const HattedPermutation hatted = flat_to_hatted(t);
      const auto fail = [&](const std::string& what) {
        return [&, what] {
          return describe(t) + ": " + what + " (image " +
                 describe(hatted.base()) + " hats " +
                 set_to_string(hatted.hats()) + ")";
        };
      };
      c.require(hatted_to_flat(hatted) == t, fail("round trip"));
      if (!c.ok()) break;
      const FillStats ft = fill_stats(t);
      const PermStats ps = perm_stats(hatted.base());
      const IndexSet hats_up = set_shifted(hatted.hats(), 1);
      c.require(t.dot_count() == hatted.base().size(), fail("size"));
      c.require(static_cast<int>(irreducible_components(t).size()) ==
                    static_cast<int>(irreducible_components(hatted).size()),
                fail("component count"));
      c.require(ft.max_set == ps.rmin, fail("top dots vs right minima"));
      c.require(ft.rmax_set() == ps.rmax, fail("shallow dots vs maxima"));
      c.require(ft.lazy == hats_up, fail("lazy columns vs shifted hats"));
      c.require(set_intersection(ft.des_set(), ft.lazy) ==
                    set_intersection(set_shifted(ps.p_silly, 1), hats_up),
                fail("lazy descents"));
      c.require(set_intersection(set_union(ft.asc_set(), ft.rep_set()),
                                 ft.lazy) ==
                    set_intersection(set_shifted(ps.q_silly, 1), hats_up),
                fail("lazy ascents and repeats"));
      if (!c.ok()) break;
    }
  }
  return c.finish();
}

CheckReport check_nbij(int n_max) {
  Checker c("nbij", n_max);
  for (int len = 1; len <= n_max && c.ok(); ++len) {
    for (const Filling& t : flat_column_strict_fillings(len)) {
      const MarkedMatching marked = flat_to_marked(t);
      const auto fail = [&](const std::string& what) {
        return [&, what] {
          return describe(t) + ": " + what + " (image " +
                 describe(marked.base()) + " marks " +
                 set_to_string(marked.marks()) + ")";
        };
      };
      c.require(marked_to_flat(marked) == t, fail("round trip"));
      if (!c.ok()) break;
      const FillStats ft = fill_stats(t);
      const MatchStats ms = match_stats(marked.base());
      const IndexSet& marks = marked.marks();
      c.require(t.dot_count() == marked.base().size(), fail("size"));
      c.require(static_cast<int>(irreducible_components(t).size()) ==
                    static_cast<int>(irreducible_components(marked).size()),
                fail("component count"));
      c.require(ft.min_set == ms.min_arcs, fail("bottom dots vs early arcs"));
      c.require(ft.lazy == marks, fail("lazy columns vs marks"));
      c.require(set_intersection(ft.des_set(), ft.lazy) ==
                    set_intersection(ms.rne, marks),
                fail("lazy descents"));
      c.require(set_intersection(ft.asc_set(), ft.lazy) ==
                    set_intersection(ms.rcr_single, marks),
                fail("lazy ascents"));
      c.require(set_intersection(ft.rep_set(), ft.lazy) ==
                    set_intersection(ms.lrcr, marks),
                fail("lazy repeats"));
      if (!c.ok()) break;
    }
  }
  return c.finish();
}

CheckReport check_g_transfer(int n_max) {
  Checker c("g_transfer", n_max);
  for (int len = 1; len <= n_max && c.ok(); ++len) {
    for (const Filling& t : staircase_column_positive_fillings(len)) {
      const Filling rho = staircase_to_enriched(t);
      const auto fail = [&](const std::string& what) {
        return [&, what] {
          return describe(t) + ": " + what + " (image " + describe(rho) + ")";
        };
      };
      c.require(enriched_to_staircase(rho) == t, fail("round trip"));
      if (!c.ok()) break;
      const FillStats ft = fill_stats(t);
      const FillStats fr = fill_stats(rho);
      c.require(rho.shape().length() == len, fail("width"));
      c.require(rho.dot_count() == t.dot_count(), fail("dot count"));
      c.require(irreducible_components(t).size() ==
                    box_components(rho).size(),
                fail("components vs boxes"));
      c.require(ft.min_count() == fr.lmin_count, fail("bottom dots vs lmin"));
      c.require(ft.rmax_count == fr.rmax_count, fail("rmax transfer"));
      const Filling twisted = staircase_involution(t);
      const FillStats fw = fill_stats(twisted);
      c.require(staircase_involution(twisted) == t, fail("involution"));
      c.require(fw.min_count() == ft.rmax_count, fail("swap min"));
      c.require(fw.rmax_count == ft.min_count(), fail("swap rmax"));
      c.require(twisted.dot_count() == t.dot_count(),
                fail("involution dot count"));
      c.require(twisted.shape().length() == len, fail("involution width"));
      c.require(irreducible_components(twisted).size() ==
                    irreducible_components(t).size(),
                fail("involution components"));
      if (!c.ok()) break;
    }
  }
  return c.finish();
}

}  // namespace

CheckReport check_conjecture(int id, int n_max, int jobs) {
  if (id != 1 && id != 2) throw std::invalid_argument("unknown conjecture id");
  Checker c("conjecture" + std::to_string(id), n_max);
  const std::vector<std::string> match_schema =
      id == 1 ? std::vector<std::string>{"Lcr", "Rne", "Rcr"}
              : std::vector<std::string>{"Lcr_single", "LRcr", "Rne",
                                         "Rcr_single"};
  const std::vector<std::string> perm_schema =
      id == 1 ? std::vector<std::string>{"Ascbottom", "P_silly_plus",
                                         "Q_silly_plus"}
              : std::vector<std::string>{"Ascbottom_long", "R", "P", "Q"};
  for (int n = 1; n <= n_max && c.ok(); ++n) {
    const Distribution match_dist =
        make_distribution(Family::nlm_matchings, n, match_schema, jobs);
    const Distribution perm_dist =
        make_distribution(Family::perms, n, perm_schema, jobs);
    c.require(match_dist.counts == perm_dist.counts, [&, n] {
      for (const auto& [key, count] : match_dist.counts) {
        auto it = perm_dist.counts.find(key);
        if (it == perm_dist.counts.end() || it->second != count) {
          std::string joined;
          for (const auto& part : key) joined += "(" + part + ")";
          return "n=" + std::to_string(n) + " key " + joined +
                 ": matchings " + std::to_string(count) + ", permutations " +
                 std::to_string(it == perm_dist.counts.end() ? 0
                                                             : it->second);
        }
      }
      for (const auto& [key, count] : perm_dist.counts) {
        if (match_dist.counts.find(key) == match_dist.counts.end()) {
          std::string joined;
          for (const auto& part : key) joined += "(" + part + ")";
          return "n=" + std::to_string(n) + " key " + joined +
                 ": matchings 0, permutations " + std::to_string(count);
        }
      }
      return std::string("distributions differ");
    });
  }
  return c.finish();
}

CheckReport check_theorem(const std::string& id, int n_max, int jobs) {
  (void)jobs;  // theorem checks are fast enough single-threaded
  if (id == "zagier") return check_zagier(n_max);
  if (id == "main_xyz") return check_main_xyz(n_max);
  if (id == "main_sxy") return check_main_sxy(n_max);
  if (id == "conj20") return check_conj20(n_max);
  if (id == "conj21") return check_conj21(n_max);
  if (id == "leftcross") return check_leftcross(n_max);
  if (id == "ascbottom_nc") return check_ascbottom_nc(n_max);
  if (id == "sbij") return check_sbij(n_max);
  if (id == "ssillybij") return check_ssillybij(n_max);
  if (id == "nbij") return check_nbij(n_max);
  if (id == "g_transfer") return check_g_transfer(n_max);
  throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace combistat
