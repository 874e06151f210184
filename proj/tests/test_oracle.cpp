#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "combistat/core.hpp"
#include "combistat/oracle.hpp"
#include "combistat/statistics.hpp"

using namespace combistat;

namespace {

bool registry_has(const std::vector<std::string>& names,
                  const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

TEST_CASE("family names resolve") {
  CHECK(family_from_name("perms") == Family::perms);
  CHECK(family_from_name("nlm") == Family::nlm_matchings);
  CHECK(family_from_name("matchings") == Family::all_matchings);
  CHECK_THROWS_AS(family_from_name("words"), std::invalid_argument);
}

TEST_CASE("statistic registries evaluate by name") {
  CHECK(registry_has(perm_stat_names(), "Asc"));
  CHECK(registry_has(perm_stat_names(), "p_silly"));
  CHECK(registry_has(match_stat_names(), "Rcr_single"));
  CHECK(registry_has(match_stat_names(), "inter"));

  const PermStats ps = perm_stats(Permutation({7, 3, 5, 6, 4, 1, 8, 9, 2}));
  CHECK(perm_stat_value(ps, "Asc") == "5,6,8,9");
  CHECK(perm_stat_value(ps, "P") == "5");
  CHECK(perm_stat_value(ps, "Ascbottom_long") == "1,3");
  CHECK(perm_stat_value(ps, "asc") == "4");
  CHECK(perm_stat_value(ps, "des") == "4");
  CHECK(perm_stat_value(ps, "comp") == "1");
  CHECK_THROWS_AS(perm_stat_value(ps, "Frob"), std::invalid_argument);

  const MatchStats ms = match_stats(Matching::from_pairs({{1, 6},
                                                          {7, 9},
                                                          {2, 10},
                                                          {8, 12},
                                                          {3, 13},
                                                          {4, 14},
                                                          {5, 16},
                                                          {11, 17},
                                                          {15, 18}}));
  CHECK(match_stat_value(ms, "Radj") == "3,5,6,8,9");
  CHECK(match_stat_value(ms, "Rne") == "3,5");
  CHECK(match_stat_value(ms, "lcr_single") == "4");
  CHECK(match_stat_value(ms, "min") == "5");
  CHECK(match_stat_value(ms, "inter") == "4");
  CHECK_THROWS_AS(match_stat_value(ms, "Frob"), std::invalid_argument);
}

TEST_CASE("distributions tally objects by key") {
  const Distribution d = make_distribution(Family::perms, 2, {"p_silly"});
  CHECK(d.n == 2);
  REQUIRE(d.key_schema == std::vector<std::string>{"p_silly"});
  REQUIRE(d.counts.size() == 1);
  CHECK(d.counts.at({"0"}) == 2);
  CHECK(d.total() == 2);
  CHECK(d.to_csv() == "n,key,count\n2,\"0\",2\n");

  const auto doc = nlohmann::json::parse(d.to_json());
  CHECK(doc["n"] == 2);
  CHECK(doc["schema"] == std::vector<std::string>{"p_silly"});
  REQUIRE(doc["counts"].size() == 1);
  CHECK(doc["counts"][0]["key"] == std::vector<std::string>{"0"});
  CHECK(doc["counts"][0]["count"] == 2);
}

TEST_CASE("distribution is independent of the worker count") {
  const Distribution serial =
      make_distribution(Family::nlm_matchings, 5, {"rne", "Rcr"}, 1);
  const Distribution parallel =
      make_distribution(Family::nlm_matchings, 5, {"rne", "Rcr"}, 3);
  CHECK(serial.counts == parallel.counts);
  CHECK(serial.total() == 120);

  const Distribution all =
      make_distribution(Family::all_matchings, 4, {"radj"}, 2);
  CHECK(all.total() == 105);
}

TEST_CASE("theorem checks verify at small sizes") {
  const std::vector<std::string> ids = {
      "sbij",   "ssillybij", "nbij",     "conj20",       "main_xyz",
      "main_sxy", "conj21",  "zagier",   "leftcross",    "ascbottom_nc",
      "g_transfer"};
  for (const std::string& id : ids) {
    CAPTURE(id);
    const CheckReport report = check_theorem(id, 3);
    CHECK(report.check_id == id);
    CHECK(report.n_max == 3);
    CHECK(report.verified);
    CHECK(report.witness.empty());
    CHECK(report.elapsed_seconds >= 0.0);
  }
  CHECK_THROWS_AS(check_theorem("frobenius", 3), std::invalid_argument);
}

TEST_CASE("conjecture checks verify at small sizes") {
  for (int id : {1, 2}) {
    CAPTURE(id);
    const CheckReport report = check_conjecture(id, 4);
    CHECK(report.verified);
    CHECK(report.witness.empty());
  }
  CHECK_THROWS_AS(check_conjecture(3, 2), std::invalid_argument);
}

TEST_CASE("report serialization is stable") {
  const CheckReport a = check_theorem("main_xyz", 2);
  const CheckReport b = check_theorem("main_xyz", 2);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().find("witness") == std::string::npos);
  CHECK(a.to_json().find("\"status\": \"verified\"") != std::string::npos);

  CheckReport failing;
  failing.check_id = "demo";
  failing.n_max = 1;
  failing.verified = false;
  failing.witness = "object [2 1]";
  const auto doc = nlohmann::json::parse(failing.to_json());
  CHECK(doc["status"] == "counterexample");
  CHECK(doc["witness"] == "object [2 1]");
}
