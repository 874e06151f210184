#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "combistat/statistics.hpp"

namespace combistat {

enum class Family { perms, nlm_matchings, all_matchings };
Family family_from_name(const std::string& name);  // perms | nlm | matchings

// Statistic registries. Lowercase names are counts; capitalized names are
// sets, serialized as comma-joined sorted integers.
const std::vector<std::string>& perm_stat_names();
const std::vector<std::string>& match_stat_names();
std::string perm_stat_value(const PermStats& st, const std::string& name);
std::string match_stat_value(const MatchStats& st, const std::string& name);

struct Distribution {
  int n = 0;
  std::vector<std::string> key_schema;
  std::map<std::vector<std::string>, std::uint64_t> counts;

  std::uint64_t total() const;
  std::string to_csv() const;   // header n,key,count; key parts joined by ';'
  std::string to_json() const;
};

// jobs <= 0 picks the hardware concurrency.
Distribution make_distribution(Family family, int n,
                               const std::vector<std::string>& schema,
                               int jobs = 0);

struct CheckReport {
  std::string check_id;
  int n_max = 0;
  bool verified = false;
  std::string witness;  // nonempty exactly when a counterexample was found
  double elapsed_seconds = 0.0;

  std::string to_json() const;  // omits elapsed to keep output reproducible
};

// id 1: (Lcr, Rne, Rcr) against (Ascbottom, P_silly+1, Q_silly+1);
// id 2: (Lcr', LRcr, Rne, Rcr') against (Ascbottom', R, P, Q).
// Verifies every size 1..n_max.
CheckReport check_conjecture(int id, int n_max, int jobs = 0);

// Known ids: sbij, ssillybij, nbij, conj20, main_xyz, main_sxy, conj21,
// zagier, leftcross, ascbottom_nc, g_transfer.
CheckReport check_theorem(const std::string& id, int n_max, int jobs = 0);

}  // namespace combistat
