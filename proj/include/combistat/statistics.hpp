#pragma once

#include <optional>

#include "combistat/core.hpp"

namespace combistat {

// All set fields hold values (permutations) or arc/column indices (matchings,
// fillings). Counts are derived from set sizes unless noted.
struct PermStats {
  IndexSet asc;        // ascent-top values
  IndexSet des;        // right entries of descents; asc and des partition
                       // the values at positions 2..n
  IndexSet p;          // ascent tops whose predecessor value sits to the right
  IndexSet q;          // ascent tops whose predecessor value sits left of the
                       // entry before them
  IndexSet adjasc;     // short ascents (entry directly preceded by value-1)
  IndexSet asc_silly;  // (asc united with first entry) minus the maximum
  IndexSet p_silly;    // silly ascents with the successor value to the left
  IndexSet q_silly;    // silly ascents with the successor value to the right
  IndexSet rmin;       // right-to-left minima values
  IndexSet rmax;       // right-to-left maxima values
  IndexSet ascbottom;       // values directly followed by something larger
  IndexSet ascbottom_long;  // values followed by something larger than value+1
  int comp = 0;

  int asc_count() const { return static_cast<int>(asc.size()); }
  int des_count() const { return static_cast<int>(des.size()); }
  int p_count() const { return static_cast<int>(p.size()); }
  int q_count() const { return static_cast<int>(q.size()); }
  int adjasc_count() const { return static_cast<int>(adjasc.size()); }
  int p_silly_count() const { return static_cast<int>(p_silly.size()); }
  int q_silly_count() const { return static_cast<int>(q_silly.size()); }
  int rmin_count() const { return static_cast<int>(rmin.size()); }
  int rmax_count() const { return static_cast<int>(rmax.size()); }
};
PermStats perm_stats(const Permutation& p);

struct MatchStats {
  int n = 0;
  IndexSet radj;        // arcs whose closer extends a closer pair
  IndexSet ladj;        // arcs whose opener starts an opener pair
  IndexSet rne;         // nesting right adjacencies
  IndexSet rcr;         // crossing right adjacencies
  IndexSet lcr;         // crossing left adjacencies (left arc index)
  IndexSet lrcr;        // double crossings (right arc index)
  IndexSet rcr_single;  // rcr minus lrcr
  IndexSet lcr_single;  // lcr minus (lrcr - 1)
  IndexSet min_arcs;    // arcs opening before the first closer
  bool has_left_nesting = false;
  int comp = 0;

  int radj_count() const { return static_cast<int>(radj.size()); }
  int ladj_count() const { return static_cast<int>(ladj.size()); }
  int rne_count() const { return static_cast<int>(rne.size()); }
  int rcr_count() const { return static_cast<int>(rcr.size()); }
  int lcr_count() const { return static_cast<int>(lcr.size()); }
  int lrcr_count() const { return static_cast<int>(lrcr.size()); }
  int min_count() const { return static_cast<int>(min_arcs.size()); }
  // Interval count, defined through the adjacency relation.
  int inter_count() const { return n - radj_count(); }
};
MatchStats match_stats(const Matching& m);

struct FillStats {
  IndexSet lazy;     // columns equal in height to their left neighbour
  IndexSet min_set;  // columns with a dot on row 1
  IndexSet max_set;  // columns with a dot on their top cell
  int rmax_count = 0;  // dots strictly closer to the top boundary than every
                       // dot in a later column
  int lmin_count = 0;  // dots strictly left of every dot in a lower row
  bool column_strict = false;

  int min_count() const { return static_cast<int>(min_set.size()); }
  int max_count() const { return static_cast<int>(max_set.size()); }

  // Column-strict only; throw std::domain_error otherwise.
  const IndexSet& rmax_set() const;
  const IndexSet& des_set() const;
  const IndexSet& asc_set() const;
  const IndexSet& rep_set() const;
  int des_count() const { return static_cast<int>(des_set().size()); }
  int asc_count() const { return static_cast<int>(asc_set().size()); }
  int rep_count() const { return static_cast<int>(rep_set().size()); }

  std::optional<IndexSet> rmax_cols;
  std::optional<IndexSet> des_cols;
  std::optional<IndexSet> asc_cols;
  std::optional<IndexSet> rep_cols;
};
FillStats fill_stats(const Filling& f);

}  // namespace combistat
