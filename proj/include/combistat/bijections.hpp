#pragma once

#include "combistat/core.hpp"

namespace combistat {

// Flat column-strict fillings <-> barred permutations (block construction).
BarredPermutation flat_to_barred(const Filling& f);
Filling barred_to_flat(const BarredPermutation& p);

// Flat column-strict fillings <-> hatted permutations.
HattedPermutation flat_to_hatted(const Filling& f);
Filling hatted_to_flat(const HattedPermutation& p);

// Left-nesting-free matchings <-> flat column-strict row-positive fillings
// (border labelling: the j-th vertical border edge is the j-th opener, the
// i-th horizontal border edge is the i-th closer).
Filling matching_to_flat(const Matching& m);
Matching flat_to_matching(const Filling& f);

// Flat column-strict fillings <-> marked matchings.
MarkedMatching flat_to_marked(const Filling& f);
Filling marked_to_flat(const MarkedMatching& m);

// Merge equal-height column groups (dots keep their rows). Requires that no
// two dots collide; row-strict input always qualifies.
Filling steepen(const Filling& f);
// Merge equal-length row groups (dots keep their columns); column-strict input.
Filling flatten(const Filling& f);

// Column-positive staircase fillings <-> enriched permutation fillings.
Filling staircase_to_enriched(const Filling& f);
Filling enriched_to_staircase(const Filling& f);

// Square-shape reflection (i, j) -> (len+1-j, len+1-i).
Filling transpose_square(const Filling& f);
// Involution on column-positive staircase fillings swapping the bottom-row
// dot count with the right-upper dot count.
Filling staircase_involution(const Filling& f);

// Left-nesting-free matchings -> permutations, carrying left crossings to
// ascent bottoms.
Permutation left_crossing_permutation(const Matching& m);

}  // namespace combistat
