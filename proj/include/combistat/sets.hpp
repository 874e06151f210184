#pragma once

#include <string>
#include <vector>

namespace combistat {

// Sorted ascending, duplicate-free vector of 1-based indices or values.
using IndexSet = std::vector<int>;

IndexSet make_set(std::vector<int> values);
bool set_contains(const IndexSet& s, int v);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
IndexSet set_shifted(const IndexSet& s, int delta);
bool sets_disjoint(const IndexSet& a, const IndexSet& b);

// "1,4,7"; empty set -> "".
std::string set_to_string(const IndexSet& s);

}  // namespace combistat
