#pragma once

#include "mcgauge/trees.hpp"

#include <set>
#include <string>

namespace mcgauge::testing {

/// Linear extensions of the vertex poset, by trying every vertex order.
long brute_monotone(const RootedTree& tree);

/// Encodings of all trees with n vertices and arity <= arity_cap, obtained by
/// building every parent array and xi assignment, canonicalizing and
/// filtering by arity.
std::set<std::string> generate_and_filter(int n, int arity_cap);

} // namespace mcgauge::testing
