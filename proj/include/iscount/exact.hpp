#pragma once

#include <span>

#include "iscount/weighted_graph.hpp"

namespace iscount {

inline constexpr int kDefaultBruteForceCap = 30;

// Exhaustive evaluation of Z by subset enumeration in Gray-code order with
// incremental independence bookkeeping. Throws input_error if the graph has
// more than `cap` vertices. May use multiple threads; the result is exact
// and independent of the thread count.
Int brute_force_z(const WeightedGraph& wg, int cap = kDefaultBruteForceCap);

// Single-threaded reference implementation of brute_force_z.
Int brute_force_z_serial(const WeightedGraph& wg, int cap = kDefaultBruteForceCap);

// Z of a forest via per-tree dynamic programming (linear time up to big-int
// arithmetic). Throws precondition_error if the graph contains a cycle.
Int forest_z(const WeightedGraph& wg);

// Z via enumeration over subsets of a feedback set `y`: for each independent
// I subseteq y, multiply its weights by the forest evaluation of the graph
// minus y and minus the neighbourhood of I (at multiplier 1); the multiplier
// is applied once to the final sum. Throws precondition_error if G - y is
// not a forest, input_error if y is too large to enumerate.
Int exact_count(const WeightedGraph& wg, std::span<const int> y);

// Exact Z for arbitrary graphs by branching on a maximum-degree vertex with
// component splitting and forest short-circuiting. No vertex cap; intended
// for small graphs where exhaustive enumeration would be too slow.
Int exact_z(const WeightedGraph& wg);

}  // namespace iscount
