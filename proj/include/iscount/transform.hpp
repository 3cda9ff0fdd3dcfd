#pragma once

#include <span>

#include "iscount/weighted_graph.hpp"

namespace iscount {

// Removes `s` from the graph, folding its Z-contribution into the instance:
// if s has no external neighbour, its Z (including the multiplier) becomes
// the new multiplier; if it has exactly one external neighbour v, the
// weights of v absorb the conditional sums over s. More than one external
// neighbour is a precondition violation. Z is preserved exactly.
WeightedGraph prune(const WeightedGraph& wg, std::span<const int> s);

// Removes every tree component, multiplying its Z (at multiplier 1) into
// the instance multiplier. Z is preserved exactly; the result has no tree
// components.
WeightedGraph tree_removal(const WeightedGraph& wg);

// Repeatedly prunes near-forest components of G and of G - v (components of
// G in least-vertex order first, then v ascending with components of G - v
// in least-vertex order; first hit each round) until none remains. The
// result may be empty. Throws precondition_error on empty input. If
// prune_count is non-null it is incremented once per prune performed.
WeightedGraph reduce(const WeightedGraph& wg, long long* prune_count = nullptr);

}  // namespace iscount
