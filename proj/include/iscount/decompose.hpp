#pragma once

#include <vector>

#include "iscount/graph.hpp"

namespace iscount {

// Around a branch vertex v: Γ(v), the tree/non-tree components of
// G - v - Γ(v), the second-neighborhood anchor set S, and the near-forest
// region X = {v} ∪ Γ(v) ∪ (tree components).
struct StandardDecomposition {
    int v = 0;
    std::vector<int> gamma_v;
    std::vector<int> s_set;  // (union of non-tree components) ∩ Γ²(v)
    std::vector<int> x_set;  // {v} ∪ Γ(v) ∪ union of tree components
    std::vector<std::vector<int>> non_tree_components;
    std::vector<std::vector<int>> tree_components;
};

// For |S| = {x, y} with x < y: the chain from y to the first vertex z of
// G - X with degree > 2 (z = y when y itself has degree ≥ 2 there), and the
// enlarged near-forest region X⁺ = X ∪ V(P) ∖ {z}.
struct ExtendedDecomposition {
    StandardDecomposition base;
    int x = 0, y = 0, z = 0;
    std::vector<int> path;        // y, ..., z
    std::vector<int> x_plus;      // X ∪ V(path) ∖ {z}
    std::vector<int> h_vertices;  // V(H) where H = G - X⁺ (z has degree ≥ 2 in H)
};

// Requires g connected and v ∈ V(g).
StandardDecomposition standard_decomposition(const Graph& g, int v);

// Requires g connected with |S| = 2 for the decomposition from v, and a
// well-defined chain from y (guaranteed when g is reduced). Throws
// precondition_error when |S| ≠ 2 or the chain dead-ends, closes a cycle,
// or runs into x — all impossible on reduced inputs.
ExtendedDecomposition extended_decomposition(const Graph& g, int v);

}  // namespace iscount
