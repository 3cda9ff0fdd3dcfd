#pragma once

#include <map>
#include <optional>
#include <vector>

#include "iscount/weighted_graph.hpp"

namespace iscount {

// An estimate together with the relative-error budget it was produced for:
// (1 - epsilon) Z <= value <= (1 + epsilon) Z.
struct ApproxValue {
    Rat value;
    Rat epsilon;
};

// vertex id -> multiset of star leaf-counts t (gadget descriptions).
using WeightMap = std::map<int, std::vector<int>>;

// Base-b expansion of the weight ratios x_v = lambda * w-(v) / w+(v) in the
// mixed bases Lambda_t = 1 + lambda (1 + lambda)^{-t}, t = 0..n.
struct GadgetDigits {
    int digit_count = 0;  // digits are indexed t = 0..digit_count
    std::map<int, std::vector<long long>> digits;
    std::map<int, Rat> residual;  // x_v after all divisions; in [1, Lambda_n)
};

struct ApproxOptions {
    int uni_exact_threshold = 24;    // exact evaluation at or below this size
    std::optional<int> saw_depth;    // fixed SAW truncation depth override
    int c0 = 6;                      // depth coefficient: L = ceil(c0 ln(n/eps))
};

// Digit loop: for each vertex, a_{t,v} = floor(log_{Lambda_t} x_v) with
// x_v updated by exact division, t ascending from 0 to n. Requires wg
// lambda-balanced (so x_v >= 1).
GadgetDigits compute_digits(const Rat& lambda, const WeightedGraph& wg, int n);

// For each v and each t in phi(v), attaches a fresh star with t leaves by an
// edge from its center to v. Fresh ids are assigned sequentially above the
// host's maximum id, vertices ascending, leaf-counts ascending per vertex.
Graph realize_weight_map(const Graph& g, const WeightMap& phi);

// Membership of phi in Phi_y(g): sum_{t in phi(v)} (t+1) <= y |V|^2 for all v.
bool in_phi_y(const Graph& g, const WeightMap& phi, int y);

// Exact counts of simple paths from v of each length 1..max_depth.
std::vector<long long> saw_tree_paths(const Graph& g, int v, int max_depth);

// Univariate hardcore estimator: exact at or below the size threshold,
// otherwise the telescoped vertex-marginal product with the self-avoiding-
// walk-tree recursion truncated at depth L (forest remainders evaluated
// exactly). All arithmetic is exact rational; the result is deterministic.
ApproxValue approx_z_uni(const Graph& g, const Rat& lambda, const Rat& eps,
                         const ApproxOptions& opt = {});

// The gadget reduction: brute force when eps <= 3 n lambda (1+lambda)^{-n};
// otherwise filter low-ratio vertices into the multiplier, expand the weight
// ratios into star gadgets, estimate the univariate instance at eps/3, and
// rescale. Requires wg non-empty and lambda-balanced.
ApproxValue approx_z(const WeightedGraph& wg, const Rat& eps, const Rat& lambda,
                     const ApproxOptions& opt = {});

// approx_z at lambda = 1 for 1-balanced instances whose graph lies in the
// bounded-connectivity base family (min degree >= 2; degree >= 6 implies
// 2-degree <= 26). Certifies once that kappa = 4141/1000 is subcritical.
ApproxValue base_count(const WeightedGraph& wg, const Rat& eps, const ApproxOptions& opt = {});

// Unweighted FPTAS: strips degree-<2 vertices one at a time (least id) via
// prune, then base_count on the remainder (exact when everything strips).
// Requires every degree->=6 vertex of g to have 2-degree <= 26.
ApproxValue fptas_unweighted(const Graph& g, const Rat& eps, const ApproxOptions& opt = {});

}  // namespace iscount
