#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iscount/basecase.hpp"
#include "iscount/potential.hpp"
#include "iscount/weighted_graph.hpp"

namespace iscount {

// How a recursive call resolved: branching on a degree->=11 vertex, a
// standard branch (|S| >= 3), an extended branch on z (|S| = 2), the
// bounded-connectivity base case, or an instance that reduction emptied.
enum class BranchKind { Deg11, StandardS3, ExtendedS2, Base, ReduceEmpty };

// Serialized tokens: deg11 | s3 | s2 | base | reduce-empty.
const char* to_token(BranchKind k);

// One record per recursive call. `vertex` is the vertex branched on (z for
// the extended branch); it is absent for base and reduce-empty records, as
// are the child potentials. Potentials are f+ values: pot_before is taken
// at the branch point (after reduction for the bounded-degree branches),
// pot_out / pot_in on the actual tree-removed children.
struct TraceEntry {
    int depth = 0;
    BranchKind kind = BranchKind::Base;
    std::optional<int> vertex;
    Rat pot_before;
    std::optional<Rat> pot_out;
    std::optional<Rat> pot_in;

    // "depth kind vertex pot_before pot_out pot_in", absent fields as "-".
    std::string to_line() const;
};

struct CountStats {
    long long calls = 0;      // recursive invocations
    long long prunes = 0;     // prune operations (inside reduction and branches)
    long long base_hits = 0;  // calls resolved by the base case
};

struct BranchTrace {
    std::vector<TraceEntry> entries;  // pre-order
    CountStats stats;
};

struct CountOptions {
    // Base-case instances at or below this size are evaluated exactly
    // instead of approximately; also bounds the exact shortcut inside the
    // approximate estimator, so 0 forces the full gadget reduction.
    int base_exact_threshold = 24;
    std::optional<int> saw_depth;  // truncation-depth override
    int c0 = 6;                    // truncation-depth coefficient
};

// The branch vertex for a reduced graph of maximum degree <= 10 containing
// a vertex of degree >= 6 and 2-degree >= 27: at average degree <= 5 the
// least such vertex, otherwise the least vertex maximizing the 2-degree
// among those of at least average degree (exact rational comparison).
// Precondition violations throw internal errors (they indicate caller bugs).
int pick_branch_vertex(const Graph& g);

// Branch-and-reduce evaluation of Z(wg) to relative error eps: branch on a
// degree->=11 vertex if one exists; otherwise reduce, fall to the base case
// when no vertex has degree >= 6 and 2-degree >= 27, and otherwise branch
// standardly (|S| >= 3) or on the extended decomposition's z (|S| = 2),
// pruning X+ from both children. Children are tree-removed; an empty child
// contributes its multiplier. The result is exact whenever no approximate
// base case fires; the returned epsilon echoes the budget. Requires wg
// non-empty and 1-balanced with no tree components and 0 < eps < 1 (input
// errors otherwise). The potential is used only for tracing; passing a
// trace sink requires p.validated. Deterministic; ties break to least id.
ApproxValue count(const WeightedGraph& wg, const Rat& eps, const PrePotential& p,
                  const CountOptions& opt = {}, BranchTrace* trace = nullptr);

// eps-approximation of the number of independent sets of g: wraps g with
// unit weights, removes tree components (after which a forest input is
// already resolved exactly), and runs count. The empty graph has exactly
// one independent set. A bipartite-mode potential requires g bipartite
// (checked by 2-coloring; input error otherwise).
ApproxValue approximate_independent_sets(const Graph& g, const Rat& eps, const PrePotential& p,
                                         const CountOptions& opt = {},
                                         BranchTrace* trace = nullptr);

}  // namespace iscount
