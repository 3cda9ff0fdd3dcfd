#include "iscount/transform.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "iscount/errors.hpp"
#include "iscount/exact.hpp"

namespace iscount {

namespace {

// Exact Z of a small instance, choosing the cheapest exact routine: forest
// DP when possible, feedback-set enumeration over a closed neighbourhood
// when one leaves a forest, general exact branching otherwise.
Int internal_z(const WeightedGraph& sub) {
    if (sub.g.is_forest()) return forest_z(sub);
    for (int v : sub.g.vertices())
        if (sub.g.removed_closed(v).is_forest())
            return exact_count(sub, sub.g.closed_neighborhood(v));
    return exact_z(sub);
}

}  // namespace

WeightedGraph prune(const WeightedGraph& wg, std::span<const int> s) {
    wg.check();
    std::vector<int> sv(s.begin(), s.end());
    std::sort(sv.begin(), sv.end());
    sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
    for (int v : sv)
        if (!wg.g.has_vertex(v))
            throw precondition_error("prune: s contains unknown vertex " + std::to_string(v));

    std::vector<int> gamma = wg.g.gamma_set(sv);
    if (gamma.size() >= 2)
        throw precondition_error("prune: s has " + std::to_string(gamma.size()) +
                                 " external neighbors; at most one is allowed");

    if (gamma.empty()) {
        Int z = internal_z(wg.induced(sv, wg.scale));
        WeightedGraph out = wg.removed(sv);
        out.scale = std::move(z);
        return out;
    }

    int v = gamma[0];
    std::vector<int> s_adjacent = set_intersection_sorted(sv, wg.g.neighbors(v));
    std::vector<int> s_far = set_difference_sorted(sv, wg.g.neighbors(v));
    Int new_wp = wg.wplus(v) * wg.wminus_product(s_adjacent) * internal_z(wg.induced(s_far, 1));
    Int new_wm = wg.wminus(v) * internal_z(wg.induced(sv, 1));

    WeightedGraph out = wg.removed(sv);
    out.wp[v] = std::move(new_wp);
    out.wm[v] = std::move(new_wm);
    return out;
}

WeightedGraph tree_removal(const WeightedGraph& wg) {
    wg.check();
    Int w = wg.scale;
    std::vector<int> doomed;
    for (const auto& comp : wg.g.components()) {
        Graph sub = wg.g.induced(comp);
        if (sub.is_forest()) {  // a connected forest is a tree
            w *= forest_z(wg.induced(comp, 1));
            doomed.insert(doomed.end(), comp.begin(), comp.end());
        }
    }
    std::sort(doomed.begin(), doomed.end());
    WeightedGraph out = wg.removed(doomed);
    out.scale = std::move(w);
    return out;
}

WeightedGraph reduce(const WeightedGraph& wg, long long* prune_count) {
    wg.check();
    if (wg.g.empty()) throw precondition_error("reduce: empty input graph");

    WeightedGraph cur = wg;
    while (!cur.g.empty()) {
        bool pruned = false;
        for (const auto& comp : cur.g.components()) {
            if (cur.g.induced(comp).is_near_forest()) {
                cur = prune(cur, comp);
                pruned = true;
                break;
            }
        }

        if (!pruned) {
            for (int v : cur.g.vertices()) {
                Graph minus = cur.g.removed(std::vector<int>{v});
                for (const auto& comp : minus.components()) {
                    if (cur.g.induced(comp).is_near_forest()) {
                        cur = prune(cur, comp);
                        pruned = true;
                        break;
                    }
                }
                if (pruned) break;
            }
        }

        if (!pruned) break;
        if (prune_count) ++*prune_count;
    }
    return cur;
}

}  // namespace iscount
