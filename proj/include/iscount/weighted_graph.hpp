#pragma once

#include <map>
#include <span>
#include <utility>

#include "iscount/errors.hpp"
#include "iscount/graph.hpp"
#include "iscount/rational.hpp"

namespace iscount {

// A graph with per-vertex activity weights w+ / w- (strictly positive
// integers) and a global multiplier W (`scale`). The weight maps may carry
// entries for vertices no longer present; only current vertices matter.
struct WeightedGraph {
    Graph g;
    std::map<int, Int> wp, wm;
    Int scale{1};

    static WeightedGraph unit(Graph graph, Int w = 1) {
        WeightedGraph wg;
        for (int v : graph.vertices()) {
            wg.wp[v] = 1;
            wg.wm[v] = 1;
        }
        wg.g = std::move(graph);
        wg.scale = std::move(w);
        return wg;
    }

    const Int& wplus(int v) const { return weight_at(wp, v, "w+"); }
    const Int& wminus(int v) const { return weight_at(wm, v, "w-"); }

    Int wplus_product(std::span<const int> s) const {
        Int p = 1;
        for (int v : s) p *= wplus(v);
        return p;
    }
    Int wminus_product(std::span<const int> s) const {
        Int p = 1;
        for (int v : s) p *= wminus(v);
        return p;
    }

    // Same weights; graph minus `s`; scale as given (defaults to this scale).
    WeightedGraph removed(std::span<const int> s) const {
        WeightedGraph out{g.removed(s), wp, wm, scale};
        return out;
    }
    WeightedGraph induced(std::span<const int> s, Int new_scale = 1) const {
        WeightedGraph out{g.induced(s), wp, wm, std::move(new_scale)};
        return out;
    }

    bool is_lambda_balanced(const Rat& lambda) const {
        for (int v : g.vertices())
            if (Rat(wplus(v)) > lambda * Rat(wminus(v))) return false;
        return true;
    }
    bool is_one_balanced() const { return is_lambda_balanced(1); }

    // Checks the type invariants: weights present and strictly positive on
    // every vertex, positive multiplier.
    void check() const {
        if (scale <= 0) throw precondition_error("WeightedGraph: non-positive multiplier");
        for (int v : g.vertices())
            if (wplus(v) <= 0 || wminus(v) <= 0)
                throw precondition_error("WeightedGraph: non-positive weight at vertex " +
                                         std::to_string(v));
    }

private:
    static const Int& weight_at(const std::map<int, Int>& m, int v, const char* which) {
        auto it = m.find(v);
        if (it == m.end())
            throw precondition_error(std::string("WeightedGraph: missing ") + which +
                                     " weight for vertex " + std::to_string(v));
        return it->second;
    }
};

}  // namespace iscount
