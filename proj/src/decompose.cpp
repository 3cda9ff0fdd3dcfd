#include "iscount/decompose.hpp"

#include <algorithm>
#include <string>

#include "iscount/errors.hpp"

namespace iscount {

StandardDecomposition standard_decomposition(const Graph& g, int v) {
    if (!g.has_vertex(v))
        throw precondition_error("standard_decomposition: vertex " + std::to_string(v) +
                                 " is not in the graph");
    if (!g.connected())
        throw precondition_error("standard_decomposition: input graph is disconnected");

    StandardDecomposition sd;
    sd.v = v;
    sd.gamma_v = g.neighbors(v);

    Graph rest = g.removed_closed(v);
    std::vector<int> non_tree_union;
    sd.x_set = g.closed_neighborhood(v);
    for (const auto& comp : rest.components()) {
        if (rest.induced(comp).is_forest()) {  // connected, hence a tree
            sd.tree_components.push_back(comp);
            sd.x_set = set_union_sorted(sd.x_set, comp);
        } else {
            sd.non_tree_components.push_back(comp);
            non_tree_union = set_union_sorted(non_tree_union, comp);
        }
    }
    std::vector<int> gamma2 = g.gamma_set(g.closed_neighborhood(v));
    sd.s_set = set_intersection_sorted(non_tree_union, gamma2);
    return sd;
}

ExtendedDecomposition extended_decomposition(const Graph& g, int v) {
    ExtendedDecomposition ed;
    ed.base = standard_decomposition(g, v);
    if (ed.base.s_set.size() != 2)
        throw precondition_error("extended_decomposition: |S| = " +
                                 std::to_string(ed.base.s_set.size()) +
                                 ", but exactly 2 is required");
    ed.x = ed.base.s_set[0];
    ed.y = ed.base.s_set[1];

    Graph gx = g.removed(ed.base.x_set);

    if (gx.degree(ed.y) >= 2) {
        ed.z = ed.y;
        ed.path = {ed.y};
        ed.x_plus = ed.base.x_set;
        ed.h_vertices = set_difference_sorted(g.vertices(), ed.x_plus);
        return ed;
    }

    // Follow the unique chain of degree-2 vertices from y until the first
    // vertex of G - X with degree > 2.
    std::vector<int> visited{ed.y};
    ed.path = {ed.y};
    int prev = -1, cur = ed.y;
    for (;;) {
        int next = -1;
        for (int nb : gx.neighbors(cur))
            if (nb != prev) next = nb;
        if (next == -1)
            throw precondition_error(
                "extended_decomposition: chain from y dead-ends; graph is not reduced");
        if (std::find(visited.begin(), visited.end(), next) != visited.end())
            throw precondition_error(
                "extended_decomposition: chain from y closes a cycle; graph is not reduced");
        visited.push_back(next);
        ed.path.push_back(next);
        prev = cur;
        cur = next;
        if (gx.degree(cur) > 2) break;
        if (gx.degree(cur) < 2)
            throw precondition_error(
                "extended_decomposition: chain from y dead-ends; graph is not reduced");
    }
    ed.z = cur;
    if (std::find(ed.path.begin(), ed.path.end(), ed.x) != ed.path.end())
        throw precondition_error(
            "extended_decomposition: x lies on the chain from y; graph is not reduced");

    std::vector<int> path_sorted = ed.path;
    std::sort(path_sorted.begin(), path_sorted.end());
    ed.x_plus = set_union_sorted(ed.base.x_set, path_sorted);
    ed.x_plus = set_difference_sorted(ed.x_plus, std::vector<int>{ed.z});
    ed.h_vertices = set_difference_sorted(g.vertices(), ed.x_plus);
    return ed;
}

}  // namespace iscount
