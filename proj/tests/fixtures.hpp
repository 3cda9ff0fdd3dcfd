#pragma once

// Hand-built named graphs and reducedness checkers shared by several test
// binaries.

#include <cstdint>
#include <vector>

#include <iscount/graph.hpp>

namespace fixtures {

using iscount::Graph;

// Three triangles joined into a ring by paths of length three.  The cycles
// are pairwise at distance 3, so deleting any vertex plus any closed
// neighborhood always leaves at least one triangle intact.  This is one of
// the smallest graphs on which no near-forest region has a single external
// neighbor, i.e. it survives reduction untouched.
inline Graph triangle_ring() {
    return Graph::from_edges(15, {{1, 2},   {1, 3},   {2, 3},    // triangle A
                                  {4, 5},   {4, 6},   {5, 6},    // triangle B
                                  {7, 8},   {7, 9},   {8, 9},    // triangle C
                                  {1, 10},  {10, 11}, {11, 4},   // A -- B
                                  {5, 12},  {12, 13}, {13, 7},   // B -- C
                                  {8, 14},  {14, 15}, {15, 2}}); // C -- A
}

// The Paley graph on 13 vertices: ids 1..13 stand for residues 0..12, with
// an edge whenever the difference is a nonzero quadratic residue mod 13.
// Six-regular and highly symmetric; removing any vertex and any closed
// neighborhood leaves a cycle, so it also survives reduction untouched.
inline Graph paley13() {
    const bool qr[13] = {false, true, false, true, true,  false, false,
                         false, false, true, true,  false, true};
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < 13; ++r)
        for (int s = r + 1; s < 13; ++s)
            if (qr[(s - r) % 13]) e.push_back({r + 1, s + 1});
    return Graph::from_edges(13, e);
}

// The icosahedron.  Ids 1 and 12 are antipodal; 2..6 ring around 1, 7..11
// ring around 12, with 2..6 meshed to 7..11.  Deleting any closed
// neighborhood leaves a wheel, and deleting one more vertex still leaves a
// triangle or the rim cycle, so it survives reduction untouched.
inline Graph icosahedron() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        int a = 2 + i, an = 2 + (i + 1) % 5;
        int b = 7 + i, bn = 7 + (i + 1) % 5;
        e.push_back({1, a});
        e.push_back({12, b});
        e.push_back({a, an});
        e.push_back({b, bn});
        e.push_back({a, b});
        e.push_back({a, bn});
    }
    return Graph::from_edges(12, e);
}

// Definitional reducedness check: no non-empty vertex subset spans a
// near-forest with at most one external neighbor.  Exponential in the vertex
// count; intended for graphs of at most ~15 vertices.
inline bool is_reduced_exhaustive(const Graph& g) {
    std::vector<int> vs = g.vertices();
    int n = static_cast<int>(vs.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) s.push_back(vs[i]);
        if (g.induced(s).is_near_forest() && g.gamma_set(s).size() <= 1) return false;
    }
    return true;
}

// Polynomial-time equivalent of the definitional check.  A subset with at
// most one external neighbor w is a union of components of G - w (or of G
// itself), and a union of components is a near-forest exactly when one of
// them is: every other component would have to be a forest, which is itself
// a near-forest.  So it suffices to scan single components.
inline bool is_reduced_components(const Graph& g) {
    for (const auto& comp : g.components())
        if (g.induced(comp).is_near_forest()) return false;
    for (int w : g.vertices()) {
        Graph rest = g.removed(std::vector<int>{w});
        for (const auto& comp : rest.components())
            if (rest.induced(comp).is_near_forest()) return false;
    }
    return true;
}

}  // namespace fixtures
