#pragma once

#include <map>
#include <span>
#include <vector>

namespace iscount {

struct DegreeProfile {
    int degree = 0;
    long long two_degree = 0;  // sum of neighbor degrees
    int gamma2_size = 0;       // vertices at distance exactly 2
};

// Immutable undirected graph with stable positive vertex ids. Deletion never
// renumbers: derived subgraphs keep the original ids, so least-id tie-breaks
// are well defined along any chain of deletions.
class Graph {
public:
    Graph() = default;

    // Vertices 1..n plus the given edges (1-based endpoints).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    // Arbitrary id set plus edges between them.
    static Graph from_vertices_and_edges(const std::vector<int>& vertices,
                                         const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    long long num_edges() const { return m_; }
    bool empty() const { return adj_.empty(); }

    bool has_vertex(int v) const { return adj_.contains(v); }
    std::vector<int> vertices() const;  // sorted
    int max_vertex_id() const;          // 0 when empty

    // Gamma(v), sorted.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    long long two_degree(int v) const;
    DegreeProfile degree_profile(int v) const;
    int max_degree() const;
    int min_degree() const;

    // External neighborhood Gamma(S) = union of Gamma(v) minus S. `s` must be
    // a subset of the vertices.
    std::vector<int> gamma_set(std::span<const int> s) const;
    // {v} with Gamma(v), sorted.
    std::vector<int> closed_neighborhood(int v) const;

    bool has_edge(int u, int v) const;

    // G - s and G[s]; ids preserved.
    Graph removed(std::span<const int> s) const;
    Graph induced(std::span<const int> s) const;
    Graph removed_closed(int v) const;  // G - v - Gamma(v)

    // Connected components as sorted vertex lists, ordered by least element.
    std::vector<std::vector<int>> components() const;
    bool connected() const { return adj_.empty() || components().size() == 1; }
    std::vector<int> component_of(int v) const;

    bool is_forest() const;
    bool is_bipartite() const;  // 2-colorable (empty graph qualifies)
    // Empty, or some closed neighborhood deletion leaves a forest (every
    // forest qualifies).
    bool is_near_forest() const;
    // Minimum degree >= 2 and every vertex of degree >= 6 has 2-degree <= 26.
    bool in_family_d() const;

    bool operator==(const Graph& other) const = default;

private:
    std::map<int, std::vector<int>> adj_;  // vertex -> sorted neighbors
    long long m_ = 0;
};

// Sorted-vector set helpers used throughout the library (all inputs sorted).
std::vector<int> set_union_sorted(std::span<const int> a, std::span<const int> b);
std::vector<int> set_difference_sorted(std::span<const int> a, std::span<const int> b);
std::vector<int> set_intersection_sorted(std::span<const int> a, std::span<const int> b);
bool contains_sorted(std::span<const int> a, int v);

}  // namespace iscount
