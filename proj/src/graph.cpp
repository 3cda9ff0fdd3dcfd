#include "iscount/graph.hpp"

#include <algorithm>
#include <string>

#include "iscount/errors.hpp"

namespace iscount {

namespace {

void insert_edge(std::map<int, std::vector<int>>& adj, int u, int v) {
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    auto& nu = adj.at(u);
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw input_error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    nu.insert(it, v);
    auto& nv = adj.at(v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw input_error("negative vertex count");
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    return from_vertices_and_edges(vs, edges);
}

Graph Graph::from_vertices_and_edges(const std::vector<int>& vertices,
                                     const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    for (int v : vertices) {
        if (v <= 0) throw input_error("vertex ids must be positive, got " + std::to_string(v));
        if (!g.adj_.emplace(v, std::vector<int>{}).second)
            throw input_error("duplicate vertex id " + std::to_string(v));
    }
    for (auto [u, v] : edges) {
        if (!g.adj_.contains(u) || !g.adj_.contains(v))
            throw input_error("edge endpoint outside vertex set: {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
        insert_edge(g.adj_, u, v);
    }
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> vs;
    vs.reserve(adj_.size());
    for (const auto& [v, _] : adj_) vs.push_back(v);
    return vs;
}

int Graph::max_vertex_id() const { return adj_.empty() ? 0 : adj_.rbegin()->first; }

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw input_error("unknown vertex id " + std::to_string(v));
    return it->second;
}

long long Graph::two_degree(int v) const {
    long long s = 0;
    for (int w : neighbors(v)) s += degree(w);
    return s;
}

DegreeProfile Graph::degree_profile(int v) const {
    DegreeProfile p;
    const auto& nb = neighbors(v);
    p.degree = static_cast<int>(nb.size());
    std::vector<int> dist2;
    for (int w : nb) {
        p.two_degree += degree(w);
        for (int x : neighbors(w))
            if (x != v && !contains_sorted(nb, x)) dist2.push_back(x);
    }
    std::sort(dist2.begin(), dist2.end());
    dist2.erase(std::unique(dist2.begin(), dist2.end()), dist2.end());
    p.gamma2_size = static_cast<int>(dist2.size());
    return p;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [v, nb] : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = num_vertices();
    for (const auto& [v, nb] : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<int> Graph::gamma_set(std::span<const int> s) const {
    std::vector<int> out;
    for (int v : s) {
        if (!has_vertex(v)) throw input_error("gamma_set: unknown vertex " + std::to_string(v));
        for (int w : neighbors(v))
            if (!contains_sorted(s, w)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

bool Graph::has_edge(int u, int v) const { return contains_sorted(neighbors(u), v); }

Graph Graph::removed(std::span<const int> s) const {
    Graph g;
    long long m = 0;
    for (const auto& [v, nb] : adj_) {
        if (contains_sorted(s, v)) continue;
        auto& out = g.adj_[v];
        for (int w : nb)
            if (!contains_sorted(s, w)) {
                out.push_back(w);
                ++m;
            }
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::induced(std::span<const int> s) const {
    Graph g;
    long long m = 0;
    for (int v : s) {
        auto& out = g.adj_[v];
        for (int w : neighbors(v))
            if (contains_sorted(s, w)) {
                out.push_back(w);
                ++m;
            }
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::removed_closed(int v) const { return removed(closed_neighborhood(v)); }

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::map<int, bool> seen;
    for (const auto& [start, _] : adj_) {
        if (seen[start]) continue;
        std::vector<int> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // map iteration starts components at their least unvisited vertex, so the
    // sequence is already ordered by least element
    return comps;
}

std::vector<int> Graph::component_of(int v) const {
    if (!has_vertex(v)) throw input_error("component_of: unknown vertex " + std::to_string(v));
    std::vector<int> comp, stack{v};
    std::map<int, bool> seen{{v, true}};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : neighbors(u))
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

bool Graph::is_forest() const {
    // acyclic iff every component has |E| = |V| - 1; equivalently m = n - #components
    return m_ == num_vertices() - static_cast<long long>(components().size());
}

bool Graph::is_bipartite() const {
    std::map<int, int> color;
    for (const auto& [start, _] : adj_) {
        if (color.count(start)) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : neighbors(u)) {
                auto it = color.find(w);
                if (it == color.end()) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                } else if (it->second == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Graph::is_near_forest() const {
    if (adj_.empty()) return true;
    for (const auto& [v, _] : adj_)
        if (removed_closed(v).is_forest()) return true;
    return false;
}

bool Graph::in_family_d() const {
    if (min_degree() < 2) return false;
    for (const auto& [v, nb] : adj_)
        if (nb.size() >= 6 && two_degree(v) > 26) return false;
    return true;
}

std::vector<int> set_union_sorted(std::span<const int> a, std::span<const int> b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_difference_sorted(std::span<const int> a, std::span<const int> b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersection_sorted(std::span<const int> a, std::span<const int> b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains_sorted(std::span<const int> a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

}  // namespace iscount
