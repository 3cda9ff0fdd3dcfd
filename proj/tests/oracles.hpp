#pragma once

// Shared test utilities: independent oracles (implemented differently from the
// library code under test) and seeded random instance generators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "iscount/graph.hpp"
#include "iscount/rational.hpp"
#include "iscount/weighted_graph.hpp"

namespace oracles {

using iscount::Graph;
using iscount::Int;
using iscount::Rat;
using iscount::WeightedGraph;

// ---------------------------------------------------------------------------
// Independent-set oracles via subset dynamic programming over bitmasks:
// indep[mask] = indep[mask minus lowest vertex] && no edge from that vertex
// into the rest. Deliberately unrelated to the library's Gray-code scan and
// branching evaluators.
// ---------------------------------------------------------------------------

// Number of independent sets (graphs up to ~24 vertices).
inline long long count_independent_sets(const Graph& g) {
    std::vector<int> ids = g.vertices();
    int n = static_cast<int>(ids.size());
    if (n == 0) return 1;
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(ids[i], ids[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::vector<char> indep(std::size_t(1) << n);
    indep[0] = 1;
    long long total = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        indep[mask] = indep[rest] && (adj[v] & rest) == 0;
        total += indep[mask];
    }
    return total;
}

// Weighted partition function W * sum over independent I of w+(I) w-(V \ I).
inline Int subset_z(const WeightedGraph& wg) {
    std::vector<int> ids = wg.g.vertices();
    int n = static_cast<int>(ids.size());
    if (n == 0) return wg.scale;
    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (wg.g.has_edge(ids[i], ids[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::vector<char> indep(std::size_t(1) << n);
    indep[0] = 1;
    Int total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask) {
            int v = std::countr_zero(mask);
            std::uint32_t rest = mask & (mask - 1);
            indep[mask] = indep[rest] && (adj[v] & rest) == 0;
        }
        if (!indep[mask]) continue;
        Int term = 1;
        for (int i = 0; i < n; ++i)
            term *= (mask >> i) & 1 ? wg.wplus(ids[i]) : wg.wminus(ids[i]);
        total += term;
    }
    return total * wg.scale;
}

// ---------------------------------------------------------------------------
// Fixed small graphs.
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// Star: center 1 with leaves 2..t+1.
inline Graph star_graph(int t) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < t; ++i) e.emplace_back(1, i + 2);
    return Graph::from_edges(t + 1, e);
}

inline Graph petersen_graph() {
    return Graph::from_edges(10, {{1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {4, 5},
                                  {1, 5},
                                  {1, 6},
                                  {2, 7},
                                  {3, 8},
                                  {4, 9},
                                  {5, 10},
                                  {6, 8},
                                  {8, 10},
                                  {10, 7},
                                  {7, 9},
                                  {9, 6}});
}

// ---------------------------------------------------------------------------
// Seeded random generators (std::mt19937_64 passed by reference).
// ---------------------------------------------------------------------------

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Connected: random spanning tree plus extra edges with probability
// percent/100 per pair.
inline Graph random_connected_graph(int n, int percent, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::pair<int, int>> missing;
    for (int i = 2; i <= n; ++i) e.emplace_back(uniform_int(rng, 1, i - 1), i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool have = false;
            for (auto& [a, b] : e)
                if ((a == i && b == j) || (a == j && b == i)) have = true;
            if (!have) missing.emplace_back(i, j);
        }
    for (auto& p : missing)
        if (uniform_int(rng, 1, 100) <= percent) e.push_back(p);
    for (auto& [a, b] : e)
        if (a > b) std::swap(a, b);
    return Graph::from_edges(n, e);
}

// Possibly disconnected: every pair independently with probability percent/100.
inline Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (uniform_int(rng, 1, 100) <= percent) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// Random forest: each vertex beyond the first either starts a new tree or
// attaches to a uniformly random earlier vertex.
inline Graph random_forest(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= n; ++i)
        if (uniform_int(rng, 1, 100) <= 75) e.emplace_back(uniform_int(rng, 1, i - 1), i);
    return Graph::from_edges(n, e);
}

// 1-balanced weights: w-(v) in [1,10], w+(v) in [1, w-(v)].
inline WeightedGraph random_weighted_instance(const Graph& g, std::mt19937_64& rng) {
    WeightedGraph wg = WeightedGraph::unit(g);
    for (int v : g.vertices()) {
        int wm = uniform_int(rng, 1, 10);
        int wp = uniform_int(rng, 1, wm);
        wg.wm[v] = wm;
        wg.wp[v] = wp;
    }
    return wg;
}

// lambda-balanced weights: w-(v) chosen so that floor(lambda * w-) >= 1, then
// w+(v) uniform in [1, floor(lambda * w-(v))].
inline WeightedGraph random_lambda_balanced(const Graph& g, const Rat& lambda,
                                            std::mt19937_64& rng) {
    WeightedGraph wg = WeightedGraph::unit(g);
    int lo = 1;
    while (Rat(lambda) * lo < 1) ++lo;
    for (int v : g.vertices()) {
        int wm = uniform_int(rng, lo, 10);
        Rat cap_r = lambda * wm;
        int cap = static_cast<int>(Int(cap_r.get_num() / cap_r.get_den()).get_si());
        wg.wm[v] = wm;
        wg.wp[v] = uniform_int(rng, 1, cap);
    }
    return wg;
}

// Family-D member: Hamilton cycle on a shuffled order plus up to 4 chords with
// a per-vertex degree cap of 5 (so min degree 2 and max degree <= 5).
inline Graph random_family_d_graph(int n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> e;
    std::vector<int> deg(n + 1, 0);
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        e.emplace_back(a, b);
        ++deg[a];
        ++deg[b];
    };
    for (int i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);
    int chords = uniform_int(rng, 0, 4);
    for (int c = 0; c < chords; ++c) {
        for (int tries = 0; tries < 20; ++tries) {
            int a = uniform_int(rng, 1, n), b = uniform_int(rng, 1, n);
            if (a == b || deg[a] >= 5 || deg[b] >= 5) continue;
            if (a > b) std::swap(a, b);
            bool dup = false;
            for (auto& [x, y] : e)
                if (x == a && y == b) dup = true;
            if (dup) continue;
            add(a, b);
            break;
        }
    }
    return Graph::from_edges(n, e);
}

// A feedback set: repeatedly take a max-degree vertex out of any cyclic part
// until the remainder is a forest.
inline std::vector<int> greedy_feedback_set(const Graph& g) {
    std::vector<int> y;
    Graph cur = g;
    while (!cur.is_forest()) {
        int best = -1, best_deg = -1;
        for (int v : cur.vertices())
            if (cur.degree(v) > best_deg) {
                best = v;
                best_deg = cur.degree(v);
            }
        y.push_back(best);
        cur = cur.removed(std::vector<int>{best});
    }
    std::sort(y.begin(), y.end());
    return y;
}

}  // namespace oracles
