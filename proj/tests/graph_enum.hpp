#pragma once

// Isomorph-free enumeration of connected graphs on up to 9 vertices.
//
// Canonical form: the maximum, over all vertex orderings, of the packed
// upper-triangle adjacency bitmask, where the chunk contributed by ordering
// position t holds the bits (0,t)..(t-1,t) with (0,t) most significant, and
// earlier chunks are more significant than later ones. The maximum is found
// by a level-synchronous search that keeps exactly the partial orderings
// achieving the best chunk at each level (all kept partials share the same
// packed prefix, so comparing the next chunk alone is exact).
//
// Enumeration: augment each canonical (n-1)-vertex graph by one new vertex
// joined to every non-empty subset of the old vertices, canonicalize, and
// dedup. Every connected graph arises this way because every connected graph
// has a non-cutting vertex. Counts are self-checked against the known
// number of connected graphs on 1..9 unlabeled vertices.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "iscount/graph.hpp"

namespace graph_enum {

inline constexpr long long kConnectedCounts[10] = {0,   1,   1,    2,     6,
                                                   21,  112, 853,  11117, 261080};

struct Partial {
    std::uint8_t order[9];
    std::uint16_t used;
};

inline std::uint64_t canonical_value(const std::vector<std::uint16_t>& adj, int n) {
    if (n <= 1) return 0;
    std::vector<Partial> cur, next;
    cur.reserve(n);
    for (int v = 0; v < n; ++v) {
        Partial p{};
        p.order[0] = static_cast<std::uint8_t>(v);
        p.used = static_cast<std::uint16_t>(1u << v);
        cur.push_back(p);
    }
    std::uint64_t value = 0;
    for (int t = 1; t < n; ++t) {
        int best = -1;
        next.clear();
        for (const Partial& p : cur) {
            for (int u = 0; u < n; ++u) {
                if (p.used & (1u << u)) continue;
                int chunk = 0;
                for (int i = 0; i < t; ++i)
                    chunk = (chunk << 1) | ((adj[u] >> p.order[i]) & 1);
                if (chunk < best) continue;
                if (chunk > best) {
                    best = chunk;
                    next.clear();
                }
                Partial q = p;
                q.order[t] = static_cast<std::uint8_t>(u);
                q.used = static_cast<std::uint16_t>(p.used | (1u << u));
                next.push_back(q);
            }
        }
        value = (value << t) | static_cast<unsigned>(best);
        cur.swap(next);
    }
    return value;
}

// Adjacency bitmasks of the canonical representative (vertices 0..n-1).
inline std::vector<std::uint16_t> decode(std::uint64_t value, int n) {
    std::vector<std::uint16_t> adj(n, 0);
    int below = 0;
    for (int t = 2; t < n; ++t) below += t;  // bits in chunks t+1..n-1 for t = 1
    for (int t = 1; t < n; ++t) {
        auto chunk = static_cast<unsigned>((value >> below) & ((1u << t) - 1));
        for (int i = 0; i < t; ++i)
            if (chunk & (1u << (t - 1 - i))) {
                adj[i] |= static_cast<std::uint16_t>(1u << t);
                adj[t] |= static_cast<std::uint16_t>(1u << i);
            }
        below -= t + 1;
    }
    return adj;
}

inline iscount::Graph to_graph(std::uint64_t value, int n) {
    std::vector<std::uint16_t> adj = decode(value, n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[i] & (1u << j)) edges.emplace_back(i + 1, j + 1);
    return iscount::Graph::from_edges(n, edges);
}

// Sorted canonical values of all connected graphs on exactly n vertices,
// built once per process and self-checked against kConnectedCounts.
inline const std::vector<std::uint64_t>& connected_values(int n) {
    if (n < 1 || n > 9) throw std::logic_error("graph_enum: n out of range");
    static std::vector<std::vector<std::uint64_t>> cache(10);
    if (!cache[n].empty()) return cache[n];
    if (n == 1) {
        cache[1] = {0};
        return cache[1];
    }
    const std::vector<std::uint64_t>& parents = connected_values(n - 1);
    std::unordered_set<std::uint64_t> seen;
#pragma omp parallel
    {
        std::unordered_set<std::uint64_t> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (long long pi = 0; pi < static_cast<long long>(parents.size()); ++pi) {
            std::vector<std::uint16_t> adj = decode(parents[pi], n - 1);
            adj.push_back(0);
            for (unsigned s = 1; s < (1u << (n - 1)); ++s) {
                adj[n - 1] = static_cast<std::uint16_t>(s);
                for (int i = 0; i < n - 1; ++i)
                    if (s & (1u << i))
                        adj[i] |= static_cast<std::uint16_t>(1u << (n - 1));
                local.insert(canonical_value(adj, n));
                for (int i = 0; i < n - 1; ++i)
                    adj[i] &= static_cast<std::uint16_t>(~(1u << (n - 1)));
            }
        }
#pragma omp critical
        seen.merge(local);
    }
    if (static_cast<long long>(seen.size()) != kConnectedCounts[n])
        throw std::logic_error("graph_enum: got " + std::to_string(seen.size()) +
                               " connected graphs on " + std::to_string(n) +
                               " vertices, expected " + std::to_string(kConnectedCounts[n]));
    cache[n].assign(seen.begin(), seen.end());
    std::sort(cache[n].begin(), cache[n].end());
    return cache[n];
}

}  // namespace graph_enum
