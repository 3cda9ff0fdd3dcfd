#include "iscount/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "iscount/errors.hpp"

namespace iscount {

namespace {

// Independent-set weight sum (without the multiplier) of a forest, with
// weights looked up in `w`. Throws if `g` contains a cycle.
Int forest_sum(const Graph& g, const WeightedGraph& w) {
    Int total = 1;
    for (const auto& comp : g.components()) {
        long long edges = 0;
        for (int v : comp) edges += g.degree(v);
        edges /= 2;
        if (edges != static_cast<long long>(comp.size()) - 1)
            throw precondition_error("forest_z: input graph contains a cycle");

        // BFS from the least-id vertex; parents precede children in `order`.
        std::vector<int> order;
        std::map<int, int> parent;
        order.reserve(comp.size());
        order.push_back(comp[0]);
        parent[comp[0]] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            int u = order[head];
            for (int nb : g.neighbors(u))
                if (!parent.contains(nb)) {
                    parent[nb] = u;
                    order.push_back(nb);
                }
        }

        std::map<int, Int> zin, zout;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int u = *it;
            Int in = w.wplus(u), out = w.wminus(u);
            for (int c : g.neighbors(u)) {
                if (c == parent[u]) continue;
                in *= zout[c];
                out *= zin[c] + zout[c];
            }
            zin[u] = std::move(in);
            zout[u] = std::move(out);
        }
        total *= zin[comp[0]] + zout[comp[0]];
    }
    return total;
}

struct BruteForceContext {
    std::vector<int> verts;
    std::vector<std::uint64_t> adj;  // neighbour mask per vertex index
    bool unit = true;                // all weights equal to 1?
};

BruteForceContext make_context(const WeightedGraph& wg) {
    BruteForceContext ctx;
    ctx.verts = wg.g.vertices();
    std::map<int, int> pos;
    for (std::size_t i = 0; i < ctx.verts.size(); ++i) pos[ctx.verts[i]] = static_cast<int>(i);
    ctx.adj.assign(ctx.verts.size(), 0);
    for (std::size_t i = 0; i < ctx.verts.size(); ++i) {
        for (int nb : wg.g.neighbors(ctx.verts[i])) ctx.adj[i] |= std::uint64_t{1} << pos[nb];
        if (wg.wplus(ctx.verts[i]) != 1 || wg.wminus(ctx.verts[i]) != 1) ctx.unit = false;
    }
    return ctx;
}

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Number of independent sets whose Gray index lies in [lo, hi), unit weights.
std::uint64_t count_block(const BruteForceContext& ctx, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t subset = gray(lo - 1);
    int viol = 0;
    for (std::uint64_t s = subset; s; s &= s - 1) {
        int b = std::countr_zero(s);
        std::uint64_t below = (std::uint64_t{1} << b) - 1;
        viol += std::popcount(subset & ctx.adj[b] & below);  // each edge once
    }
    std::uint64_t count = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
        int b = std::countr_zero(i);
        std::uint64_t bit = std::uint64_t{1} << b;
        if (subset & bit) {
            subset ^= bit;
            viol -= std::popcount(subset & ctx.adj[b]);
        } else {
            viol += std::popcount(subset & ctx.adj[b]);
            subset ^= bit;
        }
        if (viol == 0) ++count;
    }
    return count;
}

// Weighted sum over subsets with Gray index in [lo, hi).
Int sum_block(const BruteForceContext& ctx, const WeightedGraph& wg, std::uint64_t lo,
              std::uint64_t hi) {
    std::uint64_t subset = gray(lo - 1);
    int viol = 0;
    Int prod = 1;
    for (std::size_t i = 0; i < ctx.verts.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        prod *= (subset & bit) ? wg.wplus(ctx.verts[i]) : wg.wminus(ctx.verts[i]);
        if (subset & bit) viol += std::popcount(subset & ctx.adj[i] & (bit - 1));
    }
    Int sum = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
        int b = std::countr_zero(i);
        std::uint64_t bit = std::uint64_t{1} << b;
        if (subset & bit) {
            subset ^= bit;
            viol -= std::popcount(subset & ctx.adj[b]);
            mpz_divexact(prod.get_mpz_t(), prod.get_mpz_t(),
                         wg.wplus(ctx.verts[b]).get_mpz_t());
            prod *= wg.wminus(ctx.verts[b]);
        } else {
            viol += std::popcount(subset & ctx.adj[b]);
            subset ^= bit;
            mpz_divexact(prod.get_mpz_t(), prod.get_mpz_t(),
                         wg.wminus(ctx.verts[b]).get_mpz_t());
            prod *= wg.wplus(ctx.verts[b]);
        }
        if (viol == 0) sum += prod;
    }
    return sum;
}

Int brute_force_impl(const WeightedGraph& wg, int cap, bool parallel) {
    int n = static_cast<int>(wg.g.num_vertices());
    if (n > cap || n > 62)
        throw input_error("brute_force_z: graph has " + std::to_string(n) +
                          " vertices, exceeding the cap of " + std::to_string(std::min(cap, 62)));
    wg.check();
    if (n == 0) return wg.scale;

    BruteForceContext ctx = make_context(wg);
    std::uint64_t total = std::uint64_t{1} << n;

    // The empty subset (Gray index 0) is always independent.
    Int result = ctx.unit ? Int(1) : wg.wminus_product(ctx.verts);

    int blocks = 1;
    if (parallel && n >= 16) blocks = std::max(1, omp_get_max_threads());
    std::vector<Int> partial(blocks, Int(0));
    std::vector<std::uint64_t> counts(blocks, 0);

#pragma omp parallel for schedule(static, 1) if (blocks > 1)
    for (int t = 0; t < blocks; ++t) {
        std::uint64_t lo = 1 + (total - 1) * t / blocks;
        std::uint64_t hi = 1 + (total - 1) * (t + 1) / blocks;
        if (lo < hi) {
            if (ctx.unit)
                counts[t] = count_block(ctx, lo, hi);
            else
                partial[t] = sum_block(ctx, wg, lo, hi);
        }
    }
    if (ctx.unit) {
        std::uint64_t c = 0;
        for (int t = 0; t < blocks; ++t) c += counts[t];
        result += Int(static_cast<unsigned long>(c));
    } else {
        for (int t = 0; t < blocks; ++t) result += partial[t];
    }
    return wg.scale * result;
}

}  // namespace

Int brute_force_z(const WeightedGraph& wg, int cap) { return brute_force_impl(wg, cap, true); }

Int brute_force_z_serial(const WeightedGraph& wg, int cap) {
    return brute_force_impl(wg, cap, false);
}

Int forest_z(const WeightedGraph& wg) {
    wg.check();
    return wg.scale * forest_sum(wg.g, wg);
}

Int exact_count(const WeightedGraph& wg, std::span<const int> y) {
    wg.check();
    std::vector<int> ys(y.begin(), y.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (int v : ys)
        if (!wg.g.has_vertex(v))
            throw precondition_error("exact_count: y contains unknown vertex " +
                                     std::to_string(v));
    if (ys.size() > 30)
        throw input_error("exact_count: feedback set of size " + std::to_string(ys.size()) +
                          " is too large to enumerate");

    Graph rest = wg.g.removed(ys);
    if (!rest.is_forest())
        throw precondition_error("exact_count: graph minus y is not a forest");

    int k = static_cast<int>(ys.size());
    std::vector<std::uint64_t> adj(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && wg.g.has_edge(ys[i], ys[j])) adj[i] |= std::uint64_t{1} << j;

    Int sum = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        bool independent = true;
        for (std::uint64_t s = mask; s; s &= s - 1) {
            int b = std::countr_zero(s);
            if (adj[b] & mask) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;

        Int weight = 1;
        std::vector<int> chosen;
        for (int i = 0; i < k; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                weight *= wg.wplus(ys[i]);
                chosen.push_back(ys[i]);
            } else {
                weight *= wg.wminus(ys[i]);
            }
        }
        // Neighbors of the chosen set outside y are forced out of the
        // independent set and contribute their w- factors.
        std::vector<int> forced_out = set_difference_sorted(wg.g.gamma_set(chosen), ys);
        weight *= wg.wminus_product(forced_out);
        std::vector<int> removed = set_union_sorted(ys, forced_out);
        sum += weight * forest_sum(wg.g.removed(removed), wg);
    }
    return wg.scale * sum;
}

namespace {

Int exact_sum(const Graph& g, const WeightedGraph& w) {
    if (g.num_vertices() == 0) return 1;
    auto comps = g.components();
    if (comps.size() > 1) {
        Int prod = 1;
        for (const auto& comp : comps) prod *= exact_sum(g.induced(comp), w);
        return prod;
    }
    if (g.is_forest()) return forest_sum(g, w);

    int v = g.vertices().front();
    int best = g.degree(v);
    for (int u : g.vertices())
        if (g.degree(u) > best) {
            best = g.degree(u);
            v = u;
        }
    const std::vector<int>& nb = g.neighbors(v);
    std::vector<int> closed = g.closed_neighborhood(v);
    Int out = w.wminus(v) * exact_sum(g.removed(std::vector<int>{v}), w);
    Int in = w.wplus(v) * w.wminus_product(nb) * exact_sum(g.removed(closed), w);
    return out + in;
}

}  // namespace

Int exact_z(const WeightedGraph& wg) {
    wg.check();
    return wg.scale * exact_sum(wg.g, wg);
}

}  // namespace iscount
