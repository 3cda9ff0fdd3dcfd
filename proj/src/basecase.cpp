#include "iscount/basecase.hpp"

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "iscount/errors.hpp"
#include "iscount/exact.hpp"
#include "iscount/interval.hpp"
#include "iscount/transform.hpp"

namespace iscount {

namespace {

WeightedGraph uniform_weights(const Graph& g, const Int& wp, const Int& wm) {
    WeightedGraph wg;
    for (int v : g.vertices()) {
        wg.wp[v] = wp;
        wg.wm[v] = wm;
    }
    wg.g = g;
    return wg;
}

// Exact Z_lambda(g) via integer weights (p, q) for lambda = p/q, divided by
// q^{|V|}.
Rat exact_z_lambda(const Graph& g, const Rat& lambda) {
    WeightedGraph wg = uniform_weights(g, lambda.get_num(), lambda.get_den());
    Rat z(exact_z(wg));
    return z / Rat(pow_int(lambda.get_den(), static_cast<unsigned long>(g.num_vertices())));
}

Rat forest_z_lambda(const Graph& g, const Rat& lambda) {
    WeightedGraph wg = uniform_weights(g, lambda.get_num(), lambda.get_den());
    Rat z(forest_z(wg));
    return z / Rat(pow_int(lambda.get_den(), static_cast<unsigned long>(g.num_vertices())));
}

// Truncation depth L = ceil(c0 * ln(n / eps)), computed with upward
// rounding so the depth never falls below the exact value.
int saw_depth_for(int n, const Rat& eps, int c0) {
    Rat ratio = Rat(n) / eps;
    if (ratio <= 1) return 0;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_q(t, ratio.get_mpq_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_mul_ui(t, t, static_cast<unsigned long>(c0), MPFR_RNDU);
    long l = mpfr_get_si(t, MPFR_RNDU);  // ceil via upward rounding
    mpfr_clear(t);
    return static_cast<int>(l);
}

// Occupancy ratio of the walk ending at `u` in the self-avoiding-walk tree,
// truncated `depth_left` levels below. `path`/`on_path` track the walk;
// cycle-closing neighbours become pinned copies: occupied (collapsing the
// product to 0) when the closing neighbour ranks after the walk's exit
// neighbour in the revisited vertex's sorted neighbour list, else
// unoccupied (factor 1).
Rat saw_ratio(const Graph& g, int u, int parent, std::vector<int>& path,
              std::map<int, int>& on_path, int depth_left, const Rat& lambda) {
    if (depth_left == 0) return lambda;  // truncated leaf
    Rat prod = 1;
    for (int w : g.neighbors(u)) {
        if (w == parent) continue;
        auto hit = on_path.find(w);
        if (hit != on_path.end()) {
            int exit = path[hit->second + 1];
            if (u > exit) return 0;  // pinned occupied copy
            continue;                // pinned unoccupied copy
        }
        path.push_back(w);
        on_path[w] = static_cast<int>(path.size()) - 1;
        Rat rc = saw_ratio(g, w, u, path, on_path, depth_left - 1, lambda);
        path.pop_back();
        on_path.erase(w);
        prod /= 1 + rc;
    }
    return lambda * prod;
}

Rat saw_root_ratio(const Graph& g, int v, int depth, const Rat& lambda) {
    std::vector<int> path{v};
    std::map<int, int> on_path{{v, 0}};
    return saw_ratio(g, v, -1, path, on_path, depth, lambda);
}

}  // namespace

GadgetDigits compute_digits(const Rat& lambda, const WeightedGraph& wg, int n) {
    wg.check();
    if (lambda <= 0) throw precondition_error("compute_digits: lambda must be positive");
    if (!wg.is_lambda_balanced(lambda))
        throw precondition_error("compute_digits: instance is not lambda-balanced");
    if (n < 0) throw precondition_error("compute_digits: negative digit bound");

    GadgetDigits gd;
    gd.digit_count = n;
    for (int v : wg.g.vertices()) {
        Rat x = lambda * Rat(wg.wminus(v)) / Rat(wg.wplus(v));
        std::vector<long long> a(n + 1, 0);
        for (int t = 0; t <= n; ++t) {
            Rat lam_t = 1 + lambda * pow_rat(1 + lambda, -t);
            long e = floor_log(lam_t, x);
            a[t] = e;
            if (e > 0) x /= pow_rat(lam_t, e);
        }
        gd.digits[v] = std::move(a);
        gd.residual[v] = std::move(x);
    }
    return gd;
}

Graph realize_weight_map(const Graph& g, const WeightMap& phi) {
    std::vector<int> vertices = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (int nb : g.neighbors(v))
            if (v < nb) edges.emplace_back(v, nb);

    int next = g.max_vertex_id() + 1;
    for (const auto& [v, ts] : phi) {
        if (!g.has_vertex(v))
            throw precondition_error("realize_weight_map: unknown vertex " + std::to_string(v));
        std::vector<int> sorted = ts;
        std::sort(sorted.begin(), sorted.end());
        for (int t : sorted) {
            if (t < 0)
                throw precondition_error("realize_weight_map: negative leaf count");
            int center = next++;
            vertices.push_back(center);
            edges.emplace_back(v, center);
            for (int leaf = 0; leaf < t; ++leaf) {
                vertices.push_back(next);
                edges.emplace_back(center, next);
                ++next;
            }
        }
    }
    return Graph::from_vertices_and_edges(vertices, edges);
}

bool in_phi_y(const Graph& g, const WeightMap& phi, int y) {
    long long bound = static_cast<long long>(y) * g.num_vertices() * g.num_vertices();
    for (const auto& [v, ts] : phi) {
        long long total = 0;
        for (int t : ts) total += t + 1;
        if (total > bound) return false;
    }
    return true;
}

std::vector<long long> saw_tree_paths(const Graph& g, int v, int max_depth) {
    if (max_depth < 0) throw precondition_error("saw_tree_paths: negative depth");
    if (!g.has_vertex(v))
        throw precondition_error("saw_tree_paths: unknown vertex " + std::to_string(v));

    std::vector<long long> counts(max_depth, 0);
    std::vector<int> path{v};
    auto rec = [&](auto&& self, int u, int len) -> void {
        if (len == max_depth) return;
        for (int w : g.neighbors(u)) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            ++counts[len];
            path.push_back(w);
            self(self, w, len + 1);
            path.pop_back();
        }
    };
    rec(rec, v, 0);
    return counts;
}

ApproxValue approx_z_uni(const Graph& g, const Rat& lambda, const Rat& eps,
                         const ApproxOptions& opt) {
    if (lambda <= 0) throw precondition_error("approx_z_uni: lambda must be positive");
    if (eps <= 0) throw precondition_error("approx_z_uni: eps must be positive");

    int n = static_cast<int>(g.num_vertices());
    if (n == 0) return {Rat(1), eps};
    if (n <= opt.uni_exact_threshold) return {exact_z_lambda(g, lambda), eps};

    int depth = opt.saw_depth ? *opt.saw_depth : saw_depth_for(n, eps, opt.c0);
    Rat z = 1;
    Graph h = g;
    for (int v : g.vertices()) {
        if (h.empty()) break;
        if (h.is_forest()) {
            z *= forest_z_lambda(h, lambda);
            break;
        }
        Rat r = saw_root_ratio(h, v, depth, lambda);
        z *= 1 + r;
        h = h.removed(std::vector<int>{v});
    }
    return {z, eps};
}

ApproxValue approx_z(const WeightedGraph& wg, const Rat& eps, const Rat& lambda,
                     const ApproxOptions& opt) {
    wg.check();
    if (wg.g.empty()) throw precondition_error("approx_z: empty instance");
    if (lambda <= 0) throw precondition_error("approx_z: lambda must be positive");
    if (eps <= 0) throw precondition_error("approx_z: eps must be positive");
    if (!wg.is_lambda_balanced(lambda))
        throw precondition_error("approx_z: instance is not lambda-balanced");

    int n = static_cast<int>(wg.g.num_vertices());

    // Step 1: tiny eps relative to the instance — evaluate exactly.
    if (eps <= Rat(3 * n) * lambda * pow_rat(1 + lambda, -n)) return {Rat(exact_z(wg)), eps};

    // Step 2: fold vertices with negligible w+ into the multiplier.
    std::vector<int> deleted;
    Int w_prime = wg.scale;
    for (int v : wg.g.vertices())
        if (Rat(3 * n) * Rat(wg.wplus(v)) <= eps * Rat(wg.wminus(v))) {
            deleted.push_back(v);
            w_prime *= wg.wminus(v);
        }
    WeightedGraph pruned = wg.removed(deleted);
    int n_prime = static_cast<int>(pruned.g.num_vertices());

    // Step 3: digit expansion of the weight ratios (t = 0..original n).
    GadgetDigits gd = compute_digits(lambda, pruned, n);

    // Step 4: realize the digits as star gadgets.
    WeightMap phi;
    for (const auto& [v, a] : gd.digits) {
        std::vector<int> ts;
        for (int t = 0; t <= gd.digit_count; ++t)
            for (long long c = 0; c < a[t]; ++c) ts.push_back(t);
        if (!ts.empty()) phi[v] = std::move(ts);
    }
    Graph gadget = realize_weight_map(pruned.g, phi);

    // Step 5: univariate estimate at eps/3, rescaled back.
    ApproxValue uni = approx_z_uni(gadget, lambda, eps / 3, opt);
    Rat value = uni.value * Rat(w_prime) * pow_rat(lambda, -n_prime);
    for (int v : pruned.g.vertices()) {
        const std::vector<long long>& a = gd.digits[v];
        long long weighted = 0;
        for (int t = 0; t <= gd.digit_count; ++t) weighted += t * a[t];
        value *= Rat(pruned.wplus(v)) * pow_rat(1 + lambda, -static_cast<long>(weighted));
    }
    return {value, eps};
}

ApproxValue base_count(const WeightedGraph& wg, const Rat& eps, const ApproxOptions& opt) {
    static const bool subcritical = certify_subcritical(Rat(4141, 1000));
    if (!subcritical)
        throw internal_error("base_count: subcriticality certificate failed");
    if (!wg.is_one_balanced())
        throw precondition_error("base_count: instance is not 1-balanced");
    if (!wg.g.in_family_d())
        throw precondition_error("base_count: graph is not in the base family");
    return approx_z(wg, eps, 1, opt);
}

ApproxValue fptas_unweighted(const Graph& g, const Rat& eps, const ApproxOptions& opt) {
    for (int v : g.vertices())
        if (g.degree(v) >= 6 && g.two_degree(v) > 26)
            throw precondition_error(
                "fptas_unweighted: vertex " + std::to_string(v) +
                " has degree >= 6 and 2-degree > 26");

    WeightedGraph wg = WeightedGraph::unit(g);
    for (;;) {
        int strip = 0;
        for (int v : wg.g.vertices())
            if (wg.g.degree(v) < 2) {
                strip = v;
                break;
            }
        if (strip == 0) break;
        wg = prune(wg, std::vector<int>{strip});
    }
    if (wg.g.empty()) return {Rat(wg.scale), eps};
    return base_count(wg, eps, opt);
}

}  // namespace iscount
