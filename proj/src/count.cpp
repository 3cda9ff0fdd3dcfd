#include "iscount/count.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "iscount/decompose.hpp"
#include "iscount/errors.hpp"
#include "iscount/exact.hpp"
#include "iscount/transform.hpp"

namespace iscount {

const char* to_token(BranchKind k) {
    switch (k) {
        case BranchKind::Deg11: return "deg11";
        case BranchKind::StandardS3: return "s3";
        case BranchKind::ExtendedS2: return "s2";
        case BranchKind::Base: return "base";
        case BranchKind::ReduceEmpty: return "reduce-empty";
    }
    throw internal_error("count: unknown branch kind");
}

std::string TraceEntry::to_line() const {
    std::string line = std::to_string(depth);
    line += ' ';
    line += to_token(kind);
    line += ' ';
    line += vertex ? std::to_string(*vertex) : std::string("-");
    line += ' ';
    line += to_token(pot_before);
    line += ' ';
    line += pot_out ? to_token(*pot_out) : std::string("-");
    line += ' ';
    line += pot_in ? to_token(*pot_in) : std::string("-");
    return line;
}

int pick_branch_vertex(const Graph& g) {
    if (g.empty()) throw internal_error("pick_branch_vertex: empty graph");
    if (g.max_degree() >= 11) throw internal_error("pick_branch_vertex: maximum degree exceeds 10");
    if (g.min_degree() < 2) throw internal_error("pick_branch_vertex: graph is not reduced");
    const long long n = g.num_vertices();
    const long long m = g.num_edges();

    int least_heavy = -1;
    for (int v : g.vertices()) {
        if (g.degree(v) >= 6 && g.two_degree(v) >= 27) {
            least_heavy = v;
            break;
        }
    }
    if (least_heavy < 0)
        throw internal_error("pick_branch_vertex: no vertex of degree >= 6 and 2-degree >= 27");

    if (2 * m <= 5 * n) return least_heavy;  // average degree <= 5

    int best = -1;
    long long best_d2 = -1;
    for (int v : g.vertices()) {
        if (static_cast<long long>(g.degree(v)) * n < 2 * m) continue;  // d(v) >= 2m/n, exactly
        long long d2v = g.two_degree(v);
        if (d2v > best_d2) {
            best = v;
            best_d2 = d2v;
        }
    }
    if (best < 0) throw internal_error("pick_branch_vertex: no vertex of at least average degree");
    return best;
}

namespace {

struct CountContext {
    const Rat& eps;
    const PrePotential& pot;
    const CountOptions& opt;
    ApproxOptions approx_opts;
    BranchTrace* trace = nullptr;

    Rat count_rec(const WeightedGraph& wg, int depth);
    Rat finish_branch(int depth, BranchKind kind, int vertex, Rat pot_before,
                      const WeightedGraph& gout, const WeightedGraph& gin, const Int& coeff_out,
                      const Int& coeff_in);
};

void check_count_input(const WeightedGraph& wg, const Rat& eps) {
    if (!(eps > 0 && eps < 1)) throw input_error("count: epsilon must satisfy 0 < eps < 1");
    if (wg.g.empty()) throw input_error("count: instance graph is empty");
    if (!wg.is_one_balanced()) throw input_error("count: instance is not 1-balanced");
    for (const auto& comp : wg.g.components())
        if (wg.g.induced(comp).is_forest())
            throw input_error("count: instance has a tree component");
}

// Children and coefficients of a branch on v that keeps (out) or takes (in)
// the vertex: TR(G - v) weighted by w-(v), and TR(G - v - Gamma(v)) weighted
// by w+(v) w-(Gamma(v)).
Rat CountContext::finish_branch(int depth, BranchKind kind, int vertex, Rat pot_before,
                                const WeightedGraph& gout, const WeightedGraph& gin,
                                const Int& coeff_out, const Int& coeff_in) {
    if (trace) {
        TraceEntry e;
        e.depth = depth;
        e.kind = kind;
        e.vertex = vertex;
        e.pot_before = std::move(pot_before);
        e.pot_out = evaluate_f_plus(pot, gout.g);
        e.pot_in = evaluate_f_plus(pot, gin.g);
        trace->entries.push_back(std::move(e));
    }
    Rat c_out = gout.g.empty() ? Rat(gout.scale) : count_rec(gout, depth + 1);
    Rat c_in = gin.g.empty() ? Rat(gin.scale) : count_rec(gin, depth + 1);
    return Rat(coeff_out) * c_out + Rat(coeff_in) * c_in;
}

Rat CountContext::count_rec(const WeightedGraph& wg_in, int depth) {
    check_count_input(wg_in, eps);
    if (trace) ++trace->stats.calls;

    // Branch on the least vertex of degree >= 11, if any.
    if (wg_in.g.max_degree() >= 11) {
        int v = -1;
        for (int u : wg_in.g.vertices())
            if (wg_in.g.degree(u) >= 11) {
                v = u;
                break;
            }
        Rat pot_before = trace ? evaluate_f_plus(pot, wg_in.g) : Rat(0);
        WeightedGraph gout = tree_removal(wg_in.removed(std::vector<int>{v}));
        WeightedGraph gin = tree_removal(wg_in.removed(wg_in.g.closed_neighborhood(v)));
        Int coeff_out = wg_in.wminus(v);
        Int coeff_in = wg_in.wplus(v) * wg_in.wminus_product(wg_in.g.neighbors(v));
        return finish_branch(depth, BranchKind::Deg11, v, std::move(pot_before), gout, gin,
                             coeff_out, coeff_in);
    }

    long long prunes = 0;
    WeightedGraph wg = reduce(wg_in, &prunes);
    if (trace) trace->stats.prunes += prunes;

    if (wg.g.empty()) {
        if (trace) {
            TraceEntry e;
            e.depth = depth;
            e.kind = BranchKind::ReduceEmpty;
            e.pot_before = Rat(0);
            trace->entries.push_back(std::move(e));
        }
        return Rat(wg.scale);
    }

    // Base case: no vertex of degree >= 6 and 2-degree >= 27.
    bool has_heavy = false;
    for (int u : wg.g.vertices())
        if (wg.g.degree(u) >= 6 && wg.g.two_degree(u) >= 27) {
            has_heavy = true;
            break;
        }
    if (!has_heavy) {
        if (trace) {
            ++trace->stats.base_hits;
            TraceEntry e;
            e.depth = depth;
            e.kind = BranchKind::Base;
            e.pot_before = evaluate_f_plus(pot, wg.g);
            trace->entries.push_back(std::move(e));
        }
        if (wg.g.num_vertices() <= opt.base_exact_threshold) return Rat(exact_z(wg));
        return base_count(wg, eps, approx_opts).value;
    }

    int v = pick_branch_vertex(wg.g);
    Graph gv = wg.g.induced(wg.g.component_of(v));
    StandardDecomposition sd = standard_decomposition(gv, v);

    if (sd.s_set.size() >= 3) {
        Rat pot_before = trace ? evaluate_f_plus(pot, wg.g) : Rat(0);
        WeightedGraph gout = tree_removal(wg.removed(std::vector<int>{v}));
        WeightedGraph gin = tree_removal(wg.removed(wg.g.closed_neighborhood(v)));
        Int coeff_out = wg.wminus(v);
        Int coeff_in = wg.wplus(v) * wg.wminus_product(wg.g.neighbors(v));
        return finish_branch(depth, BranchKind::StandardS3, v, std::move(pot_before), gout, gin,
                             coeff_out, coeff_in);
    }

    if (sd.s_set.size() != 2)
        throw internal_error("count: |S| = " + std::to_string(sd.s_set.size()) +
                             " for a reduced component");

    // Extended branch on z; both children prune away what remains of X+.
    ExtendedDecomposition ed = extended_decomposition(gv, v);
    int z = ed.z;
    Rat pot_before = trace ? evaluate_f_plus(pot, wg.g) : Rat(0);

    WeightedGraph minus_z = wg.removed(std::vector<int>{z});
    std::vector<int> out_gamma = minus_z.g.gamma_set(ed.x_plus);
    if (out_gamma != std::vector<int>{ed.x})
        throw internal_error("count: X+ has unexpected neighborhood after removing z");
    WeightedGraph gout = tree_removal(prune(minus_z, ed.x_plus));

    WeightedGraph minus_nz = wg.removed(wg.g.closed_neighborhood(z));
    std::vector<int> x_plus_in = set_difference_sorted(ed.x_plus, wg.g.neighbors(z));
    WeightedGraph gin = tree_removal(prune(minus_nz, x_plus_in));
    if (trace) trace->stats.prunes += 2;

    Int coeff_out = wg.wminus(z);
    Int coeff_in = wg.wplus(z) * wg.wminus_product(wg.g.neighbors(z));
    return finish_branch(depth, BranchKind::ExtendedS2, z, std::move(pot_before), gout, gin,
                         coeff_out, coeff_in);
}

}  // namespace

ApproxValue count(const WeightedGraph& wg, const Rat& eps, const PrePotential& p,
                  const CountOptions& opt, BranchTrace* trace) {
    wg.check();
    if (trace && !p.validated) throw input_error("count: tracing requires a validated potential");

    ApproxOptions approx_opts;
    approx_opts.uni_exact_threshold = opt.base_exact_threshold;
    approx_opts.saw_depth = opt.saw_depth;
    approx_opts.c0 = opt.c0;

    CountContext ctx{eps, p, opt, approx_opts, trace};
    Rat value = ctx.count_rec(wg, 0);
    return {std::move(value), eps};
}

ApproxValue approximate_independent_sets(const Graph& g, const Rat& eps, const PrePotential& p,
                                         const CountOptions& opt, BranchTrace* trace) {
    if (!(eps > 0 && eps < 1))
        throw input_error("approximate_independent_sets: epsilon must satisfy 0 < eps < 1");
    if (!p.validated)
        throw input_error("approximate_independent_sets: potential must be validated");
    if (p.bipartite && !g.is_bipartite())
        throw input_error(
            "approximate_independent_sets: bipartite potential requires a bipartite graph");

    WeightedGraph wg = tree_removal(WeightedGraph::unit(g));
    if (wg.g.empty()) return {Rat(wg.scale), eps};
    return count(wg, eps, p, opt, trace);
}

}  // namespace iscount
