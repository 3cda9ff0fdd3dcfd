// Command-line surface for the independent-set counting library: counting,
// exact evaluation, potential validation, the psi/kappa verifier, the D2
// table, and decomposition inspection. All output is deterministic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "iscount/count.hpp"
#include "iscount/decompose.hpp"
#include "iscount/errors.hpp"
#include "iscount/exact.hpp"
#include "iscount/graph_io.hpp"
#include "iscount/potential.hpp"
#include "iscount/psi.hpp"

namespace {

using namespace iscount;

void apply_threads(std::optional<int> flag) {
    int threads = 0;
    if (flag) {
        threads = *flag;
    } else if (const char* env = std::getenv("ISCOUNT_THREADS")) {
        try {
            threads = std::stoi(env);
        } catch (const std::exception&) {
            throw input_error("ISCOUNT_THREADS is not an integer: " + std::string(env));
        }
    }
    if (threads < 0) throw input_error("thread count must be positive");
    if (threads > 0) omp_set_num_threads(threads);
}

Rat parse_eps(const std::string& text) {
    Rat eps = parse_number(text);
    if (!(eps > 0 && eps < 1)) throw input_error("eps must satisfy 0 < eps < 1, got " + text);
    return eps;
}

// Builtin name (`general` | `bipartite`) or a CSV path; validated before use.
PrePotential resolve_potential(const std::string& spec) {
    PrePotential p;
    if (spec == "general")
        p = builtin_general();
    else if (spec == "bipartite")
        p = builtin_bipartite();
    else
        p = load_potential_file(spec);
    ValidationReport report = validate(p);
    if (!report.passed)
        throw input_error("potential '" + spec + "' failed validation; run validate-potential");
    return p;
}

std::string format_value(const Rat& value, std::optional<int> decimal_digits) {
    if (decimal_digits) return to_decimal_string(value, *decimal_digits);
    return to_token(value);
}

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out.empty() ? "-" : out;
}

void write_trace(const std::string& path, const BranchTrace& trace) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open trace file for writing: " + path);
    for (const TraceEntry& e : trace.entries) out << e.to_line() << '\n';
    out << "stats calls=" << trace.stats.calls << " prunes=" << trace.stats.prunes
        << " base_hits=" << trace.stats.base_hits << '\n';
}

struct CountArgs {
    std::string graph_path;
    std::string eps_text;
    std::string potential_spec = "general";
    std::optional<int> decimal_digits;
    std::optional<int> threads;
    std::optional<int> saw_depth;
    std::optional<std::string> trace_path;
    int base_exact_threshold = 24;
};

int run_count(const CountArgs& a) {
    apply_threads(a.threads);
    Rat eps = parse_eps(a.eps_text);
    Graph g = load_graph_file(a.graph_path);
    PrePotential p = resolve_potential(a.potential_spec);

    CountOptions opt;
    opt.base_exact_threshold = a.base_exact_threshold;
    opt.saw_depth = a.saw_depth;

    BranchTrace trace;
    ApproxValue result =
        approximate_independent_sets(g, eps, p, opt, a.trace_path ? &trace : nullptr);
    if (a.trace_path) write_trace(*a.trace_path, trace);

    std::cout << format_value(result.value, a.decimal_digits) << '\n';
    std::cout << "eps = " << to_token(result.epsilon) << '\n';
    return 0;
}

int run_exact(const std::string& graph_path, int cap, std::optional<int> threads) {
    apply_threads(threads);
    Graph g = load_graph_file(graph_path);
    WeightedGraph wg = WeightedGraph::unit(g);
    Int z = g.is_forest() ? forest_z(wg) : brute_force_z(wg, cap);
    std::cout << z.get_str() << '\n';
    return 0;
}

int run_validate(const std::string& spec) {
    PrePotential p;
    if (spec == "general")
        p = builtin_general();
    else if (spec == "bipartite")
        p = builtin_bipartite();
    else
        p = load_potential_file(spec);
    ValidationReport report = validate(p);
    std::cout << report.to_text();
    return report.passed ? 0 : 1;
}

int run_d2(const std::string& k_text) {
    Rat k = parse_number(k_text);
    std::cout << d2(k) << '\n';
    return 0;
}

int run_verify_psi(std::optional<int> threads) {
    apply_threads(threads);
    std::vector<PsiViolation> violations = verify_psi_kappa();
    if (violations.empty()) {
        std::cout << "OK (no counterexample)\n";
        return 0;
    }
    for (const PsiViolation& v : violations) std::cout << v.to_string() << '\n';
    std::cout << violations.size() << " violation(s)\n";
    return 1;
}

int run_analyze(const std::string& graph_path, int v) {
    Graph g = load_graph_file(graph_path);
    if (!g.has_vertex(v)) throw input_error("analyze: unknown vertex " + std::to_string(v));
    Graph gv = g.induced(g.component_of(v));
    StandardDecomposition sd = standard_decomposition(gv, v);

    std::cout << "v = " << sd.v << '\n';
    std::cout << "gamma(v) = " << join_ids(sd.gamma_v) << '\n';
    std::cout << "S = " << join_ids(sd.s_set) << '\n';
    std::cout << "X = " << join_ids(sd.x_set) << '\n';
    std::cout << "tree components = " << sd.tree_components.size() << '\n';
    for (const auto& comp : sd.tree_components) std::cout << "  tree: " << join_ids(comp) << '\n';
    std::cout << "non-tree components = " << sd.non_tree_components.size() << '\n';
    for (const auto& comp : sd.non_tree_components)
        std::cout << "  non-tree: " << join_ids(comp) << '\n';

    if (sd.s_set.size() == 2) {
        ExtendedDecomposition ed = extended_decomposition(gv, v);
        std::cout << "extended: x = " << ed.x << ", y = " << ed.y << ", z = " << ed.z << '\n';
        std::cout << "P = " << join_ids(ed.path) << '\n';
        std::cout << "X+ = " << join_ids(ed.x_plus) << '\n';
        std::cout << "H = " << join_ids(ed.h_vertices) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate and exact counting of independent sets"};
    app.require_subcommand(1);

    CountArgs count_args;
    std::string exact_graph, validate_spec, d2_k, analyze_graph;
    int exact_cap = kDefaultBruteForceCap;
    int analyze_vertex = 0;
    std::optional<int> plain_threads;
    std::optional<long long> seed;  // reserved for randomized self-tests

    CLI::App* c = app.add_subcommand("count", "Approximately count independent sets");
    c->add_option("graph", count_args.graph_path, "graph file")->required();
    c->add_option("--eps", count_args.eps_text, "relative error budget in (0,1)")->required();
    c->add_option("--potential", count_args.potential_spec,
                  "builtin name (general|bipartite) or potential CSV path");
    c->add_option("--decimal", count_args.decimal_digits,
                  "print the value with this many decimal digits (round half-even)");
    c->add_option("--threads", count_args.threads, "worker threads (default ISCOUNT_THREADS)");
    c->add_option("--saw-depth", count_args.saw_depth, "walk-tree truncation depth override");
    c->add_option("--trace", count_args.trace_path, "write branch trace to this file");
    c->add_option("--base-exact-threshold", count_args.base_exact_threshold,
                  "exact base case at or below this many vertices (0 disables)");
    c->add_option("--seed", seed, "reserved");

    CLI::App* e = app.add_subcommand("exact", "Exactly count independent sets");
    e->add_option("graph", exact_graph, "graph file")->required();
    e->add_option("--exact-cap", exact_cap, "largest admissible vertex count");
    e->add_option("--threads", plain_threads, "worker threads (default ISCOUNT_THREADS)");

    CLI::App* vp = app.add_subcommand("validate-potential", "Check a pre-potential and certify its runtime bound");
    vp->add_option("potential", validate_spec, "builtin name (general|bipartite) or potential CSV path")
        ->required();

    CLI::App* d = app.add_subcommand("d2", "Minimum 2-degree forcing average degree > k");
    d->add_option("k", d2_k, "rational k >= 2")->required();

    CLI::App* psi = app.add_subcommand("verify-psi", "Exhaustive psi/kappa inequality check");
    psi->add_option("--threads", plain_threads, "worker threads (default ISCOUNT_THREADS)");

    CLI::App* an = app.add_subcommand("analyze", "Print the standard/extended decomposition from a vertex");
    an->add_option("graph", analyze_graph, "graph file")->required();
    an->add_option("vertex", analyze_vertex, "branch vertex")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (app.got_subcommand(c)) return run_count(count_args);
        if (app.got_subcommand(e)) return run_exact(exact_graph, exact_cap, plain_threads);
        if (app.got_subcommand(vp)) return run_validate(validate_spec);
        if (app.got_subcommand(d)) return run_d2(d2_k);
        if (app.got_subcommand(psi)) return run_verify_psi(plain_threads);
        if (app.got_subcommand(an)) return run_analyze(analyze_graph, analyze_vertex);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const input_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return 3;
    }
}
