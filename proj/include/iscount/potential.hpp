#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iscount/graph.hpp"
#include "iscount/rational.hpp"

namespace iscount {

// Piecewise-linear pre-potential f(m, n) = rho_i * m + sigma_i * n on the
// average-degree slice k_{i-1} < 2m/n <= k_i, with k_0 = -1 and k_s = +inf
// implicit. `boundaries` holds the interior k_1..k_{s-1}.
struct PrePotential {
    bool bipartite = false;
    std::vector<Rat> rho;
    std::vector<Rat> sigma;
    std::vector<Rat> boundaries;
    bool validated = false;

    int slices() const { return static_cast<int>(rho.size()); }
    bool operator==(const PrePotential& other) const {
        return bipartite == other.bipartite && rho == other.rho && sigma == other.sigma &&
               boundaries == other.boundaries;
    }
};

// One tau <= 2 check for (slice i, branch degree d): exp_out = f_i(d, 1),
// exp_in per the general or bipartite in-branch bound.
struct BranchCertificate {
    int slice_index = 0;  // 1-based
    int degree = 0;
    Rat exp_out;
    Rat exp_in;
    bool certified = false;
};

// Witness for is_suitable; d == 0 marks the trivial z >= K^2 branch.
struct SuitabilityWitness {
    long long d = 0, s_count = 0, q = 0, d0 = 0, d1 = 0;
};

struct ConditionResult {
    std::string name;
    bool passed = false;
    std::string message;
};

struct ValidationReport {
    std::vector<ConditionResult> conditions;
    std::vector<BranchCertificate> certificates;
    bool final_tau = false;
    Rat sigma_s;
    std::string exponent;  // sigma_s at 4 decimals (half-even)
    std::string base;      // 2^sigma_s rounded up at 4 decimals
    bool passed = false;

    std::string to_text() const;
    std::string runtime_line() const;  // "running time O(2^(<exp> n)) * poly(1/eps)"
};

// Associated average degree aad*_k(x) = (d + #{x_i < k}) / (1 + sum_{x_i<k} 1/x_i).
Rat aad_star(const Rat& k, const std::vector<long long>& x);

// Suitability of z for k (K = floor(k) + 1): trivial when z >= K^2, else a
// witness (d, s, q, d0, d1) with K <= d <= z/2, 0 <= s <= d-1,
// 2(d-s) <= z - Ks <= (K-1)(d-s), q = floor/remainder split, and
// (d + d0 + d1) / (1 + d0/q + d1/(q+1)) > k.
std::optional<SuitabilityWitness> is_suitable(const Rat& k, long long z);

// Minimum suitable z in [2K, K^2]. Requires k >= 2.
long long d2(const Rat& k);

// 27 for k < 5, else max{2k, D2(k)} (= D2(k), since D2(k) >= 2K > 2k).
// Requires k >= -1.
long long d2_prime(const Rat& k);

PrePotential parse_potential(const std::string& text);
PrePotential load_potential_file(const std::string& path);
std::string serialize_potential(const PrePotential& p);

// Shipped potentials (embedded copies of the data files).
PrePotential builtin_general();
PrePotential builtin_bipartite();

// Validity conditions (i)-(vi), the per-(slice, degree) branch certificates,
// and the final tau(sigma_s, 12 sigma_s) <= 2 check, all in exact
// arithmetic. Sets p.validated when everything passes.
ValidationReport validate(PrePotential& p);

// f_j(m, n) for one slice (no slice selection).
Rat evaluate_f_slice(const PrePotential& p, int j, const Rat& m, const Rat& n);

// Slice-selected f(m, n); 0 when n = 0. Does not require validation (the
// slice rule is purely structural).
Rat evaluate_f(const PrePotential& p, long long m, long long n);

// f+(g): f_s when the max degree is >= 11, else the slice selected by the
// average degree; 0 on the empty graph. Requires p.validated.
Rat evaluate_f_plus(const PrePotential& p, const Graph& g);

}  // namespace iscount
