#pragma once

#include <array>
#include <string>
#include <vector>

namespace iscount {

// psi(d, p) in thousandths: the SAW-tree node labels used by the kappa =
// 4141/1000 connective-constant certificate. d >= 2 is the vertex degree,
// p >= 2 the degree of the predecessor vertex (ignored for d <= 5).
long long psi_millis(int d, int p);

// One admissible child profile violating the kappa-decreasing inequality:
// counts[i] children of degree i+2 (i = 0..11), vertex degree d = 1 + sum,
// predecessor degree p.
struct PsiViolation {
    std::array<int, 12> counts{};
    int d = 0;
    int p = 0;
    std::string to_string() const;
};

// Exhaustively enumerates every admissible (n[2..13], d, p) tuple — each
// n[i] in [0,12], 1 + sum n[i] = d, d and p in [2,13], and either d <= 5 or
// p + sum i*n[i] <= 26 — and returns the tuples with
// 1000 * sum n[i]*psi(i,d) > 4141 * psi(d,p). Expected empty.
std::vector<PsiViolation> verify_psi_kappa();

// Single-threaded reference implementation.
std::vector<PsiViolation> verify_psi_kappa_serial();

}  // namespace iscount
