#pragma once

#include <string>

#include "iscount/rational.hpp"

namespace iscount {

// Certified check that 2^{-e1} + 2^{-e2} <= 1, i.e. the branching factor
// tau(e1, e2) is at most 2. Directed-rounding interval evaluation starting
// at 128-bit precision, doubling until the interval excludes 1; if the cap
// is reached without a decision the answer is a conservative `false`.
// Throws input_error unless e1, e2 > 0.
bool certify_tau_leq_2(const Rat& e1, const Rat& e2);

// Reporting-only approximation of the branching factor: the root x > 1 of
// x^{-e1} + x^{-e2} = 1, by 60 bisection steps. Never feeds certification.
double tau_root(const Rat& e1, const Rat& e2);

// Smallest 4-decimal value >= 2^x, as a plain decimal string (the certified
// runtime base). Precision is raised until the bound is unambiguous.
std::string pow2_ceil_4dec(const Rat& x);

// Certified check that lambda = 1 is subcritical for connective constant
// kappa: kappa^kappa / (kappa-1)^(kappa+1) > 1. Requires kappa >= 2.
bool certify_subcritical(const Rat& kappa);

}  // namespace iscount
