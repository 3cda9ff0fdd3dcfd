#include "iscount/interval.hpp"

#include <mpfr.h>

#include "iscount/errors.hpp"

namespace iscount {

namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kPrecCap = 4096;

// 2^{-e} rounded in the requested direction (e > 0).
void pow2_neg(mpfr_t rop, const Rat& e, mpfr_rnd_t rnd) {
    Rat minus_e = -e;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(rop));
    mpfr_set_q(t, minus_e.get_mpq_t(), rnd);  // exp2 is increasing
    mpfr_exp2(rop, t, rnd);
    mpfr_clear(t);
}

}  // namespace

bool certify_tau_leq_2(const Rat& e1, const Rat& e2) {
    if (e1 <= 0 || e2 <= 0)
        throw input_error("certify_tau_leq_2: exponents must be positive");

    for (mpfr_prec_t prec = kStartPrec; prec <= kPrecCap; prec *= 2) {
        mpfr_t a, b, hi, lo;
        mpfr_inits2(prec, a, b, hi, lo, static_cast<mpfr_ptr>(nullptr));

        pow2_neg(a, e1, MPFR_RNDU);
        pow2_neg(b, e2, MPFR_RNDU);
        mpfr_add(hi, a, b, MPFR_RNDU);

        pow2_neg(a, e1, MPFR_RNDD);
        pow2_neg(b, e2, MPFR_RNDD);
        mpfr_add(lo, a, b, MPFR_RNDD);

        bool le = mpfr_cmp_ui(hi, 1) <= 0;
        bool gt = mpfr_cmp_ui(lo, 1) > 0;
        mpfr_clears(a, b, hi, lo, static_cast<mpfr_ptr>(nullptr));
        if (le) return true;
        if (gt) return false;
    }
    return false;  // undecided at the cap: conservative
}

double tau_root(const Rat& e1, const Rat& e2) {
    if (e1 <= 0 || e2 <= 0) throw input_error("tau_root: exponents must be positive");

    constexpr mpfr_prec_t prec = 128;
    mpfr_t x, p1, p2, f1, f2, sum;
    mpfr_inits2(prec, x, p1, p2, f1, f2, sum, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(p1, Rat(-e1).get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(p2, Rat(-e2).get_mpq_t(), MPFR_RNDN);

    // g(x) = x^{-e1} + x^{-e2} - 1 is decreasing for x > 1.
    auto g_positive = [&](double v) {
        mpfr_set_d(x, v, MPFR_RNDN);
        mpfr_pow(f1, x, p1, MPFR_RNDN);
        mpfr_pow(f2, x, p2, MPFR_RNDN);
        mpfr_add(sum, f1, f2, MPFR_RNDN);
        return mpfr_cmp_ui(sum, 1) > 0;
    };

    double lo = 1.0, hi = 2.0;
    while (g_positive(hi) && hi < 1e18) {
        lo = hi;
        hi *= 2;
    }
    for (int it = 0; it < 60; ++it) {
        double mid = (lo + hi) / 2;
        if (g_positive(mid))
            lo = mid;
        else
            hi = mid;
    }
    double root = (lo + hi) / 2;
    mpfr_clears(x, p1, p2, f1, f2, sum, static_cast<mpfr_ptr>(nullptr));
    return root;
}

std::string pow2_ceil_4dec(const Rat& x) {
    for (mpfr_prec_t prec = kStartPrec; prec <= kPrecCap; prec *= 2) {
        mpfr_t t, lo, hi;
        mpfr_inits2(prec, t, lo, hi, static_cast<mpfr_ptr>(nullptr));

        mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDD);
        mpfr_exp2(lo, t, MPFR_RNDD);
        mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDU);
        mpfr_exp2(hi, t, MPFR_RNDU);

        mpfr_mul_ui(lo, lo, 10000, MPFR_RNDD);
        mpfr_mul_ui(hi, hi, 10000, MPFR_RNDU);
        mpfr_ceil(lo, lo);
        mpfr_ceil(hi, hi);

        Int clo, chi;
        mpfr_get_z(clo.get_mpz_t(), lo, MPFR_RNDN);
        mpfr_get_z(chi.get_mpz_t(), hi, MPFR_RNDN);
        mpfr_clears(t, lo, hi, static_cast<mpfr_ptr>(nullptr));

        if (clo == chi) {
            Int q = chi / 10000, r = chi % 10000;
            std::string frac = r.get_str();
            frac.insert(0, 4 - frac.size(), '0');
            return q.get_str() + "." + frac;
        }
    }
    throw internal_error("pow2_ceil_4dec: precision cap reached without a stable bound");
}

bool certify_subcritical(const Rat& kappa) {
    if (kappa < 2) throw input_error("certify_subcritical: kappa must be at least 2");

    for (mpfr_prec_t prec = kStartPrec; prec <= kPrecCap; prec *= 2) {
        mpfr_t base, expo, num, den;
        mpfr_inits2(prec, base, expo, num, den, static_cast<mpfr_ptr>(nullptr));

        // Lower bound of kappa^kappa (increasing in base >= 1 and exponent).
        mpfr_set_q(base, kappa.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(expo, kappa.get_mpq_t(), MPFR_RNDD);
        mpfr_pow(num, base, expo, MPFR_RNDD);

        // Upper bound of (kappa-1)^(kappa+1); kappa >= 2 keeps the base >= 1.
        mpfr_set_q(base, Rat(kappa - 1).get_mpq_t(), MPFR_RNDU);
        mpfr_set_q(expo, Rat(kappa + 1).get_mpq_t(), MPFR_RNDU);
        mpfr_pow(den, base, expo, MPFR_RNDU);

        bool greater = mpfr_cmp(num, den) > 0;
        mpfr_clears(base, expo, num, den, static_cast<mpfr_ptr>(nullptr));
        if (greater) return true;
    }
    return false;
}

}  // namespace iscount
