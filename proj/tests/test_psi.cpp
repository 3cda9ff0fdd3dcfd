#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <iscount/errors.hpp>
#include <iscount/psi.hpp>
#include <string>
#include <vector>

using iscount::PsiViolation;
using iscount::psi_millis;

namespace {

// Independent re-enumeration of the admissible domain, written as an explicit
// stack machine over degrees 13 down to 2 (the library recurses 2 up to 13).
// Takes the psi table as a parameter so the table itself can be perturbed to
// confirm the check is sensitive.
struct DomainScan {
    long long (*psi)(int d, int p);
    long long admissible = 0;
    std::vector<PsiViolation> violations;

    void run(int d_lo = 2, int d_hi = 13) {
        std::array<int, 12> counts{};
        for (int d = d_lo; d <= d_hi; ++d)
            for (int p = 2; p <= 13; ++p) cell(d, p, 11, d - 1, counts);
    }

    void cell(int d, int p, int idx, int remaining, std::array<int, 12>& counts) {
        if (idx < 0) {
            if (remaining != 0) return;
            long long weighted = 0, lhs = 0;
            for (int i = 0; i < 12; ++i) {
                weighted += static_cast<long long>(counts[i]) * (i + 2);
                lhs += counts[i] * psi(i + 2, d);
            }
            if (d > 5 && p + weighted > 26) return;
            ++admissible;
            if (1000 * lhs > 4141 * psi(d, p)) {
                PsiViolation v;
                v.counts = counts;
                v.d = d;
                v.p = p;
                violations.push_back(v);
            }
            return;
        }
        int cap = remaining < 12 ? remaining : 12;
        for (int c = cap; c >= 0; --c) {
            counts[idx] = c;
            cell(d, p, idx - 1, remaining - c, counts);
        }
        counts[idx] = 0;
    }
};

long long psi_table_default(int d, int p) { return psi_millis(d, p); }

// Same table with psi(5, .) lowered by one thousandth.
long long psi_table_perturbed(int d, int p) { return d == 5 ? 858 : psi_millis(d, p); }

bool same_violation(const PsiViolation& a, const PsiViolation& b) {
    return a.d == b.d && a.p == b.p && a.counts == b.counts;
}

}  // namespace

TEST_CASE("psi table values in thousandths") {
    for (int p = 2; p <= 13; ++p) {
        CHECK(psi_millis(2, p) == 245);
        CHECK(psi_millis(3, p) == 456);
        CHECK(psi_millis(4, p) == 647);
        CHECK(psi_millis(5, p) == 859);
    }
    for (int d = 6; d <= 13; ++d) {
        CHECK(psi_millis(d, 2) == 1000);
        CHECK(psi_millis(d, 3) == 941);
        for (int p = 4; p <= 13; ++p) CHECK(psi_millis(d, p) == 889);
    }
    CHECK_THROWS_AS(psi_millis(1, 2), iscount::precondition_error);
    CHECK_THROWS_AS(psi_millis(2, 1), iscount::precondition_error);
    CHECK_THROWS_AS(psi_millis(0, 0), iscount::precondition_error);
}

TEST_CASE("single-child instantiation at d=2 satisfies the inequality") {
    // One child of degree 6 under a degree-2 vertex with degree-2 predecessor:
    // 1 <= 4.141 * 0.245 = 1.014545, i.e. 1000*1000 <= 4141*245.
    CHECK(1000 * psi_millis(6, 2) == 1000000);
    CHECK(4141 * psi_millis(2, 2) == 1014545);
    CHECK(1000 * psi_millis(6, 2) <= 4141 * psi_millis(2, 2));
}

TEST_CASE("the tightest admissible profiles satisfy the inequality with small margin") {
    // d-1 children of degree >= 6 for d in 2..5 (no weighted-degree filter there):
    // margins in millionths are 14545, 6296, 12227, 1119.
    CHECK(4141 * psi_millis(2, 13) - 1000 * (1 * psi_millis(6, 2)) == 14545);
    CHECK(4141 * psi_millis(3, 13) - 1000 * (2 * psi_millis(6, 3)) == 6296);
    CHECK(4141 * psi_millis(4, 13) - 1000 * (3 * psi_millis(6, 4)) == 12227);
    CHECK(4141 * psi_millis(5, 13) - 1000 * (4 * psi_millis(6, 5)) == 1119);

    // d = 6, p = 3: children (5,5,5,5,3) has weighted degree sum 23, so
    // p + 23 = 26 passes the filter; margin 4681.
    CHECK(4141 * psi_millis(6, 3) - 1000 * (4 * psi_millis(5, 6) + psi_millis(3, 6)) == 4681);
    // d = 6, p = 2: children (5,5,5,5,4), weighted sum 24, 2 + 24 = 26; margin 58000.
    CHECK(4141 * psi_millis(6, 2) - 1000 * (4 * psi_millis(5, 6) + psi_millis(4, 6)) == 58000);

    // The binding constraint of the whole system: d = 6, p = 4, children
    // (2,5,5,5,5), weighted sum 22, 4 + 22 = 26; margin 349 millionths.
    CHECK(4141 * psi_millis(6, 4) - 1000 * (psi_millis(2, 6) + 4 * psi_millis(5, 6)) == 349);
}

TEST_CASE("profiles excluded by the weighted-degree filter would otherwise violate") {
    // d = 6, p = 2, five children of degree 5: weighted sum 25, 2 + 25 = 27 > 26,
    // so the tuple is inadmissible -- and indeed 5*0.859 = 4.295 > 4.141.
    CHECK(1000 * (5 * psi_millis(5, 6)) > 4141 * psi_millis(6, 2));
    CHECK(2 + 5 * 5 > 26);

    // d = 13, p = 4, twelve children of degree 6: wildly violating, excluded
    // because 4 + 72 > 26.
    CHECK(1000 * (12 * psi_millis(6, 13)) > 4141 * psi_millis(13, 4));
    CHECK(4 + 12 * 6 > 26);
}

TEST_CASE("exhaustive verification finds no counterexample") {
    std::vector<PsiViolation> par = iscount::verify_psi_kappa();
    CHECK(par.empty());
    for (const auto& v : par) MESSAGE(v.to_string());
}

TEST_CASE("serial reference matches the parallel kernel") {
    std::vector<PsiViolation> ser = iscount::verify_psi_kappa_serial();
    std::vector<PsiViolation> par = iscount::verify_psi_kappa();
    REQUIRE(ser.size() == par.size());
    for (std::size_t i = 0; i < ser.size(); ++i) CHECK(same_violation(ser[i], par[i]));
    CHECK(ser.empty());
}

TEST_CASE("independent domain scan agrees: no violations, 24607 admissible tuples") {
    DomainScan scan{psi_table_default};
    scan.run();
    CHECK(scan.violations.empty());
    // d <= 5 contributes 12 * (C(12,11) + C(13,11) + C(14,11) + C(15,11)) = 21828
    // tuples (no weighted-degree filter); d > 5 only 2779 more, because d-1 >= 5
    // children of degree >= 2 already weigh 2(d-1) against the p + sum <= 26 cap.
    CHECK(scan.admissible == 24607);
}

TEST_CASE("the scan is sensitive: lowering psi(5) by one thousandth creates violations") {
    DomainScan scan{psi_table_perturbed};
    scan.run(5, 5);  // only d = 5 cells can become violating via psi(5,.) on the rhs
    CHECK(!scan.violations.empty());
    bool found = false;
    for (const auto& v : scan.violations) {
        std::array<int, 12> four_sixes{};
        four_sixes[4] = 4;
        if (v.d == 5 && v.counts == four_sixes) found = true;
    }
    CHECK(found);
}

TEST_CASE("violation formatting") {
    PsiViolation v;
    v.d = 6;
    v.p = 3;
    v.counts = {0, 1, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK(v.to_string() == "d=6 p=3 n[2..13]=(0,1,0,4,0,0,0,0,0,0,0,0)");
}
