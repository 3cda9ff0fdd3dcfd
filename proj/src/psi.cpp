#include "iscount/psi.hpp"

#include <omp.h>

#include "iscount/errors.hpp"

namespace iscount {

long long psi_millis(int d, int p) {
    if (d < 2 || p < 2) throw precondition_error("psi_millis: degrees must be at least 2");
    switch (d) {
        case 2: return 245;
        case 3: return 456;
        case 4: return 647;
        case 5: return 859;
        default: break;
    }
    if (p == 2) return 1000;
    if (p == 3) return 941;
    return 889;
}

std::string PsiViolation::to_string() const {
    std::string s = "d=" + std::to_string(d) + " p=" + std::to_string(p) + " n[2..13]=(";
    for (int i = 0; i < 12; ++i) {
        if (i) s += ",";
        s += std::to_string(counts[i]);
    }
    s += ")";
    return s;
}

namespace {

// Enumerates child-degree profiles for fixed (d, p): counts n[2..13] with
// each n[i] <= 12 and sum = d - 1, subject to the two-degree filter, and
// records profiles violating 1000 * sum n[i] psi(i, d) > 4141 * psi(d, p).
void enumerate_dp(int d, int p, std::vector<PsiViolation>& out) {
    std::array<int, 12> counts{};
    long long rhs = 4141 * psi_millis(d, p);

    // idx walks degrees 2..13; remaining children and weighted degree sum
    // are carried along.
    auto rec = [&](auto&& self, int idx, int remaining, long long child_deg_sum,
                   long long lhs_millis) -> void {
        if (idx == 12) {
            if (remaining != 0) return;
            if (d > 5 && p + child_deg_sum > 26) return;
            if (1000 * lhs_millis > rhs) {
                PsiViolation v;
                v.counts = counts;
                v.d = d;
                v.p = p;
                out.push_back(v);
            }
            return;
        }
        int degree = idx + 2;
        int cap = remaining < 12 ? remaining : 12;
        for (int c = 0; c <= cap; ++c) {
            counts[idx] = c;
            self(self, idx + 1, remaining - c, child_deg_sum + static_cast<long long>(c) * degree,
                 lhs_millis + c * psi_millis(degree, d));
        }
        counts[idx] = 0;
    };
    rec(rec, 0, d - 1, 0, 0);
}

}  // namespace

std::vector<PsiViolation> verify_psi_kappa_serial() {
    std::vector<PsiViolation> out;
    for (int d = 2; d <= 13; ++d)
        for (int p = 2; p <= 13; ++p) enumerate_dp(d, p, out);
    return out;
}

std::vector<PsiViolation> verify_psi_kappa() {
    // 144 independent (d, p) cells, merged in deterministic order.
    std::vector<std::vector<PsiViolation>> cells(144);
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < 144; ++idx) enumerate_dp(2 + idx / 12, 2 + idx % 12, cells[idx]);

    std::vector<PsiViolation> out;
    for (const auto& cell : cells) out.insert(out.end(), cell.begin(), cell.end());
    return out;
}

}  // namespace iscount
