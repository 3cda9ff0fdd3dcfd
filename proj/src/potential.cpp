#include "iscount/potential.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "iscount/builtin_potentials.hpp"
#include "iscount/errors.hpp"
#include "iscount/interval.hpp"

namespace iscount {

namespace {

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<Rat> parse_value_line(const std::string& line, int line_no) {
    std::vector<Rat> out;
    if (trim(line).empty()) return out;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            out.push_back(parse_number(trim(token)));
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

Rat aad_star(const Rat& k, const std::vector<long long>& x) {
    if (x.empty()) throw input_error("aad_star: empty tuple");
    long long d = static_cast<long long>(x.size());
    long long small = 0;
    Rat recip = 0;
    for (long long xi : x) {
        if (xi <= 0) throw input_error("aad_star: entries must be positive");
        if (Rat(static_cast<long>(xi)) < k) {
            ++small;
            recip += Rat(1) / static_cast<long>(xi);
        }
    }
    return Rat(static_cast<long>(d + small)) / (1 + recip);
}

std::optional<SuitabilityWitness> is_suitable(const Rat& k, long long z) {
    if (k < 2) throw precondition_error("is_suitable: k must be at least 2");
    long long K = rat_floor(k).get_si() + 1;
    if (z >= K * K) return SuitabilityWitness{};  // trivial branch, d = 0

    for (long long d = K; 2 * d <= z; ++d) {
        for (long long s = 0; s <= d - 1; ++s) {
            long long rem = z - K * s;
            long long den = d - s;
            if (rem < 2 * den) break;  // rem only shrinks as s grows
            if (rem > (K - 1) * den) continue;
            long long q = rem / den;
            long long d1 = rem % den;
            long long d0 = den - d1;
            Rat b = 1 + Rat(static_cast<long>(d0)) / static_cast<long>(q) +
                    Rat(static_cast<long>(d1)) / static_cast<long>(q + 1);
            if (Rat(static_cast<long>(d + d0 + d1)) > k * b)
                return SuitabilityWitness{d, s, q, d0, d1};
        }
    }
    return std::nullopt;
}

long long d2(const Rat& k) {
    if (k < 2) throw input_error("d2: k must be at least 2");
    long long K = rat_floor(k).get_si() + 1;
    for (long long z = 2 * K; z <= K * K; ++z)
        if (is_suitable(k, z)) return z;
    throw internal_error("d2: no suitable z up to K^2");
}

long long d2_prime(const Rat& k) {
    if (k < -1) throw input_error("d2_prime: k must be at least -1");
    if (k < 5) return 27;
    long long d = d2(k);
    if (2 * k > Rat(static_cast<long>(d)))
        throw internal_error("d2_prime: 2k exceeds D2(k)");
    return d;
}

PrePotential parse_potential(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::stringstream ss(text);
    while (std::getline(ss, line)) lines.push_back(line);
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

    PrePotential p;
    std::size_t pos = 0;
    if (!lines.empty() && trim(lines[0]) == "Bipartite") {
        p.bipartite = true;
        pos = 1;
    }
    if (lines.size() < pos + 2)
        throw input_error("line " + std::to_string(lines.size() + 1) +
                          ": expected value lines (rho, sigma, boundaries)");
    if (lines.size() > pos + 3)
        throw input_error("line " + std::to_string(pos + 4) + ": unexpected extra line");

    p.rho = parse_value_line(lines[pos], static_cast<int>(pos) + 1);
    p.sigma = parse_value_line(lines[pos + 1], static_cast<int>(pos) + 2);
    if (lines.size() == pos + 3)
        p.boundaries = parse_value_line(lines[pos + 2], static_cast<int>(pos) + 3);

    if (p.rho.empty())
        throw input_error("line " + std::to_string(pos + 1) + ": at least one slice is required");
    if (p.sigma.size() != p.rho.size())
        throw input_error("line " + std::to_string(pos + 2) + ": expected " +
                          std::to_string(p.rho.size()) + " sigma values, got " +
                          std::to_string(p.sigma.size()));
    if (p.boundaries.size() + 1 != p.rho.size())
        throw input_error("line " + std::to_string(pos + 3) + ": expected " +
                          std::to_string(p.rho.size() - 1) + " boundary values, got " +
                          std::to_string(p.boundaries.size()));
    for (std::size_t i = 1; i < p.boundaries.size(); ++i)
        if (!(p.boundaries[i - 1] < p.boundaries[i]))
            throw input_error("line " + std::to_string(pos + 3) +
                              ": boundaries must be strictly increasing");
    return p;
}

PrePotential load_potential_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open potential file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_potential(buf.str());
}

std::string serialize_potential(const PrePotential& p) {
    auto join = [](const std::vector<Rat>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += to_token(v[i]);
        }
        return s;
    };
    std::string out;
    if (p.bipartite) out += "Bipartite\n";
    out += join(p.rho) + "\n" + join(p.sigma) + "\n" + join(p.boundaries) + "\n";
    return out;
}

PrePotential builtin_general() { return parse_potential(detail::kGeneralPotentialCsv); }

PrePotential builtin_bipartite() { return parse_potential(detail::kBipartitePotentialCsv); }

ValidationReport validate(PrePotential& p) {
    ValidationReport r;
    p.validated = false;

    bool structure = !p.rho.empty() && p.sigma.size() == p.rho.size() &&
                     p.boundaries.size() + 1 == p.rho.size();
    for (std::size_t i = 1; structure && i < p.boundaries.size(); ++i)
        if (!(p.boundaries[i - 1] < p.boundaries[i])) structure = false;
    r.conditions.push_back({"structure", structure,
                            structure ? "" : "slice/boundary counts inconsistent or not ascending"});
    if (!structure) return r;

    int s = p.slices();
    const Rat& rho_s = p.rho[s - 1];
    const Rat& sigma_s = p.sigma[s - 1];
    r.sigma_s = sigma_s;

    {
        bool ok = rho_s == 0 && sigma_s > 0;
        r.conditions.push_back(
            {"(i)", ok, ok ? "" : "requires rho_s = 0 and sigma_s > 0"});
    }
    {
        bool ok = true;
        std::string msg;
        for (int i = 0; i + 1 < s; ++i)
            if (p.rho[i] + p.sigma[i] < 0) {
                ok = false;
                msg = "rho_" + std::to_string(i + 1) + " + sigma_" + std::to_string(i + 1) +
                      " < 0";
                break;
            }
        r.conditions.push_back({"(ii)", ok, msg});
    }
    {
        bool ok = true;
        std::string msg;
        for (int i = 0; i + 1 < s; ++i)
            if (p.rho[i] == 0 && p.sigma[i] == 0) {
                ok = false;
                msg = "slice " + std::to_string(i + 1) + " is identically zero";
                break;
            }
        r.conditions.push_back({"(iii)", ok, msg});
    }
    {
        bool ok = true;
        std::string msg;
        for (int i = 0; i + 1 < s; ++i) {
            if (p.rho[i] < p.rho[i + 1]) {
                ok = false;
                msg = "rho increases at slice " + std::to_string(i + 2);
                break;
            }
            if (p.sigma[i] > p.sigma[i + 1]) {
                ok = false;
                msg = "sigma decreases at slice " + std::to_string(i + 2);
                break;
            }
        }
        r.conditions.push_back({"(iv)", ok, msg});
    }
    {
        bool ok = true;
        std::string msg;
        if (s >= 2) {
            long long top = rat_floor(p.boundaries.back()).get_si();
            for (long long t = 6; t <= top; ++t) {
                bool found = false;
                for (const Rat& b : p.boundaries)
                    if (b == Rat(static_cast<long>(t))) {
                        found = true;
                        break;
                    }
                if (!found) {
                    ok = false;
                    msg = "integer " + std::to_string(t) + " in [6, k_{s-1}] is not a boundary";
                    break;
                }
            }
        }
        r.conditions.push_back({"(v)", ok, msg});
    }
    {
        bool ok = true;
        std::string msg;
        for (int i = 0; i + 1 < s; ++i) {
            const Rat& k = p.boundaries[i];
            if (k == 0) {
                ok = false;
                msg = "boundary k_" + std::to_string(i + 1) + " is zero";
                break;
            }
            if (p.rho[i] != p.rho[i + 1] + 2 * (p.sigma[i + 1] - p.sigma[i]) / k) {
                ok = false;
                msg = "recurrence fails at slice " + std::to_string(i + 1);
                break;
            }
        }
        r.conditions.push_back({"(vi)", ok, msg});
    }

    // Per-slice branch certificates for d in [max{6, floor(k_{i-1}) + 1}, 10].
    for (int i = 1; i <= s; ++i) {
        Rat k_lo = (i == 1) ? Rat(-1) : p.boundaries[i - 2];
        long long dlo = std::max<long long>(6, rat_floor(k_lo).get_si() + 1);
        if (dlo > 10) continue;
        long long d2p = d2_prime(k_lo);
        const Rat& rho = p.rho[i - 1];
        const Rat& sigma = p.sigma[i - 1];
        for (long long d = dlo; d <= 10; ++d) {
            BranchCertificate cert;
            cert.slice_index = i;
            cert.degree = static_cast<int>(d);
            cert.exp_out = rho * static_cast<long>(d) + sigma;
            if (!p.bipartite) {
                long long m2 = (d + d2p + 3 + 1) / 2;  // ceil((d + D2' + 3) / 2)
                cert.exp_in =
                    rho * static_cast<long>(m2) + sigma * static_cast<long>(1 + d);
            } else if (sigma >= 0) {
                cert.exp_in =
                    rho * static_cast<long>(d2p) + sigma * static_cast<long>(1 + d);
            } else {
                long long m2 = (d + d2p - 1) / 2;  // floor
                cert.exp_in =
                    rho * static_cast<long>(d2p) + sigma * static_cast<long>(m2);
            }
            cert.certified = cert.exp_out > 0 && cert.exp_in > 0 &&
                             certify_tau_leq_2(cert.exp_out, cert.exp_in);
            r.certificates.push_back(cert);
        }
    }

    r.final_tau = sigma_s > 0 && certify_tau_leq_2(sigma_s, 12 * sigma_s);
    r.exponent = to_decimal_string(sigma_s, 4);
    r.base = pow2_ceil_4dec(sigma_s);

    bool all_conditions = true;
    for (const auto& c : r.conditions) all_conditions &= c.passed;
    bool all_certs = true;
    for (const auto& c : r.certificates) all_certs &= c.certified;
    r.passed = all_conditions && all_certs && r.final_tau;
    p.validated = r.passed;
    return r;
}

std::string ValidationReport::runtime_line() const {
    return "running time O(2^(" + exponent + " n)) * poly(1/eps)";
}

std::string ValidationReport::to_text() const {
    std::string out;
    for (const auto& c : conditions) {
        out += (c.name == "structure" ? c.name : "condition " + c.name);
        out += c.passed ? ": PASS" : ": FAIL - " + c.message;
        out += "\n";
    }
    if (conditions.size() > 1 || passed) {
        int ok = 0;
        for (const auto& c : certificates) ok += c.certified;
        out += "branch certificates: " + std::to_string(ok) + "/" +
               std::to_string(certificates.size()) + " certified\n";
        for (const auto& c : certificates)
            if (!c.certified)
                out += "  slice " + std::to_string(c.slice_index) + " d=" +
                       std::to_string(c.degree) + ": FAIL (exp_out=" + to_token(c.exp_out) +
                       ", exp_in=" + to_token(c.exp_in) + ")\n";
        std::string tau;
        if (sigma_s > 0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4f", tau_root(sigma_s, 12 * sigma_s));
            tau = " (tau ~= " + std::string(buf) + ")";
        }
        out += "final tau(sigma_s, 12*sigma_s) <= 2: ";
        out += final_tau ? "PASS" : "FAIL";
        out += tau + "\n";
        out += "sigma_s = " + to_token(sigma_s) + "\n";
        out += "exponent " + exponent + "\n";
        if (passed) {
            out += "base " + base + "\n";
            out += runtime_line() + "\n";
        }
    }
    return out;
}

Rat evaluate_f_slice(const PrePotential& p, int j, const Rat& m, const Rat& n) {
    if (j < 1 || j > p.slices())
        throw precondition_error("evaluate_f_slice: slice index out of range");
    return p.rho[j - 1] * m + p.sigma[j - 1] * n;
}

Rat evaluate_f(const PrePotential& p, long long m, long long n) {
    if (n == 0) return 0;
    Rat avg = Rat(2 * Int(static_cast<long>(m))) / Int(static_cast<long>(n));
    std::size_t i = 0;
    while (i < p.boundaries.size() && avg > p.boundaries[i]) ++i;
    return p.rho[i] * static_cast<long>(m) + p.sigma[i] * static_cast<long>(n);
}

Rat evaluate_f_plus(const PrePotential& p, const Graph& g) {
    if (!p.validated) throw precondition_error("evaluate_f_plus: potential not validated");
    if (g.empty()) return 0;
    long long m = g.num_edges();
    long long n = g.num_vertices();
    if (g.max_degree() >= 11)
        return p.rho.back() * static_cast<long>(m) + p.sigma.back() * static_cast<long>(n);
    return evaluate_f(p, m, n);
}

}  // namespace iscount
