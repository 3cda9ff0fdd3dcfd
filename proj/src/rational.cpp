#include "iscount/rational.hpp"

#include <cctype>

#include "iscount/errors.hpp"

namespace iscount {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_number(const std::string& token) {
    std::string s = token;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw input_error("empty number token '" + token + "'");

    // Build integers with an explicit base: the string constructor would
    // otherwise treat a leading zero (as in "0.125" -> "0125") as octal.
    auto decimal_int = [](const std::string& digits) { return Int(digits, 10); };

    Rat value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw input_error("malformed fraction '" + token + "'");
        Int d = decimal_int(den);
        if (d == 0) throw input_error("zero denominator in '" + token + "'");
        value = Rat(decimal_int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || !all_digits(fp))
            throw input_error("malformed decimal '" + token + "'");
        value = Rat(decimal_int(ip + fp), pow_int(10, fp.size()));
    } else {
        if (!all_digits(s)) throw input_error("malformed number '" + token + "'");
        value = Rat(decimal_int(s));
    }
    value.canonicalize();
    return neg ? Rat(-value) : value;
}

std::string to_token(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_decimal_string(const Rat& x, int digits) {
    if (digits < 0) throw precondition_error("to_decimal_string: negative digit count");
    bool neg = x < 0;
    Rat a = neg ? Rat(-x) : x;
    Int scale = pow_int(10, digits);
    // n = |x| * 10^digits rounded to the nearest integer, ties to even.
    Int p = a.get_num() * scale, q = a.get_den();
    Int n, r;
    mpz_fdiv_qr(n.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    Int twice = 2 * r;
    if (twice > q || (twice == q && mpz_odd_p(n.get_mpz_t())))
        n += 1;
    Int ip = n / scale, fp = n % scale;
    std::string out = (neg && n != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string f = fp.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

long floor_log(const Rat& base, const Rat& x) {
    if (base <= 1) throw precondition_error("floor_log: base must exceed 1");
    if (x < 1) throw precondition_error("floor_log: argument must be >= 1");
    // Find hi with base^hi > x by repeated squaring, then binary search on
    // the invariant base^lo <= x < base^hi.
    long hi = 1;
    Rat pow_hi = base;
    while (pow_hi <= x) {
        hi *= 2;
        pow_hi *= pow_hi;
    }
    long lo = 0;
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (pow_rat(base, mid) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw precondition_error("pow_rat: 0 to a negative power");
    unsigned long mag = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag);
    Rat r = e > 0 ? Rat(num, den) : Rat(den, num);
    r.canonicalize();
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace iscount
