#include "phdec/rational.hpp"

#include <cctype>
#include <ostream>

namespace phdec {

static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational Rational::from_string(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) raise(errc::parse_error, "empty rational literal");

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s = s.substr(1);
    }

    auto slash = s.find('/');
    auto dot = s.find('.');
    mpq_class q;
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), d = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(d)) raise(errc::parse_error, "bad rational literal '" + input + "'");
        q = mpq_class(mpz_class(p), mpz_class(d));
        if (q.get_den() == 0) raise(errc::division_by_zero, "zero denominator in '" + input + "'");
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!all_digits(ip) || !all_digits(fp)) raise(errc::parse_error, "bad decimal literal '" + input + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        q = mpq_class(mpz_class(ip) * scale + mpz_class(fp), scale);
    } else {
        if (!all_digits(s)) raise(errc::parse_error, "bad integer literal '" + input + "'");
        q = mpq_class(mpz_class(s));
    }
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
}

std::string Rational::decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class n = num() * scale, d = den();
    bool neg = sgn(n) < 0;
    if (neg) n = -n;

    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    // round half to even on the exact remainder
    mpz_class twice = 2 * r;
    int c = cmp(twice, d);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string digits_str = q.get_str();
    std::string out;
    if (digits == 0) {
        out = digits_str;
    } else {
        if (digits_str.size() <= digits) digits_str.insert(0, digits + 1 - digits_str.size(), '0');
        out = digits_str.substr(0, digits_str.size() - digits) + "." + digits_str.substr(digits_str.size() - digits);
    }
    if (neg && q != 0) out.insert(0, 1, '-');
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace phdec
