#include "phdec/quadext.hpp"

#include <ostream>

namespace phdec {

// Pulls square factors below this bound out of the radicand.
static const unsigned long kSquarefreeTrialBound = 4096;

static void pull_squares(mpz_class& n, mpz_class& sq) {
    sq = 1;
    if (n == 0) return;
    mpz_class an = abs(n);
    for (unsigned long p = 2; p <= kSquarefreeTrialBound; p = (p == 2 ? 3 : p + 2)) {
        mpz_class pp = mpz_class(p) * p;
        if (pp > an) break;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            sq *= p;
            an = abs(n);
        }
    }
}

QuadExt::QuadExt(Rational re, Rational im, Rational d) : re_(std::move(re)), im_(std::move(im)), d_(std::move(d)) {
    if (im_.is_zero()) {
        d_ = Rational(0);
        return;
    }
    if (d_.sign() >= 0)
        raise(errc::parse_error, "radicand must be negative, got d = " + d_.str());
    // d = (a/b) = (a*b)/b^2: normalize to an integer radicand, then strip squares.
    mpz_class a = d_.num(), b = d_.den();
    mpz_class n = a * b, sq;
    pull_squares(n, sq);
    d_ = Rational(mpq_class(n));
    im_ = im_ * Rational(mpq_class(sq, b));
}

Rational QuadExt::join(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a != b) raise(errc::mixed_radicand, "sqrt(" + a.str() + ") vs sqrt(" + b.str() + ")");
    return a;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join(d_, o.d_);
    re_ += o.re_;
    im_ += o.im_;
    if (im_.is_zero()) d_ = Rational(0);
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join(d_, o.d_);
    re_ -= o.re_;
    im_ -= o.im_;
    if (im_.is_zero()) d_ = Rational(0);
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Rational d = join(d_, o.d_);
    Rational re = re_ * o.re_ + im_ * o.im_ * d;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    d_ = im_.is_zero() ? Rational(0) : d;
    return *this;
}

QuadExt QuadExt::inv() const {
    if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
    Rational n = norm();
    return QuadExt(re_ / n, -im_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inv(); }

std::string QuadExt::str() const {
    if (is_rational()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str();
    if (im_.sign() >= 0 && !s.empty()) s += "+";
    if (im_ == Rational(-1))
        s += "-";
    else if (im_ != Rational(1))
        s += im_.str() + "*";
    s += "sqrt(" + d_.str() + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

} // namespace phdec
