#pragma once

#include <iosfwd>
#include <string>

#include "phdec/rational.hpp"

namespace phdec {

// Element of the quadratic extension Q(sqrt(d)) for a fixed rational d < 0,
// stored as re + im*sqrt(d). A purely rational value is normalized to d = 0,
// so it interoperates with any radicand; two values with nonzero radicands
// combine only when the radicands agree (MixedRadicand otherwise).
//
// The radicand is kept squarefree-reduced (small square factors are pulled
// into im) so that equal field elements compare equal across input spellings.
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(long n) : re_(n) {}
    QuadExt(const Rational& r) : re_(r) {}
    QuadExt(Rational re, Rational im, Rational d);

    static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }
    // i = sqrt(-1), the Gaussian unit.
    static QuadExt gauss_i() { return sqrt_of(Rational(-1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    QuadExt conj() const { return QuadExt(re_, -im_, d_); }
    // re^2 - im^2 d, the field norm; positive for nonzero values since d < 0.
    Rational norm() const { return re_ * re_ - im_ * im_ * d_; }

    QuadExt operator-() const { return QuadExt(-re_, -im_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_ && (a.im_.is_zero() || a.d_ == b.d_);
    }

    QuadExt inv() const;

    std::string str() const;

  private:
    // Picks the shared radicand of two operands, raising on a true mix.
    static Rational join(const Rational& a, const Rational& b);

    Rational re_, im_, d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

} // namespace phdec
