#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "phdec/quadext.hpp"

namespace phdec {

// Dense univariate polynomial over Q(sqrt(d)), coefficients in ascending
// powers with trailing zeros trimmed. The zero polynomial has an empty
// coefficient list and degree -1.
class ScalarPoly {
  public:
    ScalarPoly() = default;
    ScalarPoly(std::initializer_list<QuadExt> cs) : c_(cs) { trim(); }
    explicit ScalarPoly(std::vector<QuadExt> cs) : c_(std::move(cs)) { trim(); }
    explicit ScalarPoly(const QuadExt& constant) : c_{constant} { trim(); }

    static ScalarPoly zero() { return {}; }
    static ScalarPoly one() { return ScalarPoly(QuadExt(1)); }
    // t - root
    static ScalarPoly linear_root(const QuadExt& root) { return ScalarPoly({-root, QuadExt(1)}); }
    static ScalarPoly monomial(int k, const QuadExt& coeff);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    QuadExt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : QuadExt();
    }
    const std::vector<QuadExt>& coeffs() const { return c_; }
    QuadExt leading() const { return c_.empty() ? QuadExt() : c_.back(); }

    QuadExt eval(const QuadExt& t) const;

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const QuadExt& s, const ScalarPoly& p);
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }

    ScalarPoly derivative() const;
    // Antiderivative with zero constant term.
    ScalarPoly antiderivative() const;

    // Coefficients of p(t + c): shift(c).coeff(i) is the Taylor coefficient
    // of p at center c for power (t - c)^i.
    ScalarPoly shift(const QuadExt& c) const;

    ScalarPoly conj() const;
    bool is_rational() const;

    std::string str(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<QuadExt> c_;
};

// Quotient and remainder of exact division over the field; q.deg < b.deg.
struct DivRem {
    ScalarPoly quot, rem;
};
DivRem poly_divrem(const ScalarPoly& a, const ScalarPoly& b);

// Division known to be exact; raises internal error on nonzero remainder.
ScalarPoly poly_divexact(const ScalarPoly& a, const ScalarPoly& b);

// Monic gcd via the Euclidean algorithm. BothZero if both inputs vanish.
ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b);

ScalarPoly poly_pow(const ScalarPoly& p, unsigned k);

// First `count` coefficients of the power series num/den (den[0] != 0).
std::vector<QuadExt> series_div(const std::vector<QuadExt>& num, const std::vector<QuadExt>& den,
                                int count);

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);

// ---------------------------------------------------------------------------

struct Vec3 {
    QuadExt x, y, z;

    Vec3() = default;
    Vec3(QuadExt x_, QuadExt y_, QuadExt z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(const QuadExt& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend bool operator==(const Vec3& a, const Vec3& b) = default;

    Vec3 conj() const { return {x.conj(), y.conj(), z.conj()}; }

    std::string str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }
};

Vec3 cross(const Vec3& a, const Vec3& b);
QuadExt dot(const Vec3& a, const Vec3& b);
QuadExt det3(const Vec3& a, const Vec3& b, const Vec3& c);

// ---------------------------------------------------------------------------

// 3-vector-valued polynomial; component degrees are independent.
class Vec3Poly {
  public:
    Vec3Poly() = default;
    Vec3Poly(ScalarPoly x, ScalarPoly y, ScalarPoly z)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
    explicit Vec3Poly(const std::vector<Vec3>& coeffs);
    explicit Vec3Poly(const Vec3& constant) : Vec3Poly(std::vector<Vec3>{constant}) {}

    const ScalarPoly& x() const { return x_; }
    const ScalarPoly& y() const { return y_; }
    const ScalarPoly& z() const { return z_; }

    int deg() const { return std::max(x_.deg(), std::max(y_.deg(), z_.deg())); }
    bool is_zero() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }

    Vec3 coeff(int i) const { return {x_.coeff(i), y_.coeff(i), z_.coeff(i)}; }
    std::vector<Vec3> coeffs() const;

    Vec3 eval(const QuadExt& t) const { return {x_.eval(t), y_.eval(t), z_.eval(t)}; }

    Vec3Poly operator-() const { return {-x_, -y_, -z_}; }
    Vec3Poly& operator+=(const Vec3Poly& o) { x_ += o.x_; y_ += o.y_; z_ += o.z_; return *this; }
    Vec3Poly& operator-=(const Vec3Poly& o) { x_ -= o.x_; y_ -= o.y_; z_ -= o.z_; return *this; }
    friend Vec3Poly operator+(Vec3Poly a, const Vec3Poly& b) { return a += b; }
    friend Vec3Poly operator-(Vec3Poly a, const Vec3Poly& b) { return a -= b; }
    friend Vec3Poly operator*(const ScalarPoly& s, const Vec3Poly& v) {
        return {s * v.x_, s * v.y_, s * v.z_};
    }
    friend Vec3Poly operator*(const QuadExt& s, const Vec3Poly& v) {
        return {s * v.x_, s * v.y_, s * v.z_};
    }
    friend bool operator==(const Vec3Poly& a, const Vec3Poly& b) = default;

    Vec3Poly derivative() const { return {x_.derivative(), y_.derivative(), z_.derivative()}; }
    Vec3Poly antiderivative() const {
        return {x_.antiderivative(), y_.antiderivative(), z_.antiderivative()};
    }
    Vec3Poly shift(const QuadExt& c) const { return {x_.shift(c), y_.shift(c), z_.shift(c)}; }
    Vec3Poly conj() const { return {x_.conj(), y_.conj(), z_.conj()}; }
    bool is_rational() const { return x_.is_rational() && y_.is_rational() && z_.is_rational(); }

    std::string str(const std::string& var = "t") const;

  private:
    ScalarPoly x_, y_, z_;
};

Vec3Poly cross(const Vec3Poly& a, const Vec3Poly& b);
ScalarPoly dot(const Vec3Poly& a, const Vec3Poly& b);
ScalarPoly det3(const Vec3Poly& a, const Vec3Poly& b, const Vec3Poly& c);

// taylor_shift: coefficients c_i with p(t) = sum c_i (t - beta)^i.
std::vector<Vec3> taylor_shift(const Vec3Poly& p, const QuadExt& beta);

} // namespace phdec
