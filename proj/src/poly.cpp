#include "phdec/poly.hpp"

#include <ostream>

namespace phdec {

ScalarPoly ScalarPoly::monomial(int k, const QuadExt& coeff) {
    if (coeff.is_zero() || k < 0) return {};
    std::vector<QuadExt> c(k + 1);
    c[k] = coeff;
    return ScalarPoly(std::move(c));
}

QuadExt ScalarPoly::eval(const QuadExt& t) const {
    QuadExt acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<QuadExt> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ScalarPoly(std::move(c));
}

ScalarPoly operator*(const QuadExt& s, const ScalarPoly& p) {
    if (s.is_zero()) return {};
    ScalarPoly r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
}

ScalarPoly ScalarPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<QuadExt> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = QuadExt(Rational(static_cast<long>(i))) * c_[i];
    return ScalarPoly(std::move(c));
}

ScalarPoly ScalarPoly::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<QuadExt> c(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = QuadExt(Rational(1, static_cast<long>(i + 1))) * c_[i];
    return ScalarPoly(std::move(c));
}

ScalarPoly ScalarPoly::shift(const QuadExt& c) const {
    // Ruffini-Horner: repeatedly divide by (t - (-c)) ... i.e. evaluate the
    // Taylor coefficients of p(t + c) by synthetic division.
    std::vector<QuadExt> a = c_;
    if (a.empty()) return {};
    std::vector<QuadExt> out(a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        for (size_t i = a.size() - 1; i > k; --i) a[i - 1] += c * a[i];
        out[k] = a[k];
    }
    return ScalarPoly(std::move(out));
}

ScalarPoly ScalarPoly::conj() const {
    ScalarPoly r = *this;
    for (auto& x : r.c_) x = x.conj();
    return r;
}

bool ScalarPoly::is_rational() const {
    for (const auto& x : c_)
        if (!x.is_rational()) return false;
    return true;
}

std::string ScalarPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

DivRem poly_divrem(const ScalarPoly& a, const ScalarPoly& b) {
    if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    ScalarPoly rem = a;
    std::vector<QuadExt> q;
    if (a.deg() >= b.deg()) q.assign(a.deg() - b.deg() + 1, QuadExt());
    QuadExt lead_inv = b.leading().inv();
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int k = rem.deg() - b.deg();
        QuadExt f = rem.leading() * lead_inv;
        q[k] = f;
        rem -= ScalarPoly::monomial(k, f) * b;
    }
    return {ScalarPoly(std::move(q)), std::move(rem)};
}

ScalarPoly poly_divexact(const ScalarPoly& a, const ScalarPoly& b) {
    DivRem dr = poly_divrem(a, b);
    if (!dr.rem.is_zero()) raise(errc::internal, "inexact polynomial division");
    return dr.quot;
}

ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b) {
    if (a.is_zero() && b.is_zero()) raise(errc::both_zero, "gcd(0, 0)");
    while (!b.is_zero()) {
        ScalarPoly r = poly_divrem(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.leading().inv() * a;
}

ScalarPoly poly_pow(const ScalarPoly& p, unsigned k) {
    ScalarPoly r = ScalarPoly::one();
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

std::vector<QuadExt> series_div(const std::vector<QuadExt>& num, const std::vector<QuadExt>& den,
                                int count) {
    if (den.empty() || den[0].is_zero())
        raise(errc::division_by_zero, "series division by series with zero constant term");
    QuadExt d0 = den[0].inv();
    std::vector<QuadExt> c(count);
    for (int k = 0; k < count; ++k) {
        QuadExt acc = k < static_cast<int>(num.size()) ? num[k] : QuadExt();
        for (int j = 0; j < k; ++j) {
            int di = k - j;
            if (di < static_cast<int>(den.size())) acc -= c[j] * den[di];
        }
        c[k] = acc * d0;
    }
    return c;
}

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

QuadExt dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

QuadExt det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// ---------------------------------------------------------------------------

Vec3Poly::Vec3Poly(const std::vector<Vec3>& coeffs) {
    std::vector<QuadExt> xs(coeffs.size()), ys(coeffs.size()), zs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        xs[i] = coeffs[i].x;
        ys[i] = coeffs[i].y;
        zs[i] = coeffs[i].z;
    }
    x_ = ScalarPoly(std::move(xs));
    y_ = ScalarPoly(std::move(ys));
    z_ = ScalarPoly(std::move(zs));
}

std::vector<Vec3> Vec3Poly::coeffs() const {
    std::vector<Vec3> out(deg() + 1);
    for (int i = 0; i <= deg(); ++i) out[i] = coeff(i);
    return out;
}

std::string Vec3Poly::str(const std::string& var) const {
    return "[" + x_.str(var) + "; " + y_.str(var) + "; " + z_.str(var) + "]";
}

Vec3Poly cross(const Vec3Poly& a, const Vec3Poly& b) {
    return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
            a.x() * b.y() - a.y() * b.x()};
}

ScalarPoly dot(const Vec3Poly& a, const Vec3Poly& b) {
    return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

ScalarPoly det3(const Vec3Poly& a, const Vec3Poly& b, const Vec3Poly& c) {
    return dot(a, cross(b, c));
}

std::vector<Vec3> taylor_shift(const Vec3Poly& p, const QuadExt& beta) {
    Vec3Poly s = p.shift(beta);
    std::vector<Vec3> out(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) out[i] = s.coeff(i);
    return out;
}

} // namespace phdec
