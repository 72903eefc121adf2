#pragma once

#include <map>
#include <string>

#include "phdec/poly.hpp"

namespace phdec {

// Finite Laurent expansion sum_{i=lo..hi} r_i (t - center)^i. Coefficients
// are kept sparse by index; lo/hi track the extreme nonzero indices and the
// identically zero series has an empty coefficient map.
class LaurentSeries {
  public:
    LaurentSeries() = default;
    explicit LaurentSeries(QuadExt center) : center_(std::move(center)) {}

    const QuadExt& center() const { return center_; }
    const std::map<int, Vec3>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int lo() const { return c_.empty() ? 0 : c_.begin()->first; }
    int hi() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Vec3 coeff(int i) const {
        auto it = c_.find(i);
        return it == c_.end() ? Vec3() : it->second;
    }

    void set_coeff(int i, const Vec3& v) {
        if (v.is_zero())
            c_.erase(i);
        else
            c_[i] = v;
    }

    void add_coeff(int i, const Vec3& v) { set_coeff(i, coeff(i) + v); }

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const QuadExt& s, const LaurentSeries& l);
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return (a.c_.empty() && b.c_.empty()) || (a.center_ == b.center_ && a.c_ == b.c_);
    }

    // Coefficient-wise conjugate placed at the conjugate center.
    LaurentSeries conj() const;

    std::string str() const;

  private:
    QuadExt center_;
    std::map<int, Vec3> c_;
};

} // namespace phdec
