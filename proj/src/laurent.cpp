#include "phdec/laurent.hpp"

namespace phdec {

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    if (c_.empty()) center_ = o.center_;
    if (!o.c_.empty() && !(center_ == o.center_))
        raise(errc::center_mismatch, "adding Laurent series with different centers");
    for (const auto& [i, v] : o.c_) add_coeff(i, v);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    if (c_.empty()) center_ = o.center_;
    if (!o.c_.empty() && !(center_ == o.center_))
        raise(errc::center_mismatch, "subtracting Laurent series with different centers");
    for (const auto& [i, v] : o.c_) add_coeff(i, -v);
    return *this;
}

LaurentSeries operator*(const QuadExt& s, const LaurentSeries& l) {
    LaurentSeries out(l.center_);
    if (s.is_zero()) return out;
    for (const auto& [i, v] : l.c_) out.set_coeff(i, s * v);
    return out;
}

LaurentSeries LaurentSeries::conj() const {
    LaurentSeries out(center_.conj());
    for (const auto& [i, v] : c_) out.set_coeff(i, v.conj());
    return out;
}

std::string LaurentSeries::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [i, v] : c_) {
        if (!s.empty()) s += " + ";
        s += v.str() + "*(t - (" + center_.str() + "))^" + std::to_string(i);
    }
    return s;
}

} // namespace phdec
