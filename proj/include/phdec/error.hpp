#pragma once

#include <stdexcept>
#include <string>

namespace phdec {

// Error conditions surfaced by the library. The CLI maps these onto its
// exit-code contract (2 = parse, 3 = math domain, 4 = not a PH curve).
enum class errc {
    division_by_zero,
    mixed_radicand,
    center_mismatch,
    both_zero,
    zero_input,
    leading_coefficient_zero,
    degenerate_index,
    not_a_root,
    certificate_missing,
    not_ph_curve,
    not_in_span,
    redundant_basis,
    not_conjugate_pair,
    empty_range,
    parse_error,
    unsupported_factorization,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::mixed_radicand: return "MixedRadicand";
        case errc::center_mismatch: return "CenterMismatch";
        case errc::both_zero: return "BothZero";
        case errc::zero_input: return "ZeroInput";
        case errc::leading_coefficient_zero: return "LeadingCoefficientZero";
        case errc::degenerate_index: return "DegenerateIndex";
        case errc::not_a_root: return "NotARoot";
        case errc::certificate_missing: return "CertificateMissing";
        case errc::not_ph_curve: return "NotPHCurve";
        case errc::not_in_span: return "NotInSpan";
        case errc::redundant_basis: return "RedundantBasis";
        case errc::not_conjugate_pair: return "NotConjugatePair";
        case errc::empty_range: return "EmptyRange";
        case errc::parse_error: return "ParseError";
        case errc::unsupported_factorization: return "UnsupportedFactorization";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace phdec
