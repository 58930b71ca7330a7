#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace partprod {

/// Extended working precision: 113-bit binary mantissa.
using Extended = boost::multiprecision::cpp_bin_float_quad;

enum class Precision { Double, Extended };

/// Outcome of a floating-point check of a strict inequality.
enum class Certainty { Holds, Fails, Marginal };

std::string_view to_string(Precision p);
std::string_view to_string(Certainty c);

/// Multiplier on machine epsilon used to turn the magnitude of the terms
/// entering a margin into a rounding-error estimate.
inline constexpr double kRoundingFactor = 64.0;

/// Relative margin below which a double-precision answer is re-derived at
/// extended precision.
inline constexpr double kEscalationThreshold = 1e-9;

/// A margin that should be strictly positive for a check to hold, together
/// with the magnitude of the terms it was computed from.
template <class Real>
struct Margin {
    Real value;
    Real scale;
};

template <class Real>
Real rounding_estimate(const Margin<Real>& m) {
    using std::abs;
    return Real(kRoundingFactor) * std::numeric_limits<Real>::epsilon() * abs(m.scale);
}

template <class Real>
Certainty classify(const Margin<Real>& m) {
    const Real err = rounding_estimate(m);
    if (m.value > err) return Certainty::Holds;
    if (m.value < -err) return Certainty::Fails;
    return Certainty::Marginal;
}

/// Decimal rendering with enough digits to round-trip the given type.
std::string to_decimal(double x);
std::string to_decimal(const Extended& x);

/// Result of deciding a strict inequality at one or both working precisions.
struct StrictCheck {
    Certainty status = Certainty::Marginal;
    Precision precision = Precision::Double;  // precision the reported margin comes from
    double margin = 0.0;
    double rounding = 0.0;
    std::string margin_text;  // full-precision decimal of `margin`
};

namespace detail {

template <class Real>
StrictCheck make_check(const Margin<Real>& m, Certainty status, Precision p) {
    StrictCheck c;
    c.status = status;
    c.precision = p;
    c.margin = static_cast<double>(m.value);
    c.rounding = static_cast<double>(rounding_estimate(m));
    c.margin_text = to_decimal(m.value);
    return c;
}

}  // namespace detail

/// Decides `margin > 0` at double precision, escalating to extended precision
/// when the double margin is within kEscalationThreshold (relative) of zero.
/// `f` is a generic callable: f.template operator()<Real>() -> Margin<Real>.
template <class F>
StrictCheck check_positive_escalating(F&& f) {
    const Margin<double> d = f.template operator()<double>();
    const Certainty cd = classify(d);
    if (cd != Certainty::Marginal && std::abs(d.value) >= kEscalationThreshold * std::abs(d.scale)) {
        return detail::make_check(d, cd, Precision::Double);
    }
    const Margin<Extended> e = f.template operator()<Extended>();
    return detail::make_check(e, classify(e), Precision::Extended);
}

/// Decides `margin > 0` at both precisions. The check holds (or fails) only if
/// both precisions agree with a margin beyond their rounding estimates;
/// anything else is Marginal. The reported margin is the extended one.
template <class F>
StrictCheck check_positive_both(F&& f) {
    const Margin<double> d = f.template operator()<double>();
    const Margin<Extended> e = f.template operator()<Extended>();
    const Certainty cd = classify(d);
    const Certainty ce = classify(e);
    const Certainty status = cd == ce ? ce : Certainty::Marginal;
    return detail::make_check(e, status, Precision::Extended);
}

}  // namespace partprod
