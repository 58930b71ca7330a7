#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "partprod/big_count.hpp"
#include "partprod/partition_table.hpp"
#include "partprod/precision.hpp"

namespace partprod {

/// mu(n) = pi/6 * sqrt(24n - 1), the exponent in Lehmer's estimate.
template <class Real>
Real mu(long long n) {
    using std::sqrt;
    if (n < 1) throw std::domain_error("mu(n) requires n >= 1");
    return boost::math::constants::pi<Real>() / 6 * sqrt(Real(24 * n - 1));
}

/// Natural logs of Lehmer's main term and of the bound on |E(n)|.
///
/// Both are evaluated without forming e^mu, so they are finite for every n:
///   log main = log(sqrt12/(24n-1)) + mu + log((1-1/mu) + (1+1/mu) e^{-2mu})
///   log cap  = log(pi^2/sqrt3) + mu - log 2 - 3 log mu
///              + log((1 - e^{-2mu}) + 2 mu^3 e^{-mu} (1/6 - 1/mu^2))
template <class Real>
struct LehmerLogTerms {
    long long n;
    Real mu_n;
    Real log_main_term;
    Real log_error_cap;
};

template <class Real>
LehmerLogTerms<Real> lehmer_log_terms(long long n) {
    using std::exp;
    using std::log;
    using std::sqrt;
    const Real m = mu<Real>(n);
    const Real pi = boost::math::constants::pi<Real>();
    const Real log_main = log(sqrt(Real(12)) / Real(24 * n - 1)) + m +
                          log((1 - 1 / m) + (1 + 1 / m) * exp(-2 * m));
    const Real bracket = (1 - exp(-2 * m)) + 2 * m * m * m * exp(-m) * (Real(1) / 6 - 1 / (m * m));
    const Real log_cap = log(pi * pi / sqrt(Real(3))) + m - log(Real(2)) - 3 * log(m) + log(bracket);
    return {n, m, log_main, log_cap};
}

/// Lehmer's estimate in linear scale.
template <class Real>
struct LehmerEstimate {
    long long n;
    Real mu_n;
    Real main_term;
    Real error_cap;  // bound on |p(n) - main_term|
};

/// Throws std::overflow_error when the linear-scale values do not fit in
/// Real; use lehmer_log_terms for such n.
template <class Real>
LehmerEstimate<Real> lehmer_estimate(long long n) {
    using std::exp;
    using std::isfinite;
    const auto t = lehmer_log_terms<Real>(n);
    const Real main = exp(t.log_main_term);
    const Real cap = exp(t.log_error_cap);
    if (!isfinite(main) || !isfinite(cap)) {
        throw std::overflow_error("Lehmer estimate overflows this precision; use the log-domain terms");
    }
    return {n, t.mu_n, main, cap};
}

/// Natural logs of (sqrt3/(12n)) (1 -/+ 1/sqrt n) e^{mu(n)}.
template <class Real>
struct LogBoundPair {
    long long n;
    Real log_lower;
    Real log_upper;
};

template <class Real>
LogBoundPair<Real> sandwich_log_bounds(long long n) {
    using std::log;
    using std::sqrt;
    if (n < 2) throw std::domain_error("sandwich bounds require n >= 2");
    const Real base = log(sqrt(Real(3)) / Real(12 * n)) + mu<Real>(n);
    const Real r = 1 / sqrt(Real(n));
    return {n, base + log(1 - r), base + log(1 + r)};
}

/// ln(x) from the bit length and leading bits of x. Throws std::domain_error
/// for x = 0.
template <class Real>
Real log_bigcount(const BigCount& x) {
    using std::log;
    if (x.is_zero()) throw std::domain_error("log of zero");
    // Keep a few guard bits beyond the mantissa of Real.
    constexpr std::size_t kBits = std::numeric_limits<Real>::digits + 8;
    const std::size_t len = x.bit_length();
    if (len <= kBits) return log(Real(x.backend()));
    const std::size_t shift = len - kBits;
    const BigCount::Backend top = x.backend() >> shift;
    return log(Real(top)) + Real(shift) * boost::math::constants::ln_two<Real>();
}

/// Sandwich margin min(ln p - log_lower, log_upper - ln p) at one precision.
template <class Real>
Margin<Real> sandwich_margin(long long n, const BigCount& pn) {
    using std::abs;
    using std::min;
    const auto b = sandwich_log_bounds<Real>(n);
    const Real lp = log_bigcount<Real>(pn);
    return {min(lp - b.log_lower, b.log_upper - lp), abs(lp) + abs(b.log_lower) + abs(b.log_upper)};
}

/// Margin of |p(n) - main| < cap, compared in log domain:
/// log(main - cap) < ln p < log(main + cap), the lower side being vacuous
/// when cap >= main.
template <class Real>
Margin<Real> lehmer_margin(long long n, const BigCount& pn) {
    using std::abs;
    using std::exp;
    using std::min;
    const auto t = lehmer_log_terms<Real>(n);
    const Real lp = log_bigcount<Real>(pn);
    const Real ratio = exp(t.log_error_cap - t.log_main_term);
    const Real upper = t.log_main_term + boost::math::log1p(ratio);
    Real margin = upper - lp;
    if (ratio < 1) {
        const Real lower = t.log_main_term + boost::math::log1p(-ratio);
        margin = min(margin, lp - lower);
    }
    return {margin, abs(lp) + abs(t.log_main_term) + abs(t.log_error_cap)};
}

/// ln p(n) strictly between the sandwich bounds, decided at both precisions.
StrictCheck sandwich_check(long long n, PartitionTable& table);

/// |p(n) - main_term| < error_cap, decided at both precisions.
StrictCheck lehmer_bracket_check(long long n, PartitionTable& table);

struct BoundsSweepReport {
    long long n_lo = 0;
    long long n_hi = 0;
    std::size_t checked = 0;
    std::vector<long long> failures;
    std::vector<long long> marginal;
    long long worst_n = 0;  // n with the smallest margin
    StrictCheck worst;

    [[nodiscard]] bool passed() const { return failures.empty() && marginal.empty(); }
};

BoundsSweepReport sandwich_sweep(long long n_lo, long long n_hi, PartitionTable& table);
BoundsSweepReport lehmer_bracket_sweep(long long n_lo, long long n_hi, PartitionTable& table);

}  // namespace partprod
