#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "partprod/big_count.hpp"
#include "partprod/partition_table.hpp"
#include "partprod/precision.hpp"

namespace partprod {

/// Exact comparison of p(a)p(b) (lhs) with p(a+b) (rhs).
struct InequalityVerdict {
    int a = 0;
    int b = 0;
    BigCount lhs;
    BigCount rhs;
    Outcome outcome = Outcome::Equal;
};

/// Accepts a, b >= 1; pairs with a part 1 always come out Less.
/// Throws std::domain_error for a or b < 1.
InequalityVerdict compare_products(int a, int b, PartitionTable& table);

/// Unordered pairs stored as (min, max).
using PairSet = std::set<std::pair<int, int>>;

struct ExceptionalSets {
    PairSet failures;    // p(a)p(b) < p(a+b)
    PairSet equalities;  // p(a)p(b) = p(a+b)
    int scan_bound = 0;  // largest a+b examined
};

/// Classifies every 1 < a <= b with a + b <= sum_bound. Throws
/// std::invalid_argument if sum_bound < 4.
ExceptionalSets scan_exceptional(int sum_bound, PartitionTable& table);

/// The complete exceptional sets over all 1 < a <= b, as established by
/// verify_theorem1: six failing pairs and three equality pairs.
const PairSet& reference_failures();
const PairSet& reference_equalities();

namespace detail {
inline void check_gap_domain(int a, double lambda) {
    if (a < 2) throw std::domain_error("gap functions require a >= 2");
    if (!(lambda >= 1.0)) throw std::domain_error("gap functions require lambda >= 1");
}
}  // namespace detail

/// (1 + 1/sqrt(a + lambda a)) / ((1 - 1/sqrt a)(1 - 1/sqrt(lambda a))),
/// decreasing in lambda.
template <class Real>
Real S(int a, const Real& lambda) {
    using std::sqrt;
    detail::check_gap_domain(a, static_cast<double>(lambda));
    const Real ra(a);
    return (1 + 1 / sqrt(ra + lambda * ra)) / ((1 - 1 / sqrt(ra)) * (1 - 1 / sqrt(lambda * ra)));
}

/// (pi/6)(sqrt(24a-1) + sqrt(24 lambda a - 1) - sqrt(24(a + lambda a) - 1)),
/// increasing in lambda.
template <class Real>
Real T(int a, const Real& lambda) {
    using std::sqrt;
    detail::check_gap_domain(a, static_cast<double>(lambda));
    const Real ra(a);
    return boost::math::constants::pi<Real>() / 6 *
           (sqrt(24 * ra - 1) + sqrt(24 * lambda * ra - 1) - sqrt(24 * (ra + lambda * ra) - 1));
}

/// T - log(2a sqrt3) - log S with the magnitude of its terms. A positive gap
/// means p(a)p(b) > p(a+b) for b = lambda a.
template <class Real>
Margin<Real> gap_margin(int a, const Real& lambda) {
    using std::abs;
    using std::log;
    using std::sqrt;
    const Real t = T<Real>(a, lambda);
    const Real c = log(2 * Real(a) * sqrt(Real(3)));
    const Real s = log(S<Real>(a, lambda));
    return {t - c - s, abs(t) + abs(c) + abs(s)};
}

template <class Real>
Real gap_function(int a, const Real& lambda) {
    return gap_margin<Real>(a, lambda).value;
}

struct BisectionStep {
    double lo;
    double hi;
    double gap_lo;
    double gap_hi;
    Precision precision;
};

/// Root of the gap in lambda for 2 <= a <= 8.
struct LambdaThreshold {
    int a = 0;
    double lambda = 0.0;  // bracket midpoint
    double lo = 0.0;      // gap(lo) < 0
    double hi = 0.0;      // gap(hi) > 0
    Precision precision_used = Precision::Double;
    std::string lambda_text;
};

/// Bisection on [1, hi], hi found by doubling from 2. Steps switch to
/// extended precision once |gap| drops below the double rounding estimate;
/// bisection stops early if even extended precision cannot resolve the sign.
/// Throws std::domain_error for a outside [2, 8] or tol <= 0.
LambdaThreshold lambda_threshold(int a, double tol = 1e-9, std::vector<BisectionStep>* trace = nullptr);

struct LargeAReport {
    int a_min = 9;
    int a_max = 0;
    std::vector<int> failures;
    std::vector<int> marginal;
    int worst_a = 0;
    StrictCheck worst;  // smallest gap(a, 1)

    [[nodiscard]] bool passed() const { return failures.empty() && marginal.empty(); }
};

/// gap(a, 1) > 0 at both precisions for every 9 <= a <= a_max. Throws
/// std::invalid_argument if a_max < 9.
LargeAReport verify_large_a(int a_max);

struct Theorem1Config {
    int a_max = 10'000;
    double tol = 1e-9;
    int safety_margin = 2;
};

struct Theorem1Report {
    LargeAReport large_a;
    std::vector<LambdaThreshold> thresholds;  // a = 2..8
    std::vector<int> b_max;                   // exhaustive bound per a = 2..8
    std::size_t pairs_checked = 0;
    ExceptionalSets found;
    bool sets_match = false;
    /// Verdicts contradicting the expected picture: unexpected failures or
    /// equalities, or a non-Greater verdict with a + b > 8 other than {2, 7}.
    std::vector<InequalityVerdict> counterexamples;
    /// Pairs beyond lambda_a a (up to 5a) that exact arithmetic does not
    /// confirm as Greater.
    std::vector<InequalityVerdict> analytic_contradictions;

    [[nodiscard]] bool marginal() const { return !large_a.marginal.empty(); }
    [[nodiscard]] bool passed() const {
        return large_a.passed() && sets_match && counterexamples.empty() && analytic_contradictions.empty();
    }
};

Theorem1Report verify_theorem1(const Theorem1Config& config, PartitionTable& table);

}  // namespace partprod
