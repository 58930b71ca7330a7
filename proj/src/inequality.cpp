#include "partprod/inequality.hpp"

#include <algorithm>
#include <string>

namespace partprod {

InequalityVerdict compare_products(int a, int b, PartitionTable& table) {
    if (a < 1 || b < 1) throw std::domain_error("compare_products requires a, b >= 1");
    InequalityVerdict v;
    v.a = a;
    v.b = b;
    v.lhs = table.p(a) * table.p(b);
    v.rhs = table.p(static_cast<long long>(a) + b);
    v.outcome = compare(v.lhs, v.rhs);
    return v;
}

ExceptionalSets scan_exceptional(int sum_bound, PartitionTable& table) {
    if (sum_bound < 4) throw std::invalid_argument("scan_exceptional requires sum_bound >= 4");
    table.ensure(sum_bound);
    ExceptionalSets sets;
    sets.scan_bound = sum_bound;
    for (int a = 2; 2 * a <= sum_bound; ++a) {
        for (int b = a; a + b <= sum_bound; ++b) {
            const Outcome o = compare_products(a, b, table).outcome;
            if (o == Outcome::Less) sets.failures.emplace(a, b);
            if (o == Outcome::Equal) sets.equalities.emplace(a, b);
        }
    }
    return sets;
}

const PairSet& reference_failures() {
    static const PairSet s{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 5}};
    return s;
}

const PairSet& reference_equalities() {
    static const PairSet s{{2, 6}, {3, 4}, {2, 7}};
    return s;
}

LambdaThreshold lambda_threshold(int a, double tol, std::vector<BisectionStep>* trace) {
    if (a < 2 || a > 8) throw std::domain_error("lambda_threshold requires 2 <= a <= 8");
    if (!(tol > 0)) throw std::domain_error("lambda_threshold requires tol > 0");

    Precision precision = Precision::Double;
    // Sign of the gap at lambda, or 0 if the current precision cannot resolve
    // it; escalates once when double is not enough.
    auto sign_at = [&](double lambda, double& value) -> int {
        if (precision == Precision::Double) {
            const Margin<double> m = gap_margin<double>(a, lambda);
            value = m.value;
            const Certainty c = classify(m);
            if (c != Certainty::Marginal) return c == Certainty::Holds ? 1 : -1;
            precision = Precision::Extended;
        }
        const Margin<Extended> m = gap_margin<Extended>(a, Extended(lambda));
        value = static_cast<double>(m.value);
        const Certainty c = classify(m);
        if (c == Certainty::Marginal) return 0;
        return c == Certainty::Holds ? 1 : -1;
    };

    double lo = 1.0;
    double g_lo = 0.0;
    if (sign_at(lo, g_lo) != -1) throw std::logic_error("gap(a, 1) is not negative for a in [2, 8]");

    double hi = 2.0;
    double g_hi = 0.0;
    int s_hi = sign_at(hi, g_hi);
    while (s_hi != 1) {
        if (hi > 1e12) throw std::runtime_error("no bracket found for lambda_" + std::to_string(a));
        lo = hi;
        g_lo = g_hi;
        hi *= 2;
        s_hi = sign_at(hi, g_hi);
    }

    while (hi - lo > tol) {
        if (g_lo >= 0 || g_hi <= 0) throw std::logic_error("bisection lost its sign change");
        if (trace) trace->push_back({lo, hi, g_lo, g_hi, precision});
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        double g_mid = 0.0;
        const int s = sign_at(mid, g_mid);
        if (s == 0) break;
        if (s > 0) {
            hi = mid;
            g_hi = g_mid;
        } else {
            lo = mid;
            g_lo = g_mid;
        }
    }
    if (trace) trace->push_back({lo, hi, g_lo, g_hi, precision});

    LambdaThreshold t;
    t.a = a;
    t.lo = lo;
    t.hi = hi;
    t.lambda = lo + (hi - lo) / 2;
    t.precision_used = precision;
    t.lambda_text = to_decimal(t.lambda);
    return t;
}

LargeAReport verify_large_a(int a_max) {
    if (a_max < 9) throw std::invalid_argument("verify_large_a requires a_max >= 9");
    LargeAReport report;
    report.a_max = a_max;
    for (int a = 9; a <= a_max; ++a) {
        StrictCheck c = check_positive_both([a]<class Real>() { return gap_margin<Real>(a, Real(1)); });
        if (c.status == Certainty::Fails) report.failures.push_back(a);
        if (c.status == Certainty::Marginal) report.marginal.push_back(a);
        if (a == 9 || c.margin < report.worst.margin) {
            report.worst = std::move(c);
            report.worst_a = a;
        }
    }
    return report;
}

Theorem1Report verify_theorem1(const Theorem1Config& config, PartitionTable& table) {
    Theorem1Report report;
    report.large_a = verify_large_a(config.a_max);

    PairSet failures;
    PairSet equalities;
    int scan_bound = 0;
    for (int a = 2; a <= 8; ++a) {
        const LambdaThreshold t = lambda_threshold(a, config.tol);
        report.thresholds.push_back(t);
        const int b_max = static_cast<int>(std::ceil(t.hi * a)) + config.safety_margin;
        report.b_max.push_back(b_max);
        scan_bound = std::max(scan_bound, a + b_max);

        for (int b = a; b <= b_max; ++b) {
            InequalityVerdict v = compare_products(a, b, table);
            ++report.pairs_checked;
            if (v.outcome == Outcome::Less) failures.emplace(a, b);
            if (v.outcome == Outcome::Equal) equalities.emplace(a, b);

            const bool expected_fail = reference_failures().contains({a, b});
            const bool expected_equal = reference_equalities().contains({a, b});
            const bool ok = expected_fail    ? v.outcome == Outcome::Less
                          : expected_equal   ? v.outcome == Outcome::Equal
                                             : v.outcome == Outcome::Greater;
            // Beyond a+b > 8 only {2,7} may be non-Greater.
            const bool scope_ok = a + b <= 8 || v.outcome == Outcome::Greater ||
                                  (a == 2 && b == 7 && v.outcome == Outcome::Equal);
            if (!ok || !scope_ok) report.counterexamples.push_back(std::move(v));
        }

        // Spot region: the analytic criterion already covers b > lambda_a a.
        for (int b = static_cast<int>(std::floor(t.lambda * a)) + 1; b <= 5 * a; ++b) {
            if (b < a || b <= t.hi * a) continue;
            InequalityVerdict v = compare_products(a, b, table);
            if (v.outcome != Outcome::Greater) report.analytic_contradictions.push_back(std::move(v));
        }
    }

    report.found.failures = std::move(failures);
    report.found.equalities = std::move(equalities);
    report.found.scan_bound = scan_bound;
    report.sets_match =
        report.found.failures == reference_failures() && report.found.equalities == reference_equalities();
    return report;
}

}  // namespace partprod
