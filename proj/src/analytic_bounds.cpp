#include "partprod/analytic_bounds.hpp"

#include <stdexcept>

namespace partprod {

StrictCheck sandwich_check(long long n, PartitionTable& table) {
    const BigCount pn = table.p(n);
    return check_positive_both([&]<class Real>() { return sandwich_margin<Real>(n, pn); });
}

StrictCheck lehmer_bracket_check(long long n, PartitionTable& table) {
    const BigCount pn = table.p(n);
    return check_positive_both([&]<class Real>() { return lehmer_margin<Real>(n, pn); });
}

namespace {

template <class Check>
BoundsSweepReport sweep(long long n_lo, long long n_hi, Check&& check) {
    if (n_lo > n_hi) throw std::invalid_argument("empty sweep range");
    BoundsSweepReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    bool first = true;
    for (long long n = n_lo; n <= n_hi; ++n) {
        StrictCheck c = check(n);
        ++report.checked;
        if (c.status == Certainty::Fails) report.failures.push_back(n);
        if (c.status == Certainty::Marginal) report.marginal.push_back(n);
        if (first || c.margin < report.worst.margin) {
            report.worst = std::move(c);
            report.worst_n = n;
            first = false;
        }
    }
    return report;
}

}  // namespace

BoundsSweepReport sandwich_sweep(long long n_lo, long long n_hi, PartitionTable& table) {
    if (n_lo < 2) throw std::domain_error("sandwich bounds require n >= 2");
    table.ensure(n_hi);
    return sweep(n_lo, n_hi, [&](long long n) { return sandwich_check(n, table); });
}

BoundsSweepReport lehmer_bracket_sweep(long long n_lo, long long n_hi, PartitionTable& table) {
    if (n_lo < 1) throw std::domain_error("Lehmer's estimate requires n >= 1");
    table.ensure(n_hi);
    return sweep(n_lo, n_hi, [&](long long n) { return lehmer_bracket_check(n, table); });
}

}  // namespace partprod
