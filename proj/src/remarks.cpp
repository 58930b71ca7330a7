#include "partprod/remarks.hpp"

#include <stdexcept>

namespace partprod {

LogConcavityVerdict log_concavity_check(int n, int m, PartitionTable& table) {
    if (m < 1 || m > n) throw std::domain_error("log_concavity_check requires 1 <= m <= n");
    LogConcavityVerdict v;
    v.n = n;
    v.m = m;
    const BigCount pn = table.p(n);
    v.lhs = pn * pn;
    v.rhs = table.p(n - m) * table.p(static_cast<long long>(n) + m);
    v.outcome = compare(v.lhs, v.rhs);
    return v;
}

InjectionVerdict injection_check(int n, PartitionTable& table) {
    if (n < 1) throw std::domain_error("injection_check requires n >= 1");
    InjectionVerdict v;
    v.n = n;
    v.lhs = table.p(1) * table.p(n);
    v.rhs = table.p(static_cast<long long>(n) + 1);
    v.outcome = compare(v.lhs, v.rhs);
    return v;
}

LogConcavitySweep log_concavity_sweep(int n_lo, int n_hi, int m_min, PartitionTable& table) {
    if (m_min < 1 || n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("bad log-concavity sweep range");
    table.ensure(2LL * n_hi);
    LogConcavitySweep sweep{n_lo, n_hi, m_min, 0, {}};
    for (int n = n_lo; n <= n_hi; ++n) {
        const BigCount pn = table.p(n);
        const BigCount square = pn * pn;
        for (int m = m_min; m < n; ++m) {
            ++sweep.checked;
            if (table.p(n - m) * table.p(n + m) >= square) sweep.violations.emplace_back(n, m);
        }
    }
    return sweep;
}

IntSweep border_sweep(int lo, int hi, PartitionTable& table) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("bad border sweep range");
    IntSweep sweep{lo, hi, 0, {}};
    for (int n = lo; n <= hi; ++n) {
        ++sweep.checked;
        if (log_concavity_check(n, n, table).outcome != Outcome::Greater) sweep.violations.push_back(n);
    }
    return sweep;
}

IntSweep injection_sweep(int lo, int hi, PartitionTable& table) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("bad injection sweep range");
    IntSweep sweep{lo, hi, 0, {}};
    for (int n = lo; n <= hi; ++n) {
        ++sweep.checked;
        if (injection_check(n, table).outcome != Outcome::Less) sweep.violations.push_back(n);
    }
    return sweep;
}

}  // namespace partprod
