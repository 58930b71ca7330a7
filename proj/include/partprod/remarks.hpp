#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "partprod/big_count.hpp"
#include "partprod/partition_table.hpp"

namespace partprod {

/// p(n)^2 (lhs) against p(n-m) p(n+m) (rhs).
struct LogConcavityVerdict {
    int n = 0;
    int m = 0;
    BigCount lhs;
    BigCount rhs;
    Outcome outcome = Outcome::Equal;
};

/// Accepts 1 <= m <= n; throws std::domain_error otherwise.
LogConcavityVerdict log_concavity_check(int n, int m, PartitionTable& table);

/// p(1) p(n) (lhs) against p(n+1) (rhs); Less is the expected outcome.
struct InjectionVerdict {
    int n = 0;
    BigCount lhs;
    BigCount rhs;
    Outcome outcome = Outcome::Equal;
};

InjectionVerdict injection_check(int n, PartitionTable& table);

struct LogConcavitySweep {
    int n_lo = 0;
    int n_hi = 0;
    int m_min = 0;
    std::size_t checked = 0;
    std::vector<std::pair<int, int>> violations;  // (n, m) with p(n)^2 <= p(n-m)p(n+m)
};

/// Every n_lo <= n <= n_hi and m_min <= m < n.
LogConcavitySweep log_concavity_sweep(int n_lo, int n_hi, int m_min, PartitionTable& table);

struct IntSweep {
    int lo = 0;
    int hi = 0;
    std::size_t checked = 0;
    std::vector<int> violations;
};

/// p(n)^2 > p(2n) for lo <= n <= hi.
IntSweep border_sweep(int lo, int hi, PartitionTable& table);

/// p(1)p(n) < p(n+1) for lo <= n <= hi.
IntSweep injection_sweep(int lo, int hi, PartitionTable& table);

}  // namespace partprod
