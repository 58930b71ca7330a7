#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "partprod/big_count.hpp"
#include "partprod/partition.hpp"

namespace partprod {

/// Append-only memo of p(0), p(1), ... computed by Euler's pentagonal-number
/// recurrence.
///
/// Any number of threads may read concurrently; extension takes an exclusive
/// lock, and entries once stored never change.
class PartitionTable {
public:
    /// Largest n the table will compute by default. p(n) costs O(n^1.5) big
    /// additions to reach, so requests beyond this are refused rather than
    /// left to run for hours.
    static constexpr long long kDefaultLimit = 100'000;

    explicit PartitionTable(long long limit = kDefaultLimit);

    PartitionTable(const PartitionTable&) = delete;
    PartitionTable& operator=(const PartitionTable&) = delete;

    /// Exact p(n). Throws std::domain_error for n < 0 and std::length_error
    /// for n above the limit.
    [[nodiscard]] BigCount p(long long n);

    /// Grows the table so that p(0..n) are stored.
    void ensure(long long n);

    /// Number of stored entries (p(0) .. p(size()-1)).
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] long long limit() const noexcept { return limit_; }

private:
    void extend_locked(long long n);

    long long limit_;
    mutable std::shared_mutex mutex_;
    std::vector<BigCount> values_;
};

BigCount p_exact(long long n, PartitionTable& table);

/// p(mu) = product of p(mu_j); the empty partition maps to 1.
BigCount p_extended(const Partition& mu, PartitionTable& table);

}  // namespace partprod
