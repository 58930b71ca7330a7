#include "partprod/partition_table.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace partprod {

PartitionTable::PartitionTable(long long limit) : limit_(limit) { values_.emplace_back(1); }

BigCount PartitionTable::p(long long n) {
    ensure(n);
    std::shared_lock lock(mutex_);
    return values_[static_cast<std::size_t>(n)];
}

void PartitionTable::ensure(long long n) {
    if (n < 0) throw std::domain_error("p(n) requires n >= 0");
    if (n > limit_) {
        throw std::length_error("p(" + std::to_string(n) + ") exceeds the table limit of " + std::to_string(limit_));
    }
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(n) < values_.size()) return;
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
}

std::size_t PartitionTable::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

void PartitionTable::extend_locked(long long n) {
    using Int = BigCount::Backend;
    values_.reserve(static_cast<std::size_t>(n) + 1);
    for (long long m = static_cast<long long>(values_.size()); m <= n; ++m) {
        // p(m) = sum_{k>=1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
        Int plus = 0;
        Int minus = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            Int& acc = (k % 2 == 1) ? plus : minus;
            acc += values_[static_cast<std::size_t>(m - g1)].backend();
            const long long g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) acc += values_[static_cast<std::size_t>(m - g2)].backend();
        }
        values_.push_back(BigCount::from_backend(plus - minus));
    }
}

BigCount p_exact(long long n, PartitionTable& table) { return table.p(n); }

BigCount p_extended(const Partition& mu, PartitionTable& table) {
    if (!mu.empty()) table.ensure(mu.largest());
    BigCount product(1);
    for (int part : mu.parts()) product *= table.p(part);
    return product;
}

}  // namespace partprod
