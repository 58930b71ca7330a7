#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "partprod/partition.hpp"

namespace partprod {

/// Single-pass stream over P(n) in reverse lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
///
/// For n = 0 the stream holds exactly the empty partition. Each step costs
/// amortized O(1) part writes.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n);

    /// Current partition, or nullptr once exhausted.
    [[nodiscard]] const Partition* current() const noexcept { return done_ ? nullptr : &current_; }

    /// Advances; returns false when the stream is exhausted.
    bool advance();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        explicit iterator(PartitionEnumerator* e) : e_(e) {}
        reference operator*() const { return *e_->current(); }
        pointer operator->() const { return e_->current(); }
        iterator& operator++() {
            e_->advance();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) {
            return it.e_ == nullptr || it.e_->current() == nullptr;
        }

    private:
        PartitionEnumerator* e_ = nullptr;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const { return {}; }

private:
    bool done_ = false;
    Partition current_;
};

inline PartitionEnumerator enumerate_partitions(int n) { return PartitionEnumerator(n); }

/// Materializes P(n) in enumeration order.
std::vector<Partition> all_partitions(int n);

}  // namespace partprod
