#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "partprod/big_count.hpp"
#include "partprod/partition.hpp"
#include "partprod/partition_table.hpp"

namespace partprod {

/// Raised for n = 7, where the maximum is attained twice.
class TiedMaximumError : public std::domain_error {
public:
    TiedMaximumError() : std::domain_error("n = 7 has two maximizers, (7) and (4,3); use maxp_bruteforce") {}
};

/// The unique maximizer built from parts 4, 5, 6 by n mod 4; (n) for n <= 3
/// and () for n = 0. Throws TiedMaximumError for n = 7 and std::domain_error
/// for n < 0.
Partition canonical_max_partition(int n);

/// maxp(n): powers of 5 times 1, 7, 11 or 77 for n >= 8, tabulated below.
BigCount maxp_closed_form(int n);

struct MaxResult {
    int n = 0;
    BigCount maxp;
    std::vector<Partition> argmax;  // in enumeration order
};

inline constexpr int kDefaultEnumerationCap = 50;

/// PARTPROD_ENUM_CAP if set to a positive integer, otherwise 50.
int default_enumeration_cap();

/// Exhaustive maximum of p(mu) over P(n). Throws std::length_error if n
/// exceeds `cap`, std::domain_error for n < 0.
MaxResult maxp_bruteforce(int n, PartitionTable& table, int cap = default_enumeration_cap());

struct Theorem2Mismatch {
    int n = 0;
    std::string expected;
    std::string found;
};

struct Theorem2Row {
    int n = 0;
    BigCount p_n;
    MaxResult max;
};

struct Theorem2Report {
    int n_max = 0;
    std::vector<Theorem2Row> rows;  // n = 1..n_max
    std::vector<Theorem2Mismatch> mismatches;

    [[nodiscard]] bool passed() const { return mismatches.empty(); }
};

/// Brute force against the closed form and the canonical maximizer for every
/// 1 <= n <= n_max. Rows are computed on a small worker pool sharing `table`.
/// Throws std::invalid_argument if n_max < 4 and std::length_error above cap.
Theorem2Report verify_theorem2(int n_max, PartitionTable& table, int cap = default_enumeration_cap());

}  // namespace partprod
