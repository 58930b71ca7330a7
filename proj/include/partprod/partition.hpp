#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partprod {

/// A partition: positive parts in weakly decreasing order.
///
/// The weight (sum of parts) is cached. Construction from an arbitrary
/// sequence sorts it, so every Partition value is canonical.
class Partition {
public:
    Partition() = default;

    /// Sorts `parts` into weakly decreasing order. Throws std::invalid_argument
    /// if any part is not positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] long long weight() const noexcept { return weight_; }
    [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Number of parts equal to j.
    [[nodiscard]] std::size_t multiplicity(int j) const;

    /// Multiset union of the parts.
    [[nodiscard]] Partition merged(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic order on the part sequences.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    friend class PartitionEnumerator;
    struct Trusted {};
    Partition(Trusted, std::vector<int> parts, long long weight)
        : parts_(std::move(parts)), weight_(weight) {}

    std::vector<int> parts_;
    long long weight_ = 0;
};

/// Raised by parse_partition; carries the 1-based index of the bad token and
/// its character offset in the input.
class PartitionParseError : public std::invalid_argument {
public:
    PartitionParseError(std::string message, std::size_t token_index, std::size_t offset)
        : std::invalid_argument(std::move(message)), token_index_(token_index), offset_(offset) {}
    [[nodiscard]] std::size_t token_index() const noexcept { return token_index_; }
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t token_index_;
    std::size_t offset_;
};

/// Parses a comma-separated list of positive integers in any order.
/// Whitespace around tokens is ignored; an empty (or all-blank) string is the
/// empty partition.
Partition parse_partition(std::string_view text);

/// "6,5,4,4"; the empty partition formats as "".
std::string format_partition(const Partition& mu);

/// "(6,5,4,4)"; the empty partition formats as "()".
std::string format_partition_parens(const Partition& mu);

}  // namespace partprod
