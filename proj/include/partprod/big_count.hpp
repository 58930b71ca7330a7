#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace partprod {

/// Exact nonnegative integer used for p(n), p(mu) and maxp(n).
///
/// Only the operations the verification code needs are exposed: products,
/// sums, comparison, and decimal formatting. Subtraction is deliberately
/// absent so a value can never go negative.
class BigCount {
public:
    using Backend = boost::multiprecision::cpp_int;

    BigCount() = default;
    BigCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

    /// Parses a decimal string of digits; throws std::invalid_argument otherwise.
    static BigCount from_decimal(std::string_view digits);

    /// Wraps a backend value; throws std::domain_error if it is negative.
    static BigCount from_backend(Backend v);

    [[nodiscard]] const Backend& backend() const noexcept { return value_; }
    [[nodiscard]] std::string to_string() const { return value_.str(); }

    [[nodiscard]] bool is_zero() const noexcept { return value_.is_zero(); }

    /// Number of significant bits; 0 for zero.
    [[nodiscard]] std::size_t bit_length() const;

    BigCount& operator*=(const BigCount& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    BigCount& operator+=(const BigCount& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }
    friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit BigCount(Backend v, int) : value_(std::move(v)) {}
    Backend value_{0};
};

/// Exact three-way result of comparing a left-hand quantity with a right-hand one.
enum class Outcome { Greater, Equal, Less };

Outcome compare(const BigCount& lhs, const BigCount& rhs);

std::string_view to_string(Outcome o);

/// Symbol placed between the two sides when printing: ">", "=", "<".
std::string_view relation_symbol(Outcome o);

}  // namespace partprod
