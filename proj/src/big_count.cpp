#include "partprod/big_count.hpp"

#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace partprod {

BigCount BigCount::from_decimal(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty decimal string");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("not a decimal digit string: " + std::string(digits));
    }
    return BigCount(Backend(std::string(digits)), 0);
}

BigCount BigCount::from_backend(Backend v) {
    if (v.sign() < 0) throw std::domain_error("BigCount cannot hold a negative value");
    return BigCount(std::move(v), 0);
}

std::size_t BigCount::bit_length() const {
    if (value_.is_zero()) return 0;
    return boost::multiprecision::msb(value_) + 1;
}

Outcome compare(const BigCount& lhs, const BigCount& rhs) {
    const auto c = lhs <=> rhs;
    if (c > 0) return Outcome::Greater;
    if (c < 0) return Outcome::Less;
    return Outcome::Equal;
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Greater: return "GREATER";
        case Outcome::Equal: return "EQUAL";
        case Outcome::Less: return "LESS";
    }
    return "?";
}

std::string_view relation_symbol(Outcome o) {
    switch (o) {
        case Outcome::Greater: return ">";
        case Outcome::Equal: return "=";
        case Outcome::Less: return "<";
    }
    return "?";
}

}  // namespace partprod
