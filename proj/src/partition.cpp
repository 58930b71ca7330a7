#include "partprod/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace partprod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::size_t Partition::multiplicity(int j) const {
    // parts_ is sorted descending, so the run of j's is contiguous.
    auto range = std::equal_range(parts_.begin(), parts_.end(), j, std::greater<>());
    return static_cast<std::size_t>(range.second - range.first);
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> all;
    all.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(all),
               std::greater<>());
    return Partition(Trusted{}, std::move(all), weight_ + other.weight_);
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Partition parse_partition(std::string_view text) {
    if (std::all_of(text.begin(), text.end(), is_blank)) return Partition{};

    std::vector<int> parts;
    std::size_t start = 0;
    std::size_t index = 1;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        std::size_t b = start;
        std::size_t e = stop;
        while (b < e && is_blank(text[b])) ++b;
        while (e > b && is_blank(text[e - 1])) --e;
        const std::string_view token = text.substr(b, e - b);

        auto fail = [&](const std::string& why) {
            throw PartitionParseError("token " + std::to_string(index) + " at offset " + std::to_string(b) + " ('" +
                                          std::string(token) + "'): " + why,
                                      index, b);
        };
        if (token.empty()) fail("empty part");
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range) fail("part too large");
        if (ec != std::errc() || ptr != token.data() + token.size()) fail("not an integer");
        if (value <= 0) fail("parts must be positive");
        parts.push_back(value);

        if (comma == std::string_view::npos) break;
        start = comma + 1;
        ++index;
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& mu) {
    std::string out;
    for (int p : mu.parts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

std::string format_partition_parens(const Partition& mu) { return "(" + format_partition(mu) + ")"; }

}  // namespace partprod
