#include "partprod/max_partition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "partprod/enumerate.hpp"

namespace partprod {

Partition canonical_max_partition(int n) {
    if (n < 0) throw std::domain_error("canonical_max_partition requires n >= 0");
    if (n == 7) throw TiedMaximumError();
    if (n == 0) return Partition{};
    if (n <= 3) return Partition{n};

    std::vector<int> parts;
    int fours = 0;
    switch (n % 4) {
        case 0: fours = n / 4; break;
        case 1: parts = {5}; fours = (n - 5) / 4; break;
        case 2: parts = {6}; fours = (n - 6) / 4; break;
        case 3: parts = {6, 5}; fours = (n - 11) / 4; break;
    }
    parts.insert(parts.end(), static_cast<std::size_t>(fours), 4);
    return Partition(std::move(parts));
}

BigCount maxp_closed_form(int n) {
    if (n < 0) throw std::domain_error("maxp_closed_form requires n >= 0");
    static constexpr std::uint64_t kSmall[] = {1, 1, 2, 3, 5, 7, 11, 15};
    if (n < 8) return BigCount(kSmall[n]);

    std::uint64_t factor = 1;
    int exponent = 0;
    switch (n % 4) {
        case 0: exponent = n / 4; break;
        case 1: factor = 7; exponent = (n - 5) / 4; break;
        case 2: factor = 11; exponent = (n - 6) / 4; break;
        case 3: factor = 77; exponent = (n - 11) / 4; break;
    }
    BigCount result(factor);
    const BigCount five(5);
    for (int i = 0; i < exponent; ++i) result *= five;
    return result;
}

int default_enumeration_cap() {
    if (const char* env = std::getenv("PARTPROD_ENUM_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
    }
    return kDefaultEnumerationCap;
}

MaxResult maxp_bruteforce(int n, PartitionTable& table, int cap) {
    if (n < 0) throw std::domain_error("maxp_bruteforce requires n >= 0");
    if (n > cap) {
        throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
    }
    table.ensure(n);
    MaxResult result;
    result.n = n;
    bool first = true;
    for (const Partition& mu : enumerate_partitions(n)) {
        BigCount value = p_extended(mu, table);
        if (first || value > result.maxp) {
            result.maxp = std::move(value);
            result.argmax.assign(1, mu);
            first = false;
        } else if (value == result.maxp) {
            result.argmax.push_back(mu);
        }
    }
    return result;
}

namespace {

std::string format_argmax(const std::vector<Partition>& argmax) {
    std::string out;
    for (const Partition& mu : argmax) {
        if (!out.empty()) out += ' ';
        out += format_partition_parens(mu);
    }
    return out;
}

}  // namespace

Theorem2Report verify_theorem2(int n_max, PartitionTable& table, int cap) {
    if (n_max < 4) throw std::invalid_argument("verify_theorem2 requires n_max >= 4");
    if (n_max > cap) {
        throw std::length_error("n_max = " + std::to_string(n_max) + " exceeds the enumeration cap " +
                                std::to_string(cap));
    }
    table.ensure(n_max);

    Theorem2Report report;
    report.n_max = n_max;
    report.rows.resize(static_cast<std::size_t>(n_max));

    // Largest n first so the expensive rows start early.
    std::atomic<int> next{n_max};
    auto worker = [&] {
        for (int n = next--; n >= 1; n = next--) {
            Theorem2Row& row = report.rows[static_cast<std::size_t>(n - 1)];
            row.n = n;
            row.p_n = table.p(n);
            row.max = maxp_bruteforce(n, table, cap);
        }
    };
    const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const Theorem2Row& row : report.rows) {
        const int n = row.n;
        const BigCount closed = maxp_closed_form(n);
        if (closed != row.max.maxp) {
            report.mismatches.push_back({n, "maxp " + closed.to_string(), "maxp " + row.max.maxp.to_string()});
        }
        const std::vector<Partition> expected =
            n == 7 ? std::vector<Partition>{Partition{7}, Partition{4, 3}}
                   : std::vector<Partition>{canonical_max_partition(n)};
        if (row.max.argmax != expected) {
            report.mismatches.push_back({n, "argmax " + format_argmax(expected), "argmax " + format_argmax(row.max.argmax)});
        }
    }
    return report;
}

}  // namespace partprod
