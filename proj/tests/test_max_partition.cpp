#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "partprod/enumerate.hpp"
#include "partprod/max_partition.hpp"
#include "partprod/remarks.hpp"
#include "partprod/rewriting.hpp"

using namespace partprod;

namespace {

struct OracleMax {
    oracle::Int value = 0;
    std::vector<std::vector<int>> argmax;
};

// Maximum of the product of p over parts, via the recursive generator and
// coin-change counts.
OracleMax oracle_max(int n) {
    const auto p = oracle::partition_counts(std::max(n, 1));
    OracleMax best;
    bool first = true;
    std::vector<int> prefix;
    oracle::each_partition(n, n, prefix, [&](const std::vector<int>& mu) {
        oracle::Int v = 1;
        for (int part : mu) v *= p[part];
        if (first || v > best.value) {
            best.value = v;
            best.argmax = {mu};
            first = false;
        } else if (v == best.value) {
            best.argmax.push_back(mu);
        }
    });
    return best;
}

std::vector<int> parts_of(const Partition& mu) { return {mu.parts().begin(), mu.parts().end()}; }

}  // namespace

TEST_CASE("canonical maximizers") {
    CHECK(canonical_max_partition(12) == Partition{4, 4, 4});
    CHECK(canonical_max_partition(13) == Partition{5, 4, 4});
    CHECK(canonical_max_partition(19) == Partition{6, 5, 4, 4});
    CHECK(canonical_max_partition(14) == Partition{6, 4, 4});
    CHECK(canonical_max_partition(11) == Partition{6, 5});
    CHECK(canonical_max_partition(4) == Partition{4});
    CHECK(canonical_max_partition(3) == Partition{3});
    CHECK(canonical_max_partition(1) == Partition{1});
    CHECK(canonical_max_partition(0).empty());
    CHECK_THROWS_AS(canonical_max_partition(7), TiedMaximumError);
    CHECK_THROWS_AS(canonical_max_partition(-1), std::domain_error);
    for (int n = 0; n <= 200; ++n) {
        if (n == 7) continue;
        REQUIRE(canonical_max_partition(n).weight() == n);
    }
}

TEST_CASE("closed form values") {
    CHECK(maxp_closed_form(16) == BigCount(625));
    CHECK(maxp_closed_form(14) == BigCount(275));
    CHECK(maxp_closed_form(19) == BigCount(1925));
    CHECK(maxp_closed_form(0) == BigCount(1));
    CHECK(maxp_closed_form(7) == BigCount(15));
    for (int n = 8; n <= 300; ++n) REQUIRE(maxp_closed_form(n + 4) == maxp_closed_form(n) * BigCount(5));
    PartitionTable table;
    for (int n = 0; n <= 300; ++n) {
        if (n == 7) continue;
        REQUIRE(p_extended(canonical_max_partition(n), table) == maxp_closed_form(n));
    }
}

TEST_CASE("brute force matches the independent oracle") {
    PartitionTable table;
    for (int n = 0; n <= 30; ++n) {
        const MaxResult r = maxp_bruteforce(n, table);
        const OracleMax o = oracle_max(n);
        CAPTURE(n);
        REQUIRE(r.maxp.backend() == o.value);
        REQUIRE(r.argmax.size() == o.argmax.size());
        for (std::size_t i = 0; i < r.argmax.size(); ++i) CHECK(parts_of(r.argmax[i]) == o.argmax[i]);
        for (const Partition& mu : r.argmax) {
            CHECK(mu.weight() == n);
            CHECK(p_extended(mu, table) == r.maxp);
        }
    }
}

TEST_CASE("brute force examples and cap") {
    PartitionTable table;
    const MaxResult seven = maxp_bruteforce(7, table);
    CHECK(seven.maxp == BigCount(15));
    CHECK(seven.argmax == std::vector<Partition>{Partition{7}, Partition{4, 3}});

    const MaxResult eight = maxp_bruteforce(8, table);
    CHECK(eight.maxp == BigCount(25));
    CHECK(eight.argmax == std::vector<Partition>{Partition{4, 4}});

    const MaxResult zero = maxp_bruteforce(0, table);
    CHECK(zero.maxp == BigCount(1));
    REQUIRE(zero.argmax.size() == 1);
    CHECK(zero.argmax[0].empty());

    CHECK_THROWS_AS(maxp_bruteforce(51, table), std::length_error);
    CHECK_THROWS_AS(maxp_bruteforce(12, table, 10), std::length_error);
    CHECK_THROWS_AS(maxp_bruteforce(-2, table), std::domain_error);
}

TEST_CASE("verify_theorem2 reproduces the table for n <= 14") {
    PartitionTable table;
    const Theorem2Report r = verify_theorem2(14, table);
    CHECK(r.passed());
    REQUIRE(r.rows.size() == 14);
    const long p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
    const long mp[] = {1, 2, 3, 5, 7, 11, 15, 25, 35, 55, 77, 125, 175, 275};
    for (int n = 1; n <= 14; ++n) {
        const auto& row = r.rows[n - 1];
        CHECK(row.n == n);
        CHECK(row.p_n == BigCount(p[n - 1]));
        CHECK(row.max.maxp == BigCount(mp[n - 1]));
    }
    CHECK(r.rows[6].max.argmax == std::vector<Partition>{Partition{7}, Partition{4, 3}});
    CHECK(r.rows[13].max.argmax == std::vector<Partition>{Partition{6, 4, 4}});
    CHECK_THROWS_AS(verify_theorem2(3, table), std::invalid_argument);
}

TEST_CASE("enumeration cap comes from the environment") {
    CHECK(default_enumeration_cap() == kDefaultEnumerationCap);
    setenv("PARTPROD_ENUM_CAP", "60", 1);
    CHECK(default_enumeration_cap() == 60);
    setenv("PARTPROD_ENUM_CAP", "junk", 1);
    CHECK(default_enumeration_cap() == kDefaultEnumerationCap);
    unsetenv("PARTPROD_ENUM_CAP");
}

TEST_CASE("rule catalog") {
    const auto& rules = rule_catalog();
    REQUIRE(rules.size() == 18);
    CHECK(rules[0].kind == ReplacementRule::Kind::SplitLarge);
    CHECK(rules[1].kind == ReplacementRule::Kind::AbsorbOne);
    CHECK(rules[7].label() == "7,2->5,4");
    CHECK(rules[7].provenance == "m7 elimination");

    PartitionTable table;
    std::map<std::string, std::pair<long, long>> expected{
        {"7,2->5,4", {30, 35}}, {"2,2->4", {4, 5}}, {"6,6->4,4,4", {121, 125}}, {"7,7->6,4,4", {225, 275}},
        {"5,4,2->6,5", {70, 77}}, {"4,4,3->6,5", {75, 77}}};
    for (const auto& rule : rules) {
        for (const auto& [from, to] : rule_instances(rule, 120)) {
            CAPTURE(rule.label());
            REQUIRE(from.weight() == to.weight());
            REQUIRE(p_extended(to, table) > p_extended(from, table));
            if (auto it = expected.find(rule.label()); it != expected.end()) {
                CHECK(p_extended(from, table) == BigCount(it->second.first));
                CHECK(p_extended(to, table) == BigCount(it->second.second));
            }
        }
    }
}

TEST_CASE("splitting k >= 8 into halves increases p") {
    PartitionTable table;
    for (int k = 8; k <= 100; ++k) REQUIRE(table.p(k / 2) * table.p(k - k / 2) > table.p(k));
}

TEST_CASE("apply_rule") {
    const auto& rules = rule_catalog();
    auto find = [&](const std::string& label) -> const ReplacementRule& {
        for (const auto& r : rules) {
            if (r.label() == label) return r;
        }
        throw std::runtime_error("missing rule " + label);
    };
    CHECK(apply_rule(Partition{7, 2}, find("7,2->5,4")) == Partition{5, 4});
    CHECK_FALSE(apply_rule(Partition{4, 4, 4}, find("2,2->4")).has_value());
    CHECK(apply_rule(Partition{3, 1}, rules[1]) == Partition{4});
    CHECK(apply_rule(Partition{1, 1}, rules[1]) == Partition{2});
    CHECK_FALSE(apply_rule(Partition{1}, rules[1]).has_value());
    CHECK(apply_rule(Partition{9, 2}, rules[0]) == Partition{5, 4, 2});
    CHECK_FALSE(apply_rule(Partition{7, 7}, rules[0]).has_value());
    CHECK(apply_rule(Partition{6, 5, 4, 4, 4, 3}, find("4,4,3->6,5")) == Partition{6, 6, 5, 5, 4});
}

TEST_CASE("apply_rule preserves weight on random partitions") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> part(1, 12);
    std::uniform_int_distribution<int> len(1, 9);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> parts(len(rng));
        for (int& x : parts) x = part(rng);
        const Partition mu(parts);
        for (const auto& rule : rule_catalog()) {
            if (auto nu = apply_rule(mu, rule)) REQUIRE(nu->weight() == mu.weight());
        }
    }
}

TEST_CASE("normalize examples") {
    PartitionTable table;
    CHECK(normalize(Partition{15}, table) == Partition{6, 5, 4});
    CHECK(normalize(Partition(std::vector<int>(16, 1)), table) == Partition{4, 4, 4, 4});
    CHECK(normalize(Partition{7, 2, 4, 4}, table) == Partition{5, 4, 4, 4});
    const auto trace = normalize_traced(Partition{4, 4, 4}, table);
    CHECK(trace.steps.empty());
    CHECK(trace.result == Partition{4, 4, 4});
    for (int n = 15; n <= 400; ++n) REQUIRE(is_fixed_point(canonical_max_partition(n)));
}

TEST_CASE("normalize is sound: p never decreases, strictly increases per step") {
    PartitionTable table;
    for (int n = 1; n <= 20; ++n) {
        for (const Partition& mu : enumerate_partitions(n)) {
            const auto t = normalize_traced(mu, table);
            REQUIRE(t.result.weight() == n);
            REQUIRE(is_fixed_point(t.result));
            REQUIRE(p_extended(t.result, table) >= p_extended(mu, table));
            if (t.steps.empty()) REQUIRE(t.result == mu);
            for (const auto& s : t.steps) REQUIRE(s.p_after > s.p_before);
        }
    }
}

TEST_CASE("normalize reaches the canonical maximizer for 15 <= n <= 22") {
    PartitionTable table;
    for (int n = 15; n <= 22; ++n) {
        const Partition target = canonical_max_partition(n);
        for (const Partition& mu : enumerate_partitions(n)) REQUIRE(normalize(mu, table) == target);
    }
}

TEST_CASE("log-concavity checks") {
    PartitionTable table;
    const auto v = log_concavity_check(26, 1, table);
    CHECK(v.outcome == Outcome::Greater);
    CHECK(log_concavity_check(25, 1, table).outcome == Outcome::Less);
    CHECK(log_concavity_check(4, 4, table).outcome == Outcome::Greater);  // 25 > 22
    CHECK(log_concavity_check(3, 3, table).outcome == Outcome::Less);     // 9 < 11
    CHECK_THROWS_AS(log_concavity_check(5, 6, table), std::domain_error);
    CHECK_THROWS_AS(log_concavity_check(5, 0, table), std::domain_error);

    const auto large = log_concavity_sweep(26, 200, 2, table);
    CHECK(large.violations.empty());
    const auto small = log_concavity_sweep(2, 25, 1, table);
    CHECK_FALSE(small.violations.empty());
    for (const auto& [n, m] : small.violations) {
        CHECK(m == 1);
        CHECK(n % 2 == 1);
    }
    CHECK(log_concavity_sweep(2, 25, 2, table).violations.empty());
    CHECK(border_sweep(4, 200, table).violations.empty());
    CHECK(border_sweep(1, 3, table).violations == std::vector<int>{1, 2, 3});
}

TEST_CASE("injection inequality") {
    PartitionTable table;
    const auto one = injection_check(1, table);
    CHECK(one.lhs == BigCount(1));
    CHECK(one.rhs == BigCount(2));
    CHECK(one.outcome == Outcome::Less);
    const auto thirteen = injection_check(13, table);
    CHECK(thirteen.lhs == BigCount(101));
    CHECK(thirteen.rhs == BigCount(135));
    CHECK(injection_sweep(1, 500, table).violations.empty());
    CHECK_THROWS_AS(injection_check(0, table), std::domain_error);
}
