#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "partprod/enumerate.hpp"
#include "partprod/partition.hpp"
#include "partprod/partition_table.hpp"

using namespace partprod;

TEST_CASE("p_exact matches known values") {
    PartitionTable table;
    CHECK(p_exact(0, table) == BigCount(1));
    CHECK(p_exact(9, table) == BigCount(30));
    CHECK(p_exact(14, table) == BigCount(135));
    // Frozen from the coin-change oracle (checked again below).
    CHECK(p_exact(100, table) == BigCount(190569292));
}

TEST_CASE("pentagonal recurrence agrees with the coin-change oracle") {
    PartitionTable table;
    const auto expected = oracle::partition_counts(400);
    for (int n = 0; n <= 400; ++n) {
        REQUIRE_MESSAGE(p_exact(n, table).backend() == expected[n], "n = " << n);
    }
}

TEST_CASE("p_exact is strictly increasing from n = 1") {
    PartitionTable table;
    for (int n = 2; n <= 1000; ++n) REQUIRE(p_exact(n, table) > p_exact(n - 1, table));
}

TEST_CASE("table is append-only and rejects bad n") {
    PartitionTable table(50);
    const BigCount p30 = table.p(30);
    table.ensure(50);
    CHECK(table.p(30) == p30);
    CHECK(table.size() == 51);
    CHECK_THROWS_AS((void)table.p(-1), std::domain_error);
    CHECK_THROWS_AS((void)table.p(51), std::length_error);
}

TEST_CASE("concurrent readers and extenders see exact values") {
    PartitionTable table;
    const auto expected = oracle::partition_counts(600);
    std::vector<std::jthread> threads;
    std::atomic<int> bad{0};
    for (int t = 0; t < 6; ++t) {
        threads.emplace_back([&, t] {
            for (int n = t; n <= 600; n += 3) {
                if (table.p(n).backend() != expected[n]) ++bad;
            }
        });
    }
    threads.clear();
    CHECK(bad == 0);
}

TEST_CASE("enumeration count equals p(n) for n <= 40") {
    PartitionTable table;
    for (int n = 0; n <= 40; ++n) {
        std::size_t count = 0;
        for (const Partition& mu : enumerate_partitions(n)) {
            REQUIRE(mu.weight() == n);
            ++count;
        }
        REQUIRE_MESSAGE(BigCount(count) == p_exact(n, table), "n = " << n);
    }
}

TEST_CASE("enumeration order is reverse lexicographic and duplicate free") {
    for (int n : {0, 1, 4, 5, 12, 20}) {
        const auto all = all_partitions(n);
        for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1] > all[i]);
        std::set<Partition> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());

        // Same set as the recursive oracle, which also emits in this order.
        const auto ref = oracle::partitions_of(n);
        REQUIRE(ref.size() == all.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::vector<int>(all[i].parts().begin(), all[i].parts().end()) == ref[i]);
    }
}

TEST_CASE("small enumerations") {
    CHECK(all_partitions(5).size() == 7);

    const auto zero = all_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(zero[0].weight() == 0);

    const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(all_partitions(4) == four);
    CHECK_THROWS_AS(PartitionEnumerator(-1), std::domain_error);
}

TEST_CASE("p_extended") {
    PartitionTable table;
    CHECK(p_extended(Partition{4, 3}, table) == BigCount(15));
    CHECK(p_extended(Partition{6, 4, 4}, table) == BigCount(275));
    CHECK(p_extended(Partition{}, table) == BigCount(1));
}

TEST_CASE("p_extended is multiplicative over multiset union") {
    PartitionTable table;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> part(1, 60);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> a(len(rng)), b(len(rng));
        for (int& x : a) x = part(rng);
        for (int& x : b) x = part(rng);
        const Partition mu(a), nu(b);
        const Partition both = mu.merged(nu);
        REQUIRE(both.weight() == mu.weight() + nu.weight());
        REQUIRE(p_extended(both, table) == p_extended(mu, table) * p_extended(nu, table));
    }
}

TEST_CASE("partition invariants and multiplicities") {
    const Partition mu{3, 6, 4, 4, 1, 4};
    CHECK(std::vector<int>(mu.parts().begin(), mu.parts().end()) == std::vector<int>{6, 4, 4, 4, 3, 1});
    CHECK(mu.weight() == 22);
    CHECK(mu.multiplicity(4) == 3);
    CHECK(mu.multiplicity(6) == 1);
    CHECK(mu.multiplicity(2) == 0);
    CHECK(mu.largest() == 6);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-2}), std::invalid_argument);
}

TEST_CASE("parse and format") {
    const Partition a = parse_partition("4,4,3");
    CHECK(a == Partition{4, 4, 3});
    CHECK(a.weight() == 11);
    CHECK(parse_partition("3,4,4") == Partition{4, 4, 3});
    CHECK(parse_partition(" 6 , 5,4 ,4 ") == Partition{6, 5, 4, 4});
    CHECK(parse_partition("").empty());
    CHECK(format_partition(Partition{6, 5, 4, 4}) == "6,5,4,4");
    CHECK(format_partition(Partition{}) == "");
    CHECK(format_partition_parens(Partition{4, 3}) == "(4,3)");

    // Round trip on canonical forms.
    for (int n : {0, 7, 13}) {
        for (const Partition& mu : enumerate_partitions(n)) REQUIRE(parse_partition(format_partition(mu)) == mu);
    }
}

TEST_CASE("parse errors report the offending token") {
    auto token_of = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_partition(text);
        } catch (const PartitionParseError& e) {
            return {e.token_index(), e.offset()};
        }
        return {0, 0};
    };
    CHECK(token_of("4,0") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(token_of("4,-1") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(token_of("x,3") == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(token_of("3,2.5") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(token_of("3,,2") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(token_of("3,99999999999") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK_THROWS_AS(parse_partition("4,0"), std::invalid_argument);
}

TEST_CASE("BigCount basics") {
    CHECK(BigCount::from_decimal("190569292") == BigCount(190569292));
    CHECK_THROWS_AS(BigCount::from_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(BigCount::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigCount::from_backend(BigCount::Backend(-3)), std::domain_error);
    CHECK(BigCount(0).bit_length() == 0);
    CHECK(BigCount(1024).bit_length() == 11);
    CHECK(compare(BigCount(3), BigCount(2)) == Outcome::Greater);
    CHECK(compare(BigCount(2), BigCount(2)) == Outcome::Equal);
    CHECK(compare(BigCount(1), BigCount(2)) == Outcome::Less);
}
