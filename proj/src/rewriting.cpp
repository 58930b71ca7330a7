#include "partprod/rewriting.hpp"

#include <algorithm>
#include <stdexcept>

namespace partprod {

namespace {

std::string join(const std::vector<int>& parts) {
    std::string out;
    for (int p : parts) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

ReplacementRule replace(std::vector<int> from, std::vector<int> to, std::string provenance) {
    return {ReplacementRule::Kind::Replace, std::move(from), std::move(to), std::move(provenance)};
}

// Removes the sub-multiset `sub` (descending) from `parts` (descending);
// false if it is not contained.
bool remove_submultiset(std::vector<int>& parts, const std::vector<int>& sub) {
    std::vector<int> rest;
    rest.reserve(parts.size());
    auto it = sub.begin();
    for (int p : parts) {
        if (it != sub.end() && *it == p) {
            ++it;
        } else {
            rest.push_back(p);
        }
    }
    if (it != sub.end()) return false;
    parts = std::move(rest);
    return true;
}

}  // namespace

std::string ReplacementRule::label() const {
    switch (kind) {
        case Kind::SplitLarge: return "k->floor(k/2),ceil(k/2) [k>=8]";
        case Kind::AbsorbOne: return "1->largest+1";
        case Kind::Replace: return join(from) + "->" + join(to);
    }
    return "?";
}

const std::vector<ReplacementRule>& rule_catalog() {
    static const std::vector<ReplacementRule> catalog = [] {
        std::vector<ReplacementRule> rules;
        rules.push_back({ReplacementRule::Kind::SplitLarge, {}, {}, "parts below 8"});
        rules.push_back({ReplacementRule::Kind::AbsorbOne, {}, {}, "m1 elimination"});
        rules.push_back(replace({2, 2}, {4}, "m2 <= 1"));
        rules.push_back(replace({3, 3}, {6}, "m3 <= 1"));
        rules.push_back(replace({5, 5}, {6, 4}, "m5 <= 1"));
        rules.push_back(replace({6, 6}, {4, 4, 4}, "m6 <= 1"));
        rules.push_back(replace({7, 7}, {6, 4, 4}, "m7 <= 1"));
        rules.push_back(replace({7, 2}, {5, 4}, "m7 elimination"));
        rules.push_back(replace({7, 3}, {6, 4}, "m7 elimination"));
        rules.push_back(replace({7, 4}, {6, 5}, "m7 elimination"));
        rules.push_back(replace({7, 5}, {4, 4, 4}, "m7 elimination"));
        rules.push_back(replace({7, 6}, {5, 4, 4}, "m7 elimination"));
        rules.push_back(replace({6, 2}, {4, 4}, "m2, m3 with a 6"));
        rules.push_back(replace({6, 3}, {5, 4}, "m2, m3 with a 6"));
        rules.push_back(replace({5, 4, 2}, {6, 5}, "m2, m3 with a 5"));
        rules.push_back(replace({5, 3}, {4, 4}, "m2, m3 with a 5"));
        rules.push_back(replace({4, 2}, {6}, "m2, m3 with 4's only"));
        rules.push_back(replace({4, 4, 3}, {6, 5}, "m2, m3 with 4's only"));
        return rules;
    }();
    return catalog;
}

std::optional<Partition> apply_rule(const Partition& mu, const ReplacementRule& rule) {
    std::vector<int> parts(mu.parts().begin(), mu.parts().end());
    switch (rule.kind) {
        case ReplacementRule::Kind::SplitLarge: {
            if (parts.empty() || parts.front() < 8) return std::nullopt;
            const int k = parts.front();
            parts.front() = k / 2;
            parts.push_back(k - k / 2);
            break;
        }
        case ReplacementRule::Kind::AbsorbOne: {
            if (parts.size() < 2 || parts.back() != 1) return std::nullopt;
            parts.pop_back();
            ++parts.front();
            break;
        }
        case ReplacementRule::Kind::Replace: {
            if (!remove_submultiset(parts, rule.from)) return std::nullopt;
            parts.insert(parts.end(), rule.to.begin(), rule.to.end());
            break;
        }
    }
    return Partition(std::move(parts));
}

std::vector<std::pair<Partition, Partition>> rule_instances(const ReplacementRule& rule, int max_part) {
    std::vector<std::pair<Partition, Partition>> out;
    switch (rule.kind) {
        case ReplacementRule::Kind::SplitLarge:
            for (int k = 8; k <= max_part; ++k) out.emplace_back(Partition{k}, Partition{k / 2, k - k / 2});
            break;
        case ReplacementRule::Kind::AbsorbOne:
            for (int l = 1; l <= max_part; ++l) out.emplace_back(Partition{l, 1}, Partition{l + 1});
            break;
        case ReplacementRule::Kind::Replace:
            out.emplace_back(Partition(rule.from), Partition(rule.to));
            break;
    }
    return out;
}

RewriteTrace normalize_traced(const Partition& mu, PartitionTable& table) {
    const auto& catalog = rule_catalog();
    RewriteTrace trace;
    trace.start = mu;
    Partition current = mu;
    BigCount value = p_extended(current, table);
    while (true) {
        std::optional<Partition> next;
        std::size_t index = 0;
        for (; index < catalog.size(); ++index) {
            next = apply_rule(current, catalog[index]);
            if (next) break;
        }
        if (!next) break;
        BigCount next_value = p_extended(*next, table);
        if (next_value <= value) {
            throw std::logic_error("rule " + catalog[index].label() + " did not increase p on " +
                                   format_partition(current));
        }
        trace.steps.push_back({index, current, *next, value, next_value});
        current = std::move(*next);
        value = std::move(next_value);
    }
    trace.result = std::move(current);
    return trace;
}

Partition normalize(const Partition& mu, PartitionTable& table) { return normalize_traced(mu, table).result; }

bool is_fixed_point(const Partition& mu) {
    return std::none_of(rule_catalog().begin(), rule_catalog().end(),
                        [&](const ReplacementRule& r) { return apply_rule(mu, r).has_value(); });
}

}  // namespace partprod
