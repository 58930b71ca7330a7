#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partprod/big_count.hpp"
#include "partprod/partition.hpp"
#include "partprod/partition_table.hpp"

namespace partprod {

/// A weight-preserving local rewrite that strictly increases p(mu).
struct ReplacementRule {
    enum class Kind {
        SplitLarge,  // largest part k >= 8 -> floor(k/2), ceil(k/2)
        AbsorbOne,   // drop a part 1, increment the largest remaining part
        Replace,     // sub-multiset `from` -> `to`
    };

    Kind kind = Kind::Replace;
    std::vector<int> from;  // Replace only, weakly decreasing
    std::vector<int> to;    // Replace only, weakly decreasing
    std::string provenance;  // the step of the maximality argument it serves

    /// "7,2->5,4", "k->floor(k/2),ceil(k/2) [k>=8]", "1->largest+1".
    [[nodiscard]] std::string label() const;
};

/// The fixed catalog, in priority order:
/// split, absorb, pair reductions (2,2) (3,3) (5,5) (6,6) (7,7), the five
/// rules removing a 7, the two removing a 2 or 3 next to a 6, the two next
/// to a 5, and the two next to 4s.
const std::vector<ReplacementRule>& rule_catalog();

/// The rule applied to mu, canonicalized, or nullopt if it does not apply.
std::optional<Partition> apply_rule(const Partition& mu, const ReplacementRule& rule);

/// Standalone (from, to) instances of a rule. Parametric rules are
/// instantiated for every part size up to `max_part`.
std::vector<std::pair<Partition, Partition>> rule_instances(const ReplacementRule& rule, int max_part);

struct RewriteStep {
    std::size_t rule_index = 0;
    Partition before;
    Partition after;
    BigCount p_before;
    BigCount p_after;
};

struct RewriteTrace {
    Partition start;
    Partition result;
    std::vector<RewriteStep> steps;
};

/// Repeatedly applies the first applicable catalog rule until none applies.
/// Throws std::logic_error if a step fails to increase p(mu).
RewriteTrace normalize_traced(const Partition& mu, PartitionTable& table);

Partition normalize(const Partition& mu, PartitionTable& table);

/// True if no catalog rule applies to mu.
bool is_fixed_point(const Partition& mu);

}  // namespace partprod
