#include "partprod/report_json.hpp"

namespace partprod {

using nlohmann::json;

void to_json(json& j, const BigCount& x) { j = x.to_string(); }

void to_json(json& j, const Partition& mu) { j = format_partition(mu); }

void to_json(json& j, const StrictCheck& c) {
    j = json{{"status", to_string(c.status)},
             {"margin", c.margin_text},
             {"rounding_estimate", to_decimal(c.rounding)},
             {"precision", to_string(c.precision)}};
}

void to_json(json& j, const InequalityVerdict& v) {
    j = json{{"a", v.a}, {"b", v.b}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"outcome", to_string(v.outcome)}};
}

json pairs_to_json(const PairSet& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back({a, b});
    return arr;
}

void to_json(json& j, const ExceptionalSets& s) {
    j = json{{"scan_bound", s.scan_bound},
             {"failures", pairs_to_json(s.failures)},
             {"equalities", pairs_to_json(s.equalities)}};
}

void to_json(json& j, const LambdaThreshold& t) {
    j = json{{"a", t.a},
             {"lambda", t.lambda_text},
             {"bracket", {to_decimal(t.lo), to_decimal(t.hi)}},
             {"precision", to_string(t.precision_used)}};
}

void to_json(json& j, const LargeAReport& r) {
    j = json{{"a_min", r.a_min},   {"a_max", r.a_max},     {"passed", r.passed()},
             {"failures", r.failures}, {"marginal", r.marginal}, {"worst_a", r.worst_a},
             {"worst", r.worst}};
}

void to_json(json& j, const Theorem1Report& r) {
    json thresholds = json::array();
    for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
        json t = r.thresholds[i];
        t["b_max"] = r.b_max[i];
        thresholds.push_back(std::move(t));
    }
    j = json{{"passed", r.passed()},
             {"large_a", r.large_a},
             {"thresholds", std::move(thresholds)},
             {"pairs_checked", r.pairs_checked},
             {"found", r.found},
             {"sets_match", r.sets_match},
             {"counterexamples", r.counterexamples},
             {"analytic_contradictions", r.analytic_contradictions}};
}

void to_json(json& j, const MaxResult& r) {
    j = json{{"n", r.n}, {"maxp", r.maxp}, {"argmax", r.argmax}};
}

void to_json(json& j, const Theorem2Report& r) {
    json rows = json::array();
    for (const Theorem2Row& row : r.rows) {
        rows.push_back({{"n", row.n}, {"p", row.p_n}, {"maxp", row.max.maxp}, {"argmax", row.max.argmax}});
    }
    json mismatches = json::array();
    for (const Theorem2Mismatch& m : r.mismatches) {
        mismatches.push_back({{"n", m.n}, {"expected", m.expected}, {"found", m.found}});
    }
    j = json{{"n_max", r.n_max}, {"passed", r.passed()}, {"rows", std::move(rows)}, {"counterexamples", std::move(mismatches)}};
}

void to_json(json& j, const BoundsSweepReport& r) {
    j = json{{"n_lo", r.n_lo},         {"n_hi", r.n_hi},       {"checked", r.checked},
             {"passed", r.passed()},   {"failures", r.failures}, {"marginal", r.marginal},
             {"worst_n", r.worst_n},   {"worst", r.worst}};
}

void to_json(json& j, const LogConcavityVerdict& v) {
    j = json{{"n", v.n}, {"m", v.m}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"outcome", to_string(v.outcome)}};
}

void to_json(json& j, const InjectionVerdict& v) {
    j = json{{"n", v.n}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"outcome", to_string(v.outcome)}};
}

void to_json(json& j, const LogConcavitySweep& s) {
    json violations = json::array();
    for (const auto& [n, m] : s.violations) violations.push_back({n, m});
    j = json{{"n_lo", s.n_lo}, {"n_hi", s.n_hi}, {"m_min", s.m_min}, {"checked", s.checked},
             {"violations", std::move(violations)}};
}

void to_json(json& j, const IntSweep& s) {
    j = json{{"lo", s.lo}, {"hi", s.hi}, {"checked", s.checked}, {"violations", s.violations}};
}

void to_json(json& j, const RewriteTrace& t) {
    json steps = json::array();
    for (const RewriteStep& s : t.steps) {
        const ReplacementRule& rule = rule_catalog()[s.rule_index];
        steps.push_back({{"rule", rule.label()},
                         {"provenance", rule.provenance},
                         {"before", s.before},
                         {"after", s.after},
                         {"p_before", s.p_before},
                         {"p_after", s.p_after}});
    }
    j = json{{"start", t.start}, {"result", t.result}, {"steps", std::move(steps)}};
}

}  // namespace partprod
