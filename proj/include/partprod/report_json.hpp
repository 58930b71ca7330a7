#pragma once

#include <json.hpp>

#include "partprod/analytic_bounds.hpp"
#include "partprod/inequality.hpp"
#include "partprod/max_partition.hpp"
#include "partprod/remarks.hpp"
#include "partprod/rewriting.hpp"

// JSON forms of the library's results. Exact quantities are decimal strings,
// pair sets are sorted arrays of [a, b], and floating-point margins carry the
// precision they were decided at.
namespace partprod {

void to_json(nlohmann::json& j, const BigCount& x);
void to_json(nlohmann::json& j, const Partition& mu);
void to_json(nlohmann::json& j, const StrictCheck& c);
void to_json(nlohmann::json& j, const InequalityVerdict& v);
void to_json(nlohmann::json& j, const ExceptionalSets& s);
void to_json(nlohmann::json& j, const LambdaThreshold& t);
void to_json(nlohmann::json& j, const LargeAReport& r);
void to_json(nlohmann::json& j, const Theorem1Report& r);
void to_json(nlohmann::json& j, const MaxResult& r);
void to_json(nlohmann::json& j, const Theorem2Report& r);
void to_json(nlohmann::json& j, const BoundsSweepReport& r);
void to_json(nlohmann::json& j, const LogConcavityVerdict& v);
void to_json(nlohmann::json& j, const InjectionVerdict& v);
void to_json(nlohmann::json& j, const LogConcavitySweep& s);
void to_json(nlohmann::json& j, const IntSweep& s);
void to_json(nlohmann::json& j, const RewriteTrace& t);

nlohmann::json pairs_to_json(const PairSet& pairs);

}  // namespace partprod
