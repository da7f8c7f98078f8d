#pragma once

#include <string>

#include "ballprox/ball_approx_result.hpp"
#include "ballprox/extreme_points.hpp"
#include "ballprox/operator_models.hpp"
#include "ballprox/oracles.hpp"
#include "json.hpp"

namespace ballprox {

using Json = nlohmann::ordered_json;

/// Operator documents:
///   {"space":"l2","model":"diagonal"|"shift","explicit":[...],"tail":TAIL}
///   {"space":"l2","model":"matrix","matrix":[[...],...]}
///   {"space":"l1","model":"columns","columns":[[...],...],"tail_weights":[...],"tail":TAIL}
/// with TAIL = {"kind":"const","value":v} | {"kind":"geometric","limit":l,"ratio":r}.
/// "explicit", "columns" and "tail_weights" default to empty, "tail" to
/// const 0. Throws ValidationError naming the offending field.
Operator parse_operator(const Json& doc);
Operator parse_operator(const std::string& text);
inline Operator parse_operator(const char* text) { return parse_operator(std::string(text)); }

Json to_json(const TailRule& tail);
Json to_json(const HilbertOperator& t);
Json to_json(const L1Operator& t);
Json to_json(const Operator& t);
Json to_json(const Certificate& c);
Json to_json(const CompetitorReport& r);
Json to_json(const UniquenessReport& r);

}  // namespace ballprox
