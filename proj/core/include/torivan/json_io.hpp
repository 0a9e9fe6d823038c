/**
 * JSON serialization of fans, divisors, parameters, cohomology reports and
 * sweep verdicts.
 *
 * Integers ride as plain JSON numbers while they fit in 53 bits and as
 * decimal strings beyond that, so every value round-trips exactly through
 * double-based JSON tooling. Loading a fan re-validates it and stamps the
 * completeness/smoothness flags from the verdicts, never from the file.
 */

#ifndef TORIVAN_JSON_IO_HPP
#define TORIVAN_JSON_IO_HPP

#include <json.hpp>
#include <utility>
#include <vector>

#include "torivan/cohomology.hpp"
#include "torivan/divisor.hpp"
#include "torivan/fan.hpp"

namespace torivan {

using Json = nlohmann::json;

/** Number within +-(2^53-1), decimal string beyond. */
Json int_to_json(const Int& v);
/** Accepts integral numbers and decimal strings. */
Int int_from_json(const Json& j);

/** { "dim": n, "rays": [[...]...], "max_cones": [[...]...], "labels": {"0": "u0", ...} } */
Json fan_to_json(const Fan& fan);

/**
 * Parses and validates a fan. Structurally broken input (bad types, ray
 * indices out of range, unsorted cones) throws std::invalid_argument; the
 * returned fan's `complete`/`smooth` flags come from validate_fan, and the
 * full verdict is copied into *verdict when given.
 */
Fan fan_from_json(const Json& j, FanValidation* verdict = nullptr);

Json validation_to_json(const FanValidation& v);

/** { "fan": <inline fan>, "coeffs": { "<ray index>": int, ... } } */
Json divisor_to_json(const Fan& fan, const ToricDivisor& d);

/**
 * Parses a divisor together with its fan. The "fan" member must be inline;
 * callers resolve file references before handing the document over.
 */
std::pair<Fan, ToricDivisor> divisor_from_json(const Json& j);

/** { "n": int, "points": int, "a": [int...], "b": int } */
Json params_to_json(const BlowupParams& p);
BlowupParams params_from_json(const Json& j);

Json box_to_json(const SearchBox& box);
SearchBox box_from_json(const Json& j);

/**
 * { "divisor": ..., "box": {"lo": [...], "hi": [...]}, "dims": [...],
 *   "contributions": [{"m": [...], "ranks": {"0": k, ...}}, ...] }
 * The divisor echo carries the fan inline so reports are self-contained.
 */
Json report_to_json(const Fan& fan, const CohomologyReport& report);
std::pair<Fan, CohomologyReport> report_from_json(const Json& j);

/** Sweep rows: { "params": ..., "predicate": bool, "h1": int, "agree": bool [, "error"] } */
Json sweep_to_json(const std::vector<VanishingVerdict>& sweep);
std::vector<VanishingVerdict> sweep_from_json(const Json& j);

}  // namespace torivan

#endif  // TORIVAN_JSON_IO_HPP
