#pragma once

#include <json.hpp>

#include <memory>

#include "circa/dovetail.hpp"
#include "circa/enumerator.hpp"
#include "circa/radial.hpp"
#include "circa/trig.hpp"

namespace circa {

using json = nlohmann::json;

/// Interval <-> {"lo": decimal, "hi": decimal, "bits": n}. The decimal
/// strings are exact (dyadic endpoints terminate), so round-trips are exact.
json interval_to_json(const Interval& iv, long bits);
Interval interval_from_json(const json& j);

/// CReal evaluation result: {"approx": decimal, "error_bound": "2^-n"}.
/// The approx field is a dyadic rounding of the oracle value with the error
/// bound widened to absorb the rounding.
json creal_eval_to_json(const CReal& x, unsigned n);

/// TrigPoly <-> {"degree", "bits", "cos": [interval...], "sin": [interval...]}
/// (sin entries start at k = 1). Import quantizes: each coefficient becomes
/// the exact midpoint of its stored enclosure.
json trigpoly_to_json(const TrigPoly& p, long bits);
TrigPoly trigpoly_from_json(const json& j);

/// RadialProfile <-> {"knots": [rat...], "pieces": [[rat...]...],
/// "scale": rat, "pi_power": n} with rationals as exact "p/q" strings and
/// knots in units of pi.
json profile_to_json(const RadialProfile& q);
RadialProfile profile_from_json(const json& j);

/// Enumerator programs:
///   {"type": "finite", "body": [3, 5]}
///   {"type": "progression", "body": {"first": 1, "step": 2}}
///   {"type": "vm", "body": {"registers": 4, "code": ["loop: INC 0", ...]}}
std::shared_ptr<Enumerator> enumerator_from_json(const json& j);

json search_log_to_json(const SearchResult& r);

std::string rational_to_json_string(const Rational& q);
Rational rational_from_json_string(const std::string& s);

}  // namespace circa
