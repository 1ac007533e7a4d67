#pragma once

#include "wulffbez/decomposition.hpp"
#include "wulffbez/inequality.hpp"
#include "wulffbez/polytope.hpp"
#include "wulffbez/sphere_measure.hpp"
#include "wulffbez/wulff.hpp"

#include <json.hpp>

#include <string>

namespace wulffbez {

using json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; integers inside direction vectors as
// JSON numbers. Readers throw std::invalid_argument on malformed input.

json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);

json direction_to_json(const Direction& w);
Direction direction_from_json(const json& j);

/// {"n": int, "vertices": [["p/q", ...], ...]}
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

/// Polytope JSON plus derived dim, volume and facets (normal, offset, coweight).
json polytope_details_to_json(const Polytope& p);

/// {"n": int, "atoms": [{"dir": [ints], "coweight": "p/q"}]}
json measure_to_json(const DiscreteSphereMeasure& mu);
DiscreteSphereMeasure measure_from_json(const json& j);

/// {"n": int, "entries": [{"dir": [ints], "value": "p/q"}]}
json support_spec_to_json(const SupportSpec& spec);
SupportSpec support_spec_from_json(const json& j);

/// {"form", "lhs", "rhs", "ratio", "verdict", "bodies"}; ratio is null when
/// rhs = 0, bodies lists L_1.. then K.
json report_to_json(const InequalityReport& report);

json derivative_report_to_json(const DerivativeReport& report);
json probe_report_to_json(const ProbeReport& report);
json witness_to_json(const Witness& witness);
json chain_check_to_json(const ChainCheck& check);
json certify_summary_to_json(const CertifyReport& report);

/// One row per evaluated instance: trial,form,lhs,rhs,verdict.
std::string certify_csv(const CertifyReport& report);

json parse_json_text(const std::string& text);
json read_json_file(const std::string& path);
Polytope read_polytope_file(const std::string& path);

}  // namespace wulffbez
