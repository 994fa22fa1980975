#pragma once

// JSON forms of profiles, polytopes, ball oracles and deficit reports.
//   profile:   {"n": 3, "radii": [...], "angles": [...]}
//   polytope:  {"n": 2, "vertices": [[x, y], ...]}
//   oracle:    {"n": 3, "balls": [{"center": [...], "radius": r, "sign": 1}, ...]}
// Readers throw std::invalid_argument on malformed or invalid input.

#include <string>

#include "json.hpp"

#include "isodiam/convex.hpp"
#include "isodiam/profile.hpp"
#include "isodiam/rearrange.hpp"

namespace isodiam {

nlohmann::json profile_to_json(const RadialProfile& p);
RadialProfile profile_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const Polytope& f);
/// Hull of the listed vertices.
Polytope polytope_from_json(const nlohmann::json& j);

IndicatorSet oracle_from_json(const nlohmann::json& j);

nlohmann::json deficit_report_json(const DeficitReport& r);
nlohmann::json convex_report_json(const ConvexReport& r);

/// Parses text; syntax errors become std::invalid_argument.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);

}  // namespace isodiam
