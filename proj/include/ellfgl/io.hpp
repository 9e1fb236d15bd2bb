#pragma once

#include <string>

#include "ellfgl/report.hpp"
#include "ellfgl/ring.hpp"
#include "ellfgl/series.hpp"
#include "json.hpp"

namespace ellfgl {

using Json = nlohmann::json;

// {"vars": [...], "weights": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
Json to_json(const MPoly& p);
// Builds a fresh VarSpec from "vars" and "weights". Throws std::invalid_argument
// on malformed input.
MPoly mpoly_from_json(const Json& j);

// {"kind": "useries" | "bseries", "vars": [...], "order": N,
//  "terms": [{"exp": [k] or [i, j], "coeff": <MPoly>}]}; zero terms are omitted.
// An extra "ring" object (vars, weights) names the coefficient ring, so a zero
// series still round-trips.
Json to_json(const USeries& s);
Json to_json(const BSeries& s);
USeries useries_from_json(const Json& j);
BSeries bseries_from_json(const Json& j);

// {"passed": bool, "checks": [{"name", "passed", "detail"}]}
Json to_json(const Report& r);

}  // namespace ellfgl
