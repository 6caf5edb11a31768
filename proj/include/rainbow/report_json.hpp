#pragma once

#include "rainbow/heuristics.hpp"
#include "rainbow/latin.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace rainbow {

// {"method","k","vertices","length","c_k_size","certificate":{"start","end"},
//  "bound":{"num","den"},"trace":[...]}; exact reports add "exhaustive".
// Trace entries: {"op":"extend_start"|"extend_end","v":int} or
// {"op":"rotate","i":int}.
nlohmann::json report_to_json(const SolveReport& r);

nlohmann::json certificate_to_json(const MaximalityCertificate& c);

// {"vertices":[...],"k":int,"colors":[...]} - colors are derived output.
nlohmann::json path_to_json(const Path& p, int k);

// Returns (vertices, k); the colors field is ignored on input, k defaults
// to 1.
std::pair<std::vector<int>, int> path_from_json(const nlohmann::json& j);

// {"cells":[[r,c],...],"values":[...]}.
nlohmann::json transversal_to_json(const LatinSquare& sq, const Transversal& t);
Transversal transversal_from_json(const nlohmann::json& j);

}  // namespace rainbow
