#pragma once

// JSON and DOT formats.
//
// Build script:  {"n": N, "ops": [{"letter": "[1]", "lo": "bottom"|id, "hi": "top"|id}, ...]}
// Space export:  {"n": N, "vertices": [{"id": 0, "level": 0}, ...],
//                 "edges": [[0, 1], ...], "build_log": [{..op.., "created": [...]}, ...]}
// A space export without a build log is loaded as a hand-built graph.

#include <string>

#include <json.hpp>

#include "psn/flags.hpp"
#include "psn/space.hpp"

namespace psn {

Anchor anchor_from_json(const nlohmann::json& j);
nlohmann::json anchor_to_json(Anchor a);

ColoredSpace space_from_script(const nlohmann::json& script);
nlohmann::json space_to_json(const ColoredSpace& space);
// Replays the build log and checks it reproduces the listed graph.
ColoredSpace space_from_json(const nlohmann::json& j);
// Accepts either a build script or a space export.
ColoredSpace load_space(const nlohmann::json& j);

std::string to_dot(const ColoredSpace& space);

nlohmann::json flag_to_json(const Flag& F);
Flag flag_from_json(const nlohmann::json& j);

}  // namespace psn
