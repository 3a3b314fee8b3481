#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "binplot/scene.hpp"

namespace binplot {

nlohmann::json scene_to_json_value(const Scene& scene);
/// Throws Error{ParseError} when the document does not match the schema.
Scene scene_from_json_value(const nlohmann::json& j);

/// Keys are sorted and doubles are written with round-trip precision, so
/// scene_from_json(scene_to_json(s)) == s.
std::string scene_to_json(const Scene& scene, int indent = -1);
Scene scene_from_json(std::string_view text);

}  // namespace binplot
