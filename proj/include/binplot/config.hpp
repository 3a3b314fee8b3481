#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "binplot/design.hpp"
#include "binplot/tessellation.hpp"

namespace binplot {

struct ColumnNames {
  std::string x = "x";
  std::string y = "y";
  std::string cls = "class";
  friend bool operator==(const ColumnNames&, const ColumnNames&) = default;
};

/// Everything a design config file controls: the design itself, which CSV
/// columns to read, and optional overrides for the domain and class order.
struct DesignConfig {
  DesignSpec design;
  ColumnNames columns;
  std::optional<Domain> domain;
  std::vector<std::string> class_order;
  friend bool operator==(const DesignConfig&, const DesignConfig&) = default;
};

// Enum vocabulary shared by config files, the service and the CLI. Each
// parser throws Error{ConfigError} naming the accepted values.
ShapeKind parse_shape(std::string_view s);
NormalizationMode parse_normalization(std::string_view s);
ScaleKind parse_scale(std::string_view s);
Composition parse_composition(std::string_view s);
Background parse_background(std::string_view s);
GlyphKind parse_glyph(std::string_view s);

/// Throws Error{ConfigError} for unknown keys, wrong types and bad enums.
DesignSpec design_from_json(const nlohmann::json& j);
nlohmann::json design_to_json(const DesignSpec& spec);

DesignConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const DesignConfig& config);

/// Parse config text; malformed JSON is Error{ConfigError} too.
DesignConfig parse_config(std::string_view text);

}  // namespace binplot
