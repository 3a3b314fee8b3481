#include "binplot/config.hpp"

#include <array>
#include <utility>

#include "binplot/encoding.hpp"
#include "binplot/error.hpp"

namespace binplot {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Errc::ConfigError, message); }

template <class E, std::size_t N>
E parse_enum(std::string_view what, std::string_view s, const std::array<E, N>& values) {
  std::string accepted;
  for (E v : values) {
    if (to_string(v) == s) return v;
    if (!accepted.empty()) accepted += ", ";
    accepted += to_string(v);
  }
  fail("unknown " + std::string(what) + " \"" + std::string(s) + "\" (expected one of: " +
       accepted + ")");
}

void check_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> keys) {
  if (!j.is_object()) fail(std::string(where) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) fail("unknown key \"" + key + "\" in " + std::string(where));
  }
}

std::string get_string(const json& j, std::string_view key) {
  if (!j.is_string()) fail("\"" + std::string(key) + "\" must be a string");
  return j.get<std::string>();
}

long long get_int(const json& j, std::string_view key) {
  if (!j.is_number_integer()) fail("\"" + std::string(key) + "\" must be an integer");
  return j.get<long long>();
}

double get_number(const json& j, std::string_view key) {
  if (!j.is_number()) fail("\"" + std::string(key) + "\" must be a number");
  return j.get<double>();
}

int get_small_int(const json& j, std::string_view key) {
  const long long v = get_int(j, key);
  if (v < -1000000 || v > 1000000) fail("\"" + std::string(key) + "\" is out of range");
  return static_cast<int>(v);
}

}  // namespace

ShapeKind parse_shape(std::string_view s) {
  return parse_enum("shape", s, std::array{ShapeKind::Rect, ShapeKind::Hex, ShapeKind::Tri});
}

NormalizationMode parse_normalization(std::string_view s) {
  return parse_enum("normalization", s,
                    std::array{NormalizationMode::BinInternal, NormalizationMode::ClassInternal,
                               NormalizationMode::Global});
}

ScaleKind parse_scale(std::string_view s) {
  return parse_enum("scale", s, std::array{ScaleKind::Linear, ScaleKind::Log});
}

Composition parse_composition(std::string_view s) {
  return parse_enum("composition", s,
                    std::array{Composition::Superimposed, Composition::Juxtaposed});
}

Background parse_background(std::string_view s) {
  return parse_enum("background", s,
                    std::array{Background::None, Background::Luminance, Background::Majority,
                               Background::Blend, Background::Weave, Background::AttributeBlocks,
                               Background::Hatching});
}

GlyphKind parse_glyph(std::string_view s) {
  return parse_enum("glyph", s,
                    std::array{GlyphKind::None, GlyphKind::Pie, GlyphKind::Donut,
                               GlyphKind::AreaPie, GlyphKind::GroupedBar, GlyphKind::StackedBar,
                               GlyphKind::Points});
}

DesignSpec design_from_json(const json& j) {
  check_keys(j, "design",
             {"shape", "bins_x", "boundaries", "normalization", "scale", "composition",
              "background", "glyph", "palette", "seed", "panel_size", "quantization",
              "hatch_draw_order", "hatch_angles", "fragments", "sample_budget", "point_radius",
              "heterogeneous", "panel_bins_x"});
  DesignSpec s;
  for (const auto& [key, v] : j.items()) {
    if (key == "shape") {
      s.shape = parse_shape(get_string(v, key));
    } else if (key == "bins_x") {
      s.bins_x = get_small_int(v, key);
    } else if (key == "boundaries") {
      if (!v.is_boolean()) fail("\"boundaries\" must be true or false");
      s.boundaries = v.get<bool>();
    } else if (key == "normalization") {
      s.normalization = parse_normalization(get_string(v, key));
    } else if (key == "scale") {
      s.scale = parse_scale(get_string(v, key));
    } else if (key == "composition") {
      s.composition = parse_composition(get_string(v, key));
    } else if (key == "background") {
      s.background = parse_background(get_string(v, key));
    } else if (key == "glyph") {
      s.glyph = parse_glyph(get_string(v, key));
    } else if (key == "palette") {
      if (!v.is_array()) fail("\"palette\" must be an array of \"#rrggbb\" strings");
      for (const auto& c : v) {
        try {
          s.palette.push_back(Rgb::from_hex(get_string(c, key)));
        } catch (const Error& e) {
          if (e.code() == Errc::ConfigError) throw;
          fail(std::string("palette: ") + e.what());
        }
      }
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail("\"seed\" must be a non-negative integer");
      }
      s.seed = v.get<std::uint64_t>();
    } else if (key == "panel_size") {
      s.panel_size = get_small_int(v, key);
    } else if (key == "quantization") {
      // true selects the default level count, false a continuous ramp.
      if (v.is_boolean()) {
        s.quantization = v.get<bool>() ? kDefaultQuantizationLevels : 0;
      } else {
        s.quantization = get_small_int(v, key);
      }
    } else if (key == "hatch_draw_order") {
      if (!v.is_array()) fail("\"hatch_draw_order\" must be an array of class labels");
      for (const auto& c : v) s.hatch_draw_order.push_back(get_string(c, key));
    } else if (key == "hatch_angles") {
      if (!v.is_array()) fail("\"hatch_angles\" must be an array of numbers");
      for (const auto& a : v) s.hatch_angles.push_back(get_number(a, key));
    } else if (key == "fragments") {
      s.fragments = get_small_int(v, key);
    } else if (key == "sample_budget") {
      s.sample_budget = get_small_int(v, key);
    } else if (key == "point_radius") {
      s.point_radius = get_number(v, key);
    } else if (key == "heterogeneous") {
      if (!v.is_boolean()) fail("\"heterogeneous\" must be true or false");
      s.heterogeneous = v.get<bool>();
    } else if (key == "panel_bins_x") {
      if (!v.is_array()) fail("\"panel_bins_x\" must be an array of integers");
      for (const auto& b : v) s.panel_bins_x.push_back(get_small_int(b, key));
    }
  }
  return s;
}

json design_to_json(const DesignSpec& s) {
  json j;
  j["shape"] = to_string(s.shape);
  j["bins_x"] = s.bins_x;
  j["boundaries"] = s.boundaries;
  j["normalization"] = to_string(s.normalization);
  j["scale"] = to_string(s.scale);
  j["composition"] = to_string(s.composition);
  j["background"] = to_string(s.background);
  j["glyph"] = to_string(s.glyph);
  j["palette"] = json::array();
  for (const auto& c : s.palette) j["palette"].push_back(c.hex());
  j["seed"] = s.seed;
  j["panel_size"] = s.panel_size;
  j["quantization"] = s.quantization;
  j["hatch_draw_order"] = s.hatch_draw_order;
  j["hatch_angles"] = s.hatch_angles;
  j["fragments"] = s.fragments;
  j["sample_budget"] = s.sample_budget;
  j["point_radius"] = s.point_radius;
  j["heterogeneous"] = s.heterogeneous;
  j["panel_bins_x"] = s.panel_bins_x;
  return j;
}

DesignConfig config_from_json(const json& j) {
  if (!j.is_object()) fail("config must be a JSON object");
  DesignConfig cfg;
  json design = json::object();
  for (const auto& [key, v] : j.items()) {
    if (key == "columns") {
      check_keys(v, "columns", {"x", "y", "class"});
      if (v.contains("x")) cfg.columns.x = get_string(v["x"], "columns.x");
      if (v.contains("y")) cfg.columns.y = get_string(v["y"], "columns.y");
      if (v.contains("class")) cfg.columns.cls = get_string(v["class"], "columns.class");
    } else if (key == "domain") {
      check_keys(v, "domain", {"x_min", "x_max", "y_min", "y_max"});
      for (auto k : {"x_min", "x_max", "y_min", "y_max"}) {
        if (!v.contains(k)) fail(std::string("domain is missing \"") + k + "\"");
      }
      Domain d{get_number(v["x_min"], "domain.x_min"), get_number(v["x_max"], "domain.x_max"),
               get_number(v["y_min"], "domain.y_min"), get_number(v["y_max"], "domain.y_max")};
      if (!d.valid()) fail("domain must have x_min < x_max and y_min < y_max");
      cfg.domain = d;
    } else if (key == "class_order") {
      if (!v.is_array()) fail("\"class_order\" must be an array of class labels");
      for (const auto& c : v) cfg.class_order.push_back(get_string(c, key));
    } else {
      design[key] = v;
    }
  }
  cfg.design = design_from_json(design);
  return cfg;
}

json config_to_json(const DesignConfig& cfg) {
  json j = design_to_json(cfg.design);
  j["columns"] = {{"x", cfg.columns.x}, {"y", cfg.columns.y}, {"class", cfg.columns.cls}};
  if (cfg.domain) {
    j["domain"] = {{"x_min", cfg.domain->x_min},
                   {"x_max", cfg.domain->x_max},
                   {"y_min", cfg.domain->y_min},
                   {"y_max", cfg.domain->y_max}};
  }
  if (!cfg.class_order.empty()) j["class_order"] = cfg.class_order;
  return j;
}

DesignConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

}  // namespace binplot
