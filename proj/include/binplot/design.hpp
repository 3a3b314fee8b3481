#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binplot/aggregation.hpp"
#include "binplot/color.hpp"
#include "binplot/dataset.hpp"
#include "binplot/tessellation.hpp"

namespace binplot {

enum class Composition { Superimposed, Juxtaposed };
enum class Background { None, Luminance, Majority, Blend, Weave, AttributeBlocks, Hatching };
enum class GlyphKind { None, Pie, Donut, AreaPie, GroupedBar, StackedBar, Points };

std::string_view to_string(Composition c) noexcept;
std::string_view to_string(Background b) noexcept;
std::string_view to_string(GlyphKind g) noexcept;

/// Every design decision needed to turn a dataset into a plot.
struct DesignSpec {
  ShapeKind shape = ShapeKind::Hex;
  int bins_x = 12;
  bool boundaries = true;
  NormalizationMode normalization = NormalizationMode::Global;
  ScaleKind scale = ScaleKind::Linear;
  Composition composition = Composition::Superimposed;
  Background background = Background::Luminance;
  GlyphKind glyph = GlyphKind::None;
  /// Class colors; empty selects the built-in palette.
  std::vector<Rgb> palette;
  std::uint64_t seed = 0;
  /// Side of each square plot panel in pixels.
  int panel_size = 400;
  /// Luminance levels; 0 is a continuous ramp.
  int quantization = 0;
  /// Hatch paint order as class labels, last on top; empty selects the
  /// default (densest class first).
  std::vector<std::string> hatch_draw_order;
  /// Hatch angle per class in degrees; empty selects evenly spaced angles.
  std::vector<double> hatch_angles;
  /// Fragment grid side for weaving.
  int fragments = 8;
  /// Points drawn per bin for the point glyph.
  int sample_budget = 10;
  double point_radius = 2.5;
  /// Per-panel bins_x for juxtaposed designs.
  bool heterogeneous = false;
  std::vector<int> panel_bins_x;

  friend bool operator==(const DesignSpec&, const DesignSpec&) = default;
};

/// A broken legality rule or parameter constraint. `rule` is a stable id.
struct Violation {
  std::string rule;
  std::string message;
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

namespace rules {
inline constexpr std::string_view kPieNormalization = "pie-requires-bin-internal";
inline constexpr std::string_view kJuxtaposedNormalization = "juxtaposed-requires-class-internal-or-global";
inline constexpr std::string_view kWeave = "weave-requires-bin-internal-or-global-and-no-glyph";
inline constexpr std::string_view kFullBinFill = "full-bin-fill-excludes-glyph";
inline constexpr std::string_view kBoundaryless = "boundaryless-bins-require-glyph";
inline constexpr std::string_view kParameter = "invalid-parameter";
}  // namespace rules

/// The five combination rules only; independent of any dataset.
std::vector<Violation> legality_violations(const DesignSpec& spec);

/// Combination rules plus parameter checks against `dataset`. Returns every
/// violation, not just the first.
std::vector<Violation> validate(const DesignSpec& spec, const Dataset& dataset);

/// A spec that passed validation for a dataset with `class_count` classes.
class ValidatedDesign {
 public:
  const DesignSpec& spec() const { return spec_; }
  std::size_t class_count() const { return class_count_; }

 private:
  friend struct ValidationResult validate_design(const DesignSpec&, const Dataset&);
  ValidatedDesign(DesignSpec spec, std::size_t class_count)
      : spec_(std::move(spec)), class_count_(class_count) {}

  DesignSpec spec_;
  std::size_t class_count_ = 0;
};

struct ValidationResult {
  std::optional<ValidatedDesign> design;
  std::vector<Violation> violations;

  bool ok() const { return design.has_value(); }
};

ValidationResult validate_design(const DesignSpec& spec, const Dataset& dataset);

}  // namespace binplot
