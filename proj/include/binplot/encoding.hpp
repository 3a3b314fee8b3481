#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "binplot/aggregation.hpp"
#include "binplot/color.hpp"
#include "binplot/dataset.hpp"
#include "binplot/geometry.hpp"

namespace binplot {

struct Ramp {
  Rgb start{0xf7, 0xf7, 0xf7};
  Rgb end{0x25, 0x25, 0x25};

  friend bool operator==(const Ramp&, const Ramp&) = default;
};

/// Categorical class colors plus the sequential density ramp.
struct Palette {
  std::vector<Rgb> classes;
  Rgb background = kWhite;
  Ramp density;
  /// 0 means a continuous ramp.
  int quantization_levels = 0;

  /// First `class_count` entries of the built-in ten-color set.
  static Palette default_for(std::size_t class_count);

  /// Throws Error{TooManyClasses} or Error{InvalidParameter} when the palette
  /// cannot color `class_count` classes with pairwise distinct colors.
  void check(std::size_t class_count) const;

  Rgb class_color(ClassId cls) const { return classes.at(cls); }
  /// White-to-class-hue ramp used for single-class tones.
  Ramp class_ramp(ClassId cls) const { return Ramp{kWhite, class_color(cls)}; }

  friend bool operator==(const Palette&, const Palette&) = default;
};

const std::array<Rgb, kMaxClasses>& default_class_colors();

/// Default number of levels when quantization is requested without a count.
inline constexpr int kDefaultQuantizationLevels = 5;

struct SolidColor {
  Rgb color;
  friend bool operator==(const SolidColor&, const SolidColor&) = default;
};

/// side x side fragments, row-major from the top-left. Class -1 is white.
struct FragmentGrid {
  int side = 0;
  std::vector<int> classes;
  std::vector<Rgb> colors;

  std::vector<std::size_t> class_histogram(std::size_t class_count) const;
  friend bool operator==(const FragmentGrid&, const FragmentGrid&) = default;
};

/// Fixed per-class cell layout, row-major from the top-left. Class -1 marks
/// an unused cell.
struct SubBlockGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> classes;
  std::vector<Rgb> colors;
  friend bool operator==(const SubBlockGrid&, const SubBlockGrid&) = default;
};

struct HatchLayer {
  ClassId cls = 0;
  /// Degrees counter-clockwise from the screen x axis.
  double angle = 0.0;
  double spacing = 0.0;
  Rgb color;
  /// Paint position; higher paints later (on top).
  int order = 0;
  friend bool operator==(const HatchLayer&, const HatchLayer&) = default;
};

/// Layers sorted by paint order.
struct StrokeSet {
  std::vector<HatchLayer> layers;
  double stroke_width = 1.0;
  friend bool operator==(const StrokeSet&, const StrokeSet&) = default;
};

using BinFill = std::variant<SolidColor, FragmentGrid, SubBlockGrid, StrokeSet>;

/// Snap to the midpoint of the level containing `intensity`.
double quantize(double intensity, int levels);

/// Throws Error{InvalidIntensity} outside [0, 1].
Rgb luminance_fill(double intensity, const Ramp& ramp, int quantization_levels = 0);

/// First index of the maximum positive value; nullopt when all are zero.
std::optional<ClassId> majority_class(std::span<const double> values);
Rgb majority_fill(std::span<const double> values, const Palette& palette);

/// Weighted average of class colors in linear light. All-zero gives the
/// background color.
Rgb blend_fill(std::span<const double> intensities, const Palette& palette);

/// Color weaving. Bin-internal colors all fragments; global colors
/// round(side^2 * density) of them and leaves the rest white. Colored
/// fragments are apportioned by `class_counts`; positions come from a seeded
/// shuffle. Throws Error{UnsupportedNormalization} for class-internal.
FragmentGrid weave_fill(std::span<const std::uint64_t> class_counts, double density,
                        NormalizationMode mode, int side, std::uint64_t seed,
                        const Palette& palette);

std::pair<int, int> default_block_dims(std::size_t class_count);

/// Class c occupies cell c; tone follows the class's white-to-hue ramp.
/// Throws Error{GridTooSmall}.
SubBlockGrid attribute_block_fill(std::span<const double> intensities, const Palette& palette,
                                  int rows, int cols);

struct HatchParams {
  double min_spacing = 2.0;
  double max_spacing = 10.0;
  double stroke_width = 1.0;
};

/// Evenly spaced angles over [0, 180).
std::vector<double> default_hatch_angles(std::size_t class_count);
/// Classes by descending total so sparse classes paint last; ties keep
/// registry order.
std::vector<ClassId> default_draw_order(std::span<const std::uint64_t> class_totals);
double hatch_spacing(double intensity, const HatchParams& params);

/// Throws Error{TooManyClasses} when the angle table is shorter than the
/// class list, Error{InvalidParameter} when draw_order is not a permutation.
StrokeSet hatch_fill(std::span<const double> intensities, const Palette& palette,
                     std::span<const double> angle_table, std::span<const ClassId> draw_order,
                     const HatchParams& params = {});

struct Segment {
  Point2 a;
  Point2 b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Parallel strokes of one layer clipped to a convex polygon given in screen
/// coordinates (y down). Lines are anchored at the screen origin so the same
/// layer lines up across neighbouring bins.
std::vector<Segment> hatch_segments(const HatchLayer& layer, std::span<const Point2> polygon);

}  // namespace binplot
