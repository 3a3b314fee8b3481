#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "binplot/aggregation.hpp"
#include "binplot/color.hpp"
#include "binplot/encoding.hpp"
#include "binplot/geometry.hpp"

namespace binplot {

// Glyph geometry is in screen coordinates (pixels, y down).

enum class PieVariant { Pie, Donut, AreaScaled };
enum class BarVariant { Grouped, Stacked };

/// Angles in degrees, clockwise from 12 o'clock.
struct PieSlice {
  ClassId cls = 0;
  double start = 0.0;
  double end = 0.0;
  Rgb color;
  friend bool operator==(const PieSlice&, const PieSlice&) = default;
};

struct PieGlyph {
  Point2 center;
  double outer_radius = 0.0;
  double inner_radius = 0.0;
  std::vector<PieSlice> slices;
  friend bool operator==(const PieGlyph&, const PieGlyph&) = default;
};

/// Axis-aligned bar or stacked segment; (x, y) is the top-left corner.
struct Bar {
  ClassId cls = 0;
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  Rgb color;
  friend bool operator==(const Bar&, const Bar&) = default;
};

struct BarGlyph {
  BarVariant variant = BarVariant::Grouped;
  double baseline = 0.0;
  std::vector<Bar> bars;
  friend bool operator==(const BarGlyph&, const BarGlyph&) = default;
};

struct PointDisc {
  ClassId cls = 0;
  Point2 center;
  double radius = 0.0;
  Rgb color;
  friend bool operator==(const PointDisc&, const PointDisc&) = default;
};

struct PointCluster {
  std::vector<PointDisc> discs;
  friend bool operator==(const PointCluster&, const PointCluster&) = default;
};

using GlyphGeometry = std::variant<PieGlyph, BarGlyph, PointCluster>;

inline constexpr double kDonutInnerRatio = 0.5;
inline constexpr double kMinAreaPieRadius = 3.0;
inline constexpr int kMaxRelaxIterations = 20;

/// Slices are proportional to counts, largest first, starting at 12 o'clock
/// and running clockwise; the last slice ends at exactly 360. AreaScaled
/// sets the radius to max_radius * sqrt(density), floored at
/// kMinAreaPieRadius. Throws Error{UnsupportedNormalization} unless `mode`
/// is bin-internal and Error{EmptyBin} when every count is zero.
PieGlyph pie_glyph(std::span<const std::uint64_t> counts, PieVariant variant,
                   NormalizationMode mode, std::optional<double> density_for_area,
                   Point2 center, double max_radius, const Palette& palette);

/// Bars in registry order on a common baseline at the bottom of `box`.
/// Zero values produce no bar. Throws Error{EmptyBin} for an all-zero bin.
BarGlyph bar_glyph(std::span<const double> values, BarVariant variant, NormalizationMode mode,
                   const Box& box, const Palette& palette);

/// Discs at the given positions, separated by at most kMaxRelaxIterations
/// rounds of pairwise pushes; every round ends by pulling discs back inside
/// `polygon`.
PointCluster point_glyph(std::span<const Point2> positions, std::span<const ClassId> classes,
                         double radius, std::span<const Point2> polygon, const Palette& palette);

}  // namespace binplot
