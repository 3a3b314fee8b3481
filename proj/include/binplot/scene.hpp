#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "binplot/design.hpp"
#include "binplot/encoding.hpp"
#include "binplot/geometry.hpp"
#include "binplot/glyphs.hpp"
#include "binplot/tessellation.hpp"

namespace binplot {

// Resolution-independent display list between composition and
// serialization. All coordinates are screen pixels with y pointing down.

struct Viewport {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

struct Tick {
  double value = 0.0;
  double position = 0.0;
  std::string label;
  friend bool operator==(const Tick&, const Tick&) = default;
};

struct AxisSet {
  std::vector<Tick> x;
  std::vector<Tick> y;
  std::string x_title;
  std::string y_title;
  friend bool operator==(const AxisSet&, const AxisSet&) = default;
};

/// A lattice cell with its outline and raw per-class counts.
struct BinRecord {
  BinIndex bin = 0;
  Polygon outline;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  friend bool operator==(const BinRecord&, const BinRecord&) = default;
};

/// Background fill of one bin. `area` is where fragment and block grids are
/// laid out; `strokes` holds clipped segments parallel to StrokeSet layers.
struct FillItem {
  BinIndex bin = 0;
  BinFill fill;
  Box area;
  std::vector<std::vector<Segment>> strokes;
  friend bool operator==(const FillItem&, const FillItem&) = default;
};

struct BoundaryItem {
  BinIndex bin = 0;
  friend bool operator==(const BoundaryItem&, const BoundaryItem&) = default;
};

struct GlyphItem {
  BinIndex bin = 0;
  GlyphGeometry glyph;
  friend bool operator==(const GlyphItem&, const GlyphItem&) = default;
};

using DisplayItem = std::variant<FillItem, BoundaryItem, GlyphItem>;

struct Panel {
  int index = 0;
  /// Set for juxtaposed panels, which show one class each.
  std::optional<ClassId> class_filter;
  std::string title;
  Viewport viewport;
  Domain domain;
  ShapeKind shape = ShapeKind::Rect;
  int bins_x = 1;
  AxisSet axes;
  std::vector<BinRecord> bins;
  /// Paint order: all fills, then boundaries, then glyphs.
  std::vector<DisplayItem> display;
  friend bool operator==(const Panel&, const Panel&) = default;
};

struct LegendEntry {
  ClassId cls = 0;
  std::string label;
  Rgb color;
  Point2 position;
  friend bool operator==(const LegendEntry&, const LegendEntry&) = default;
};

struct Scene {
  double width = 0.0;
  double height = 0.0;
  std::vector<Panel> panels;
  std::vector<LegendEntry> legend;
  DesignSpec spec;
  friend bool operator==(const Scene&, const Scene&) = default;
};

}  // namespace binplot
