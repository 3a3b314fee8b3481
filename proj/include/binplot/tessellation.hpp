#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "binplot/geometry.hpp"

namespace binplot {

enum class ShapeKind { Rect, Hex, Tri };

std::string_view to_string(ShapeKind shape) noexcept;

struct Domain {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(Point2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  Box box() const { return {x_min, y_min, x_max, y_max}; }
  bool valid() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

using BinIndex = std::size_t;

/// Regular tessellation of a rectangular data domain.
///
/// Geometry lives in a normalized frame where u = x - x_min and y is rescaled
/// by width/height, so the frame is always a square of side `domain.width()`.
/// Cells are regular in that frame, which makes them regular on a square
/// panel. Bin indices are row-major with row 0 at y_min.
///
///  - Rect: bins_x x bins_x square cells.
///  - Hex: pointy-top hexagons with column pitch width/bins_x. Even rows hold
///    bins_x + 1 centers starting at u = 0, odd rows hold bins_x centers
///    shifted by half a pitch. Rows are added until the domain is covered.
///  - Tri: every rect cell split along a diagonal, bottom-left to top-right in
///    even columns and top-left to bottom-right in odd ones. Part 0 is the
///    triangle touching the cell's bottom edge.
///
/// Lattices are immutable; all queries are const and thread-safe.
class BinLattice {
 public:
  struct Cell {
    int row = 0;
    int col = 0;
    int part = 0;
  };

  /// Throws Error{InvalidDomain} or Error{InvalidParameter}.
  static BinLattice build(const Domain& domain, ShapeKind shape, int bins_x);

  ShapeKind shape() const { return shape_; }
  const Domain& domain() const { return domain_; }
  int bins_x() const { return bins_x_; }
  /// Column pitch in data units.
  double cell_width() const { return cell_width_; }
  /// Row pitch in data units.
  double cell_height() const { return cell_height_; }
  int grid_rows() const { return rows_; }
  int grid_cols() const { return cols_; }
  std::size_t bin_count() const { return bin_count_; }

  /// Throws Error{OutOfDomain} for points outside the closed domain.
  BinIndex assign(Point2 p) const;
  std::optional<BinIndex> try_assign(Point2 p) const noexcept;

  /// Cell polygon clipped to the domain, counter-clockwise, data space.
  Polygon bin_polygon(BinIndex bin) const;
  /// Full cell polygon before clipping.
  Polygon cell_polygon(BinIndex bin) const;
  /// Edge-adjacent bins in ascending index order.
  std::vector<BinIndex> neighbors(BinIndex bin) const;

  /// Axis-aligned box inside the clipped bin polygon, square in the frame.
  Box inscribed_box(BinIndex bin) const;

  Cell cell_of(BinIndex bin) const;
  std::size_t row_size(int row) const;

  Point2 to_frame(Point2 data) const;
  Point2 from_frame(Point2 frame) const;

  friend bool operator==(const BinLattice&, const BinLattice&) = default;

 private:
  BinLattice() = default;

  void check_index(BinIndex bin) const;
  double grid_x(long k, long denom) const;
  double grid_y(long k, long denom) const;
  double hex_x(long half_cols) const;
  double hex_y(long half_radii) const;
  BinIndex hex_index(int row, int col) const;
  std::optional<BinIndex> assign_hex(Point2 frame) const noexcept;
  std::pair<int, int> rect_cell(Point2 p) const noexcept;

  ShapeKind shape_ = ShapeKind::Rect;
  Domain domain_;
  int bins_x_ = 1;
  double cell_width_ = 0.0;
  double cell_height_ = 0.0;
  int rows_ = 0;
  int cols_ = 0;
  std::size_t bin_count_ = 0;
  // Hex only: frame-space pitch and circumradius, first index of each row.
  double hex_pitch_ = 0.0;
  double hex_radius_ = 0.0;
  std::vector<std::size_t> row_start_;
};

BinLattice build_lattice(const Domain& domain, ShapeKind shape, int bins_x);
inline BinIndex assign(const BinLattice& lattice, Point2 p) { return lattice.assign(p); }
inline Polygon bin_polygon(const BinLattice& lattice, BinIndex bin) {
  return lattice.bin_polygon(bin);
}
inline std::vector<BinIndex> neighbors(const BinLattice& lattice, BinIndex bin) {
  return lattice.neighbors(bin);
}

}  // namespace binplot
