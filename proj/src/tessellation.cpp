#include "binplot/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "binplot/error.hpp"

namespace binplot {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

bool shares_edge(const Polygon& a, const Polygon& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point2 a0 = a[i];
    const Point2 a1 = a[(i + 1) % a.size()];
    if (a0 == a1) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Point2 b0 = b[j];
      const Point2 b1 = b[(j + 1) % b.size()];
      if ((a0 == b1 && a1 == b0) || (a0 == b0 && a1 == b1)) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(ShapeKind shape) noexcept {
  switch (shape) {
    case ShapeKind::Rect: return "rect";
    case ShapeKind::Hex: return "hex";
    case ShapeKind::Tri: return "tri";
  }
  return "rect";
}

bool Domain::valid() const {
  return std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
         std::isfinite(y_max) && x_min < x_max && y_min < y_max;
}

BinLattice BinLattice::build(const Domain& domain, ShapeKind shape, int bins_x) {
  if (!domain.valid()) {
    throw Error(Errc::InvalidDomain, "domain extents must be finite with min < max");
  }
  if (bins_x < 1) {
    throw Error(Errc::InvalidParameter, "bins_x must be at least 1");
  }
  BinLattice lat;
  lat.shape_ = shape;
  lat.domain_ = domain;
  lat.bins_x_ = bins_x;
  const double w = domain.width();
  const double n = static_cast<double>(bins_x);

  switch (shape) {
    case ShapeKind::Rect:
    case ShapeKind::Tri:
      lat.rows_ = bins_x;
      lat.cols_ = bins_x;
      lat.cell_width_ = w / n;
      lat.cell_height_ = domain.height() / n;
      lat.bin_count_ = static_cast<std::size_t>(bins_x) * static_cast<std::size_t>(bins_x) *
                       (shape == ShapeKind::Tri ? 2u : 1u);
      break;
    case ShapeKind::Hex: {
      const double pitch = w / n;
      const double radius = pitch / kSqrt3;
      const double row_pitch = 1.5 * radius;
      // The top row's zigzag bottom edge must reach the frame top (height w).
      const double reach = (w - 0.5 * radius) / row_pitch;
      int last = reach <= 0.0 ? 0 : static_cast<int>(std::ceil(reach - 1e-9));
      lat.rows_ = last + 1;
      lat.cols_ = bins_x + 1;
      lat.hex_pitch_ = pitch;
      lat.hex_radius_ = radius;
      lat.cell_width_ = pitch;
      lat.cell_height_ = row_pitch * domain.height() / w;
      lat.row_start_.resize(static_cast<std::size_t>(lat.rows_) + 1);
      std::size_t acc = 0;
      for (int r = 0; r < lat.rows_; ++r) {
        lat.row_start_[r] = acc;
        acc += (r % 2 == 0) ? static_cast<std::size_t>(bins_x) + 1 : static_cast<std::size_t>(bins_x);
      }
      lat.row_start_[lat.rows_] = acc;
      lat.bin_count_ = acc;
      break;
    }
  }
  return lat;
}

BinLattice build_lattice(const Domain& domain, ShapeKind shape, int bins_x) {
  return BinLattice::build(domain, shape, bins_x);
}

Point2 BinLattice::to_frame(Point2 data) const {
  return {data.x - domain_.x_min, (data.y - domain_.y_min) * (domain_.width() / domain_.height())};
}

Point2 BinLattice::from_frame(Point2 frame) const {
  return {domain_.x_min + frame.x, domain_.y_min + frame.y * (domain_.height() / domain_.width())};
}

// Vertex coordinates come from integer lattice indices so that neighbouring
// cells compute bit-identical shared vertices.
double BinLattice::grid_x(long k, long denom) const {
  if (k == denom) return domain_.x_max;
  return domain_.x_min + static_cast<double>(k) * (domain_.width() / static_cast<double>(denom));
}

double BinLattice::grid_y(long k, long denom) const {
  if (k == denom) return domain_.y_max;
  return domain_.y_min + static_cast<double>(k) * (domain_.height() / static_cast<double>(denom));
}

double BinLattice::hex_x(long half_cols) const { return grid_x(half_cols, 2L * bins_x_); }

double BinLattice::hex_y(long half_radii) const {
  return domain_.y_min +
         static_cast<double>(half_radii) * (0.5 * hex_radius_ * domain_.height() / domain_.width());
}

std::size_t BinLattice::row_size(int row) const {
  switch (shape_) {
    case ShapeKind::Rect: return static_cast<std::size_t>(cols_);
    case ShapeKind::Tri: return static_cast<std::size_t>(cols_) * 2;
    case ShapeKind::Hex:
      return (row % 2 == 0) ? static_cast<std::size_t>(bins_x_) + 1 : static_cast<std::size_t>(bins_x_);
  }
  return 0;
}

BinIndex BinLattice::hex_index(int row, int col) const {
  return row_start_[static_cast<std::size_t>(row)] + static_cast<std::size_t>(col);
}

void BinLattice::check_index(BinIndex bin) const {
  if (bin >= bin_count_) {
    throw Error(Errc::InvalidIndex, "bin index " + std::to_string(bin) + " out of range [0, " +
                                        std::to_string(bin_count_) + ")");
  }
}

BinLattice::Cell BinLattice::cell_of(BinIndex bin) const {
  check_index(bin);
  switch (shape_) {
    case ShapeKind::Rect:
      return {static_cast<int>(bin / cols_), static_cast<int>(bin % cols_), 0};
    case ShapeKind::Tri: {
      const std::size_t cell = bin / 2;
      return {static_cast<int>(cell / cols_), static_cast<int>(cell % cols_), static_cast<int>(bin % 2)};
    }
    case ShapeKind::Hex: {
      const auto it = std::upper_bound(row_start_.begin(), row_start_.end(), bin);
      const int row = static_cast<int>(it - row_start_.begin()) - 1;
      return {row, static_cast<int>(bin - row_start_[row]), 0};
    }
  }
  return {};
}

std::pair<int, int> BinLattice::rect_cell(Point2 p) const noexcept {
  const long n = bins_x_;
  long col = static_cast<long>(std::floor((p.x - domain_.x_min) / cell_width_));
  long row = static_cast<long>(std::floor((p.y - domain_.y_min) / cell_height_));
  col = std::clamp(col, 0L, n - 1);
  row = std::clamp(row, 0L, n - 1);
  // Snap to the exact vertex coordinates used by bin_polygon.
  while (col > 0 && p.x < grid_x(col, n)) --col;
  while (col < n - 1 && p.x >= grid_x(col + 1, n)) ++col;
  while (row > 0 && p.y < grid_y(row, n)) --row;
  while (row < n - 1 && p.y >= grid_y(row + 1, n)) ++row;
  return {static_cast<int>(row), static_cast<int>(col)};
}

std::optional<BinIndex> BinLattice::assign_hex(Point2 f) const noexcept {
  const double row_pitch = 1.5 * hex_radius_;
  const long r0 = std::lround(f.y / row_pitch);
  std::optional<BinIndex> best;
  double best_d2 = 0.0;
  for (long r = r0 - 1; r <= r0 + 1; ++r) {
    if (r < 0 || r >= rows_) continue;
    const double offset = (r % 2 == 0) ? 0.0 : 0.5 * hex_pitch_;
    const long c0 = std::lround((f.x - offset) / hex_pitch_);
    const long ncols = static_cast<long>(row_size(static_cast<int>(r)));
    for (long c = c0 - 1; c <= c0 + 1; ++c) {
      if (c < 0 || c >= ncols) continue;
      const double cu = static_cast<double>(2 * c + (r % 2)) * (0.5 * hex_pitch_);
      const double cv = static_cast<double>(3 * r) * (0.5 * hex_radius_);
      const double du = f.x - cu;
      const double dv = f.y - cv;
      const double d2 = du * du + dv * dv;
      const BinIndex idx = hex_index(static_cast<int>(r), static_cast<int>(c));
      if (!best || d2 < best_d2 || (d2 == best_d2 && idx < *best)) {
        best = idx;
        best_d2 = d2;
      }
    }
  }
  return best;
}

std::optional<BinIndex> BinLattice::try_assign(Point2 p) const noexcept {
  if (!(p.x >= domain_.x_min && p.x <= domain_.x_max && p.y >= domain_.y_min &&
        p.y <= domain_.y_max)) {
    return std::nullopt;
  }
  switch (shape_) {
    case ShapeKind::Rect: {
      const auto [row, col] = rect_cell(p);
      return static_cast<BinIndex>(row) * cols_ + col;
    }
    case ShapeKind::Tri: {
      const auto [row, col] = rect_cell(p);
      const long n = bins_x_;
      const Point2 bl{grid_x(col, n), grid_y(row, n)};
      const Point2 tr{grid_x(col + 1, n), grid_y(row + 1, n)};
      const Point2 br{tr.x, bl.y};
      const Point2 tl{bl.x, tr.y};
      int part = 0;
      if (col % 2 == 0) {
        const double c = (tr.x - bl.x) * (p.y - bl.y) - (tr.y - bl.y) * (p.x - bl.x);
        part = c > 0.0 ? 1 : 0;
      } else {
        const double c = (tl.x - br.x) * (p.y - br.y) - (tl.y - br.y) * (p.x - br.x);
        part = c >= 0.0 ? 0 : 1;
      }
      return (static_cast<BinIndex>(row) * cols_ + col) * 2 + part;
    }
    case ShapeKind::Hex: return assign_hex(to_frame(p));
  }
  return std::nullopt;
}

BinIndex BinLattice::assign(Point2 p) const {
  if (auto b = try_assign(p)) return *b;
  throw Error(Errc::OutOfDomain, "point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                     ") lies outside the domain");
}

Polygon BinLattice::cell_polygon(BinIndex bin) const {
  const Cell cell = cell_of(bin);
  const long n = bins_x_;
  switch (shape_) {
    case ShapeKind::Rect: {
      const double x0 = grid_x(cell.col, n);
      const double x1 = grid_x(cell.col + 1, n);
      const double y0 = grid_y(cell.row, n);
      const double y1 = grid_y(cell.row + 1, n);
      return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    }
    case ShapeKind::Tri: {
      const Point2 bl{grid_x(cell.col, n), grid_y(cell.row, n)};
      const Point2 tr{grid_x(cell.col + 1, n), grid_y(cell.row + 1, n)};
      const Point2 br{tr.x, bl.y};
      const Point2 tl{bl.x, tr.y};
      if (cell.col % 2 == 0) {
        if (cell.part == 0) return {bl, br, tr};
        return {bl, tr, tl};
      }
      if (cell.part == 0) return {bl, br, tl};
      return {br, tr, tl};
    }
    case ShapeKind::Hex: {
      const long cu = 2L * cell.col + (cell.row % 2);
      const long cv = 3L * cell.row;
      static constexpr long du[6] = {1, 1, 0, -1, -1, 0};
      static constexpr long dv[6] = {-1, 1, 2, 1, -1, -2};
      Polygon poly;
      poly.reserve(6);
      for (int i = 0; i < 6; ++i) poly.push_back({hex_x(cu + du[i]), hex_y(cv + dv[i])});
      return poly;
    }
  }
  return {};
}

Polygon BinLattice::bin_polygon(BinIndex bin) const {
  Polygon cell = cell_polygon(bin);
  if (shape_ != ShapeKind::Hex) return cell;
  return clip_to_box(cell, domain_.box());
}

std::vector<BinIndex> BinLattice::neighbors(BinIndex bin) const {
  const Cell cell = cell_of(bin);
  std::vector<BinIndex> out;
  if (shape_ == ShapeKind::Rect) {
    const int n = bins_x_;
    if (cell.row > 0) out.push_back(bin - n);
    if (cell.col > 0) out.push_back(bin - 1);
    if (cell.col < n - 1) out.push_back(bin + 1);
    if (cell.row < n - 1) out.push_back(bin + n);
    return out;
  }

  // Shared-edge test among topological candidates; boundary hexes may lose
  // an adjacency to clipping.
  std::set<BinIndex> candidates;
  for (int r = cell.row - 1; r <= cell.row + 1; ++r) {
    if (r < 0 || r >= rows_) continue;
    for (int c = cell.col - 1; c <= cell.col + 1; ++c) {
      if (shape_ == ShapeKind::Hex) {
        if (c < 0 || c >= static_cast<int>(row_size(r))) continue;
        candidates.insert(hex_index(r, c));
      } else {
        if (c < 0 || c >= cols_) continue;
        const std::size_t base = (static_cast<std::size_t>(r) * cols_ + c) * 2;
        candidates.insert(base);
        candidates.insert(base + 1);
      }
    }
  }
  candidates.erase(bin);
  const Polygon self = bin_polygon(bin);
  for (BinIndex other : candidates) {
    if (shares_edge(self, bin_polygon(other))) out.push_back(other);
  }
  return out;
}

Box BinLattice::inscribed_box(BinIndex bin) const {
  const Cell cell = cell_of(bin);
  switch (shape_) {
    case ShapeKind::Rect: {
      const Polygon p = cell_polygon(bin);
      return bounding_box(p);
    }
    case ShapeKind::Tri: {
      const Polygon p = cell_polygon(bin);
      const Box cellbox = bounding_box(p);
      const double mx = 0.5 * (cellbox.x_min + cellbox.x_max);
      const double my = 0.5 * (cellbox.y_min + cellbox.y_max);
      // Square at the right-angle corner with half the leg length.
      const bool even = cell.col % 2 == 0;
      const bool lower = cell.part == 0;
      const bool right = even ? lower : !lower;
      const double x0 = right ? mx : cellbox.x_min;
      const double x1 = right ? cellbox.x_max : mx;
      const double y0 = lower ? cellbox.y_min : my;
      const double y1 = lower ? my : cellbox.y_max;
      return {x0, y0, x1, y1};
    }
    case ShapeKind::Hex: {
      const double p = hex_pitch_;
      const double r = hex_radius_;
      const double half = r * p / (p + r);
      const Point2 c{static_cast<double>(2 * cell.col + (cell.row % 2)) * 0.5 * p,
                     static_cast<double>(3 * cell.row) * 0.5 * r};
      const double fw = domain_.width();
      const double u0 = std::max(0.0, c.x - half);
      const double u1 = std::min(fw, c.x + half);
      const double v0 = std::max(0.0, c.y - half);
      const double v1 = std::min(fw, c.y + half);
      const Point2 lo = from_frame({u0, v0});
      const Point2 hi = from_frame({std::max(u0, u1), std::max(v0, v1)});
      return {lo.x, lo.y, hi.x, hi.y};
    }
  }
  return {};
}

}  // namespace binplot
