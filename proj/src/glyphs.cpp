#include "binplot/glyphs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "binplot/error.hpp"

namespace binplot {

PieGlyph pie_glyph(std::span<const std::uint64_t> counts, PieVariant variant,
                   NormalizationMode mode, std::optional<double> density_for_area,
                   Point2 center, double max_radius, const Palette& palette) {
  if (mode != NormalizationMode::BinInternal) {
    throw Error(Errc::UnsupportedNormalization, "pie glyphs require bin-internal normalization");
  }
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) throw Error(Errc::EmptyBin, "pie glyph requested for an empty bin");

  std::vector<ClassId> order;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0) order.push_back(static_cast<ClassId>(c));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](ClassId a, ClassId b) { return counts[a] > counts[b]; });

  PieGlyph g;
  g.center = center;
  g.outer_radius = max_radius;
  if (variant == PieVariant::AreaScaled) {
    const double d = std::clamp(density_for_area.value_or(1.0), 0.0, 1.0);
    g.outer_radius = std::min(max_radius, std::max(kMinAreaPieRadius, max_radius * std::sqrt(d)));
  }
  g.inner_radius = variant == PieVariant::Donut ? kDonutInnerRatio * g.outer_radius : 0.0;

  std::uint64_t running = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ClassId c = order[i];
    const double start = 360.0 * static_cast<double>(running) / static_cast<double>(total);
    running += counts[c];
    const double end = i + 1 == order.size()
                           ? 360.0
                           : 360.0 * static_cast<double>(running) / static_cast<double>(total);
    g.slices.push_back({c, start, end, palette.class_color(c)});
  }
  return g;
}

BarGlyph bar_glyph(std::span<const double> values, BarVariant variant, NormalizationMode mode,
                   const Box& box, const Palette& palette) {
  double sum = 0.0;
  for (double v : values) sum += std::max(0.0, v);
  if (sum <= 0.0) throw Error(Errc::EmptyBin, "bar glyph requested for an empty bin");

  BarGlyph g;
  g.variant = variant;
  g.baseline = box.y_max;
  const double h_max = box.height();
  const std::size_t k = values.size();

  if (variant == BarVariant::Grouped) {
    const double slot = box.width() / static_cast<double>(k);
    const double width = slot * 0.8;
    for (std::size_t c = 0; c < k; ++c) {
      const double v = std::clamp(values[c], 0.0, 1.0);
      if (v <= 0.0) continue;
      const double h = v * h_max;
      const double x = box.x_min + slot * static_cast<double>(c) + 0.5 * (slot - width);
      g.bars.push_back({static_cast<ClassId>(c), x, g.baseline - h, width, h,
                        palette.class_color(static_cast<ClassId>(c))});
    }
    return g;
  }

  // Stacked: bin-internal shares fill the full height; other modes stack the
  // raw intensities and shrink proportionally if they would overflow.
  double scale = 1.0;
  if (mode == NormalizationMode::BinInternal || sum > 1.0) scale = 1.0 / sum;
  const double width = box.width() * 0.6;
  const double x = box.x_min + 0.5 * (box.width() - width);
  double top = g.baseline;
  for (std::size_t c = 0; c < k; ++c) {
    const double v = std::max(0.0, values[c]) * scale;
    if (v <= 0.0) continue;
    const double h = v * h_max;
    top -= h;
    g.bars.push_back({static_cast<ClassId>(c), x, top, width, h,
                      palette.class_color(static_cast<ClassId>(c))});
  }
  return g;
}

PointCluster point_glyph(std::span<const Point2> positions, std::span<const ClassId> classes,
                         double radius, std::span<const Point2> polygon, const Palette& palette) {
  PointCluster cluster;
  const std::size_t n = positions.size();
  if (n == 0) return cluster;
  const Point2 center = centroid(polygon);
  std::vector<Point2> p(positions.begin(), positions.end());
  for (auto& q : p) q = pull_inside(polygon, center, q, radius);

  const double min_sep = 2.0 * radius;
  for (int iter = 0; iter < kMaxRelaxIterations; ++iter) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = p[j].x - p[i].x;
        double dy = p[j].y - p[i].y;
        double d = std::hypot(dx, dy);
        if (d >= min_sep) continue;
        if (d == 0.0) {
          // Coincident discs: deterministic direction from the pair index.
          const double a = 2.399963229728653 * static_cast<double>(i * n + j);
          dx = std::cos(a);
          dy = std::sin(a);
          d = 1.0;
        }
        const double push = 0.5 * (min_sep - std::hypot(p[j].x - p[i].x, p[j].y - p[i].y));
        const double ux = dx / d;
        const double uy = dy / d;
        p[i].x -= ux * push;
        p[i].y -= uy * push;
        p[j].x += ux * push;
        p[j].y += uy * push;
        moved = true;
      }
    }
    for (auto& q : p) q = pull_inside(polygon, center, q, radius);
    if (!moved) break;
  }
  cluster.discs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cluster.discs.push_back({classes[i], p[i], radius, palette.class_color(classes[i])});
  }
  return cluster;
}

}  // namespace binplot
