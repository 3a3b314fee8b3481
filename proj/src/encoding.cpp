#include "binplot/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "binplot/error.hpp"
#include "binplot/random.hpp"

namespace binplot {

const std::array<Rgb, kMaxClasses>& default_class_colors() {
  // Tableau 10.
  static const std::array<Rgb, kMaxClasses> colors = {
      Rgb{0x4e, 0x79, 0xa7}, Rgb{0xf2, 0x8e, 0x2b}, Rgb{0xe1, 0x57, 0x59}, Rgb{0x76, 0xb7, 0xb2},
      Rgb{0x59, 0xa1, 0x4f}, Rgb{0xed, 0xc9, 0x48}, Rgb{0xb0, 0x7a, 0xa1}, Rgb{0xff, 0x9d, 0xa7},
      Rgb{0x9c, 0x75, 0x5f}, Rgb{0xba, 0xb0, 0xac},
  };
  return colors;
}

Palette Palette::default_for(std::size_t class_count) {
  if (class_count > kMaxClasses) {
    throw Error(Errc::TooManyClasses, std::to_string(class_count) + " classes exceed the limit of " +
                                          std::to_string(kMaxClasses));
  }
  Palette p;
  const auto& colors = default_class_colors();
  p.classes.assign(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(class_count));
  return p;
}

void Palette::check(std::size_t class_count) const {
  if (class_count > kMaxClasses || classes.size() > kMaxClasses) {
    throw Error(Errc::TooManyClasses, "palettes hold at most " + std::to_string(kMaxClasses) + " class colors");
  }
  if (classes.size() < class_count) {
    throw Error(Errc::InvalidParameter, "palette has " + std::to_string(classes.size()) +
                                            " colors for " + std::to_string(class_count) + " classes");
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i] == classes[j]) {
        throw Error(Errc::InvalidParameter, "palette color " + classes[i].hex() + " is repeated");
      }
    }
  }
  if (quantization_levels < 0) throw Error(Errc::InvalidParameter, "quantization levels must be >= 0");
}

std::vector<std::size_t> FragmentGrid::class_histogram(std::size_t class_count) const {
  std::vector<std::size_t> h(class_count, 0);
  for (int c : classes) {
    if (c >= 0) ++h[static_cast<std::size_t>(c)];
  }
  return h;
}

double quantize(double intensity, int levels) {
  if (levels <= 0) return intensity;
  const int idx = std::min(static_cast<int>(std::floor(intensity * levels)), levels - 1);
  return (idx + 0.5) / levels;
}

Rgb luminance_fill(double intensity, const Ramp& ramp, int quantization_levels) {
  if (!(intensity >= 0.0 && intensity <= 1.0)) {
    throw Error(Errc::InvalidIntensity, "intensity " + std::to_string(intensity) + " outside [0, 1]");
  }
  return lerp(ramp.start, ramp.end, quantize(intensity, quantization_levels));
}

std::optional<ClassId> majority_class(std::span<const double> values) {
  std::optional<ClassId> best;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c] <= 0.0) continue;
    if (!best || values[c] > values[*best]) best = static_cast<ClassId>(c);
  }
  return best;
}

Rgb majority_fill(std::span<const double> values, const Palette& palette) {
  const auto cls = majority_class(values);
  return cls ? palette.class_color(*cls) : palette.background;
}

Rgb blend_fill(std::span<const double> intensities, const Palette& palette) {
  double sum = 0.0;
  for (double v : intensities) sum += std::max(0.0, v);
  if (sum <= 0.0) return palette.background;
  double lr = 0.0;
  double lg = 0.0;
  double lb = 0.0;
  for (std::size_t c = 0; c < intensities.size(); ++c) {
    const double v = std::max(0.0, intensities[c]);
    if (v == 0.0) continue;
    const double w = v / sum;
    const Rgb col = palette.class_color(static_cast<ClassId>(c));
    lr += w * srgb_to_linear(col.r);
    lg += w * srgb_to_linear(col.g);
    lb += w * srgb_to_linear(col.b);
  }
  return {linear_to_srgb(lr), linear_to_srgb(lg), linear_to_srgb(lb)};
}

FragmentGrid weave_fill(std::span<const std::uint64_t> class_counts, double density,
                        NormalizationMode mode, int side, std::uint64_t seed,
                        const Palette& palette) {
  if (mode == NormalizationMode::ClassInternal) {
    throw Error(Errc::UnsupportedNormalization,
                "color weaving supports bin-internal or global normalization only");
  }
  if (side < 2) throw Error(Errc::InvalidParameter, "fragment grid side must be at least 2");
  const std::uint64_t cells = static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(side);
  const std::uint64_t total = std::accumulate(class_counts.begin(), class_counts.end(), std::uint64_t{0});

  std::uint64_t colored = 0;
  if (total > 0) {
    if (mode == NormalizationMode::BinInternal) {
      colored = cells;
    } else {
      const double d = std::clamp(density, 0.0, 1.0);
      colored = static_cast<std::uint64_t>(std::llround(static_cast<double>(cells) * d));
    }
  }
  const auto per_class = largest_remainder(class_counts, colored);

  FragmentGrid grid;
  grid.side = side;
  grid.classes.reserve(cells);
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    grid.classes.insert(grid.classes.end(), per_class[c], static_cast<int>(c));
  }
  grid.classes.resize(cells, -1);
  Rng rng(seed);
  rng.shuffle(std::span<int>(grid.classes));
  grid.colors.reserve(cells);
  for (int c : grid.classes) {
    grid.colors.push_back(c < 0 ? palette.background : palette.class_color(static_cast<ClassId>(c)));
  }
  return grid;
}

std::pair<int, int> default_block_dims(std::size_t class_count) {
  const int k = static_cast<int>(std::max<std::size_t>(class_count, 1));
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
  const int rows = (k + cols - 1) / cols;
  return {rows, cols};
}

SubBlockGrid attribute_block_fill(std::span<const double> intensities, const Palette& palette,
                                  int rows, int cols) {
  if (rows < 1 || cols < 1 || static_cast<std::size_t>(rows) * cols < intensities.size()) {
    throw Error(Errc::GridTooSmall, std::to_string(rows) + "x" + std::to_string(cols) +
                                        " block grid cannot hold " +
                                        std::to_string(intensities.size()) + " classes");
  }
  SubBlockGrid g;
  g.rows = rows;
  g.cols = cols;
  const std::size_t cells = static_cast<std::size_t>(rows) * cols;
  g.classes.assign(cells, -1);
  g.colors.assign(cells, palette.background);
  for (std::size_t c = 0; c < intensities.size(); ++c) {
    g.classes[c] = static_cast<int>(c);
    g.colors[c] = luminance_fill(intensities[c], palette.class_ramp(static_cast<ClassId>(c)),
                                 palette.quantization_levels);
  }
  return g;
}

std::vector<double> default_hatch_angles(std::size_t class_count) {
  std::vector<double> out(class_count);
  for (std::size_t c = 0; c < class_count; ++c) {
    out[c] = 180.0 * static_cast<double>(c) / static_cast<double>(class_count);
  }
  return out;
}

std::vector<ClassId> default_draw_order(std::span<const std::uint64_t> class_totals) {
  std::vector<ClassId> order(class_totals.size());
  std::iota(order.begin(), order.end(), ClassId{0});
  std::stable_sort(order.begin(), order.end(), [&](ClassId a, ClassId b) {
    return class_totals[a] > class_totals[b];
  });
  return order;
}

double hatch_spacing(double intensity, const HatchParams& params) {
  return params.max_spacing - intensity * (params.max_spacing - params.min_spacing);
}

StrokeSet hatch_fill(std::span<const double> intensities, const Palette& palette,
                     std::span<const double> angle_table, std::span<const ClassId> draw_order,
                     const HatchParams& params) {
  const std::size_t k = intensities.size();
  if (angle_table.size() < k) {
    throw Error(Errc::TooManyClasses, std::to_string(k) + " classes but only " +
                                          std::to_string(angle_table.size()) + " hatch angles");
  }
  if (draw_order.size() != k) {
    throw Error(Errc::InvalidParameter, "hatch draw order must list every class once");
  }
  std::vector<int> position(k, -1);
  for (std::size_t i = 0; i < draw_order.size(); ++i) {
    if (draw_order[i] >= k || position[draw_order[i]] >= 0) {
      throw Error(Errc::InvalidParameter, "hatch draw order must list every class once");
    }
    position[draw_order[i]] = static_cast<int>(i);
  }
  StrokeSet set;
  set.stroke_width = params.stroke_width;
  for (ClassId cls : draw_order) {
    const double v = intensities[cls];
    if (!(v > 0.0)) continue;
    set.layers.push_back(HatchLayer{cls, angle_table[cls], hatch_spacing(std::min(v, 1.0), params),
                                    palette.class_color(cls), position[cls]});
  }
  return set;
}

std::vector<Segment> hatch_segments(const HatchLayer& layer, std::span<const Point2> polygon) {
  std::vector<Segment> out;
  if (polygon.size() < 3 || !(layer.spacing > 0.0)) return out;
  const double rad = layer.angle * std::numbers::pi / 180.0;
  const Point2 dir{std::cos(rad), -std::sin(rad)};
  const Point2 normal{-dir.y, dir.x};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& v : polygon) {
    const double s = normal.x * v.x + normal.y * v.y;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  const Box bb = bounding_box(polygon);
  const double reach = std::hypot(bb.width(), bb.height()) + 1.0;
  const Point2 mid = bb.center();
  const long k0 = static_cast<long>(std::ceil(lo / layer.spacing));
  const long k1 = static_cast<long>(std::floor(hi / layer.spacing));
  for (long k = k0; k <= k1; ++k) {
    const double offset = static_cast<double>(k) * layer.spacing;
    // Point on the line nearest the polygon's box center.
    const double along = dir.x * mid.x + dir.y * mid.y;
    const Point2 base{normal.x * offset + dir.x * along, normal.y * offset + dir.y * along};
    Point2 a{base.x - dir.x * reach, base.y - dir.y * reach};
    Point2 b{base.x + dir.x * reach, base.y + dir.y * reach};
    if (clip_segment(polygon, a, b)) {
      if (std::hypot(b.x - a.x, b.y - a.y) > 1e-9) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace binplot
