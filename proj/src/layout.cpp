#include "binplot/layout.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "binplot/error.hpp"
#include "binplot/random.hpp"

namespace binplot {

namespace {

constexpr double kMarginLeft = 64.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 48.0;
constexpr double kPanelGap = 72.0;
constexpr double kLegendWidth = 160.0;
constexpr double kLegendRowHeight = 20.0;
// Glyphs keep a little distance from the bin outline.
constexpr double kGlyphInset = 0.9;

double next_nice(double step) {
  const double e = std::pow(10.0, std::floor(std::log10(step) + 1e-12));
  const double f = step / e;
  if (f < 1.5) return 2.0 * e;
  if (f < 3.0) return 5.0 * e;
  return 10.0 * e;
}

struct ScreenMap {
  Domain domain;
  Viewport view;
  Point2 operator()(Point2 p) const {
    return {view.x + (p.x - domain.x_min) / domain.width() * view.width,
            view.y + view.height - (p.y - domain.y_min) / domain.height() * view.height};
  }
  Polygon operator()(const Polygon& poly) const {
    Polygon out;
    out.reserve(poly.size());
    for (const auto& p : poly) out.push_back((*this)(p));
    return out;
  }
  Box operator()(const Box& b) const {
    const Point2 lo = (*this)(Point2{b.x_min, b.y_min});
    const Point2 hi = (*this)(Point2{b.x_max, b.y_max});
    return {lo.x, hi.y, hi.x, lo.y};
  }
};

Box inset(const Box& b, double factor) {
  const Point2 c = b.center();
  const double hw = b.width() * factor / 2.0;
  const double hh = b.height() * factor / 2.0;
  return {c.x - hw, c.y - hh, c.x + hw, c.y + hh};
}

// Counts and intensities derived once per distinct lattice.
struct LatticeData {
  BinSummaryGrid grid;
  IntensityGrid scaled;
  IntensityGrid linear;
  std::vector<double> density;
  std::vector<std::vector<LabeledPoint>> bin_points;
};

LatticeData derive(const BinLattice& lattice, const Dataset& dataset, const DesignSpec& spec,
                   unsigned threads) {
  AggregateOptions opts;
  opts.threads = threads;
  LatticeData d{aggregate(lattice, dataset, opts), {}, {}, {}, {}};
  d.scaled = normalize(d.grid, spec.normalization, spec.scale);
  d.linear = normalize(d.grid, spec.normalization, ScaleKind::Linear);
  d.density = bin_density(d.grid, spec.scale);
  if (spec.glyph == GlyphKind::Points) {
    d.bin_points.resize(lattice.bin_count());
    const auto bins = assign_points(lattice, dataset);
    for (std::size_t i = 0; i < bins.size(); ++i) {
      d.bin_points[*bins[i]].push_back(dataset.points()[i]);
    }
  }
  return d;
}

std::vector<double> only(std::span<const double> row, std::optional<ClassId> cls) {
  std::vector<double> out(row.begin(), row.end());
  if (cls) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (c != *cls) out[c] = 0.0;
    }
  }
  return out;
}

std::vector<std::uint64_t> only(std::span<const std::uint64_t> row, std::optional<ClassId> cls) {
  std::vector<std::uint64_t> out(row.begin(), row.end());
  if (cls) {
    for (std::size_t c = 0; c < out.size(); ++c) {
      if (c != *cls) out[c] = 0;
    }
  }
  return out;
}

struct PanelContext {
  const DesignSpec& spec;
  const Palette& palette;
  const BinLattice& lattice;
  const LatticeData& data;
  std::vector<ClassId> draw_order;
  std::vector<double> angles;
  std::pair<int, int> block_dims;
};

std::optional<FillItem> background_fill(const PanelContext& ctx, const ScreenMap& map,
                                        int panel_index, std::optional<ClassId> cls,
                                        BinIndex b, const Polygon& outline) {
  const auto& spec = ctx.spec;
  const auto counts = only(ctx.data.grid.row(b), cls);
  std::uint64_t total = 0;
  for (auto n : counts) total += n;
  if (total == 0 || spec.background == Background::None) return std::nullopt;

  const auto intens = only(ctx.data.scaled.row(b), cls);
  FillItem item;
  item.bin = b;
  item.area = bounding_box(outline);
  switch (spec.background) {
    case Background::None:
      return std::nullopt;
    case Background::Luminance:
      if (cls) {
        item.fill = SolidColor{luminance_fill(intens[*cls], ctx.palette.class_ramp(*cls),
                                              ctx.palette.quantization_levels)};
      } else {
        item.fill = SolidColor{luminance_fill(ctx.data.density[b], ctx.palette.density,
                                              ctx.palette.quantization_levels)};
      }
      break;
    case Background::Majority: {
      std::vector<double> values;
      if (spec.normalization == NormalizationMode::ClassInternal) {
        values.assign(ctx.data.scaled.row(b).begin(), ctx.data.scaled.row(b).end());
      } else {
        for (auto n : ctx.data.grid.row(b)) values.push_back(static_cast<double>(n));
      }
      const auto winner = majority_class(values);
      if (!winner) return std::nullopt;
      if (cls && *winner != *cls) return std::nullopt;
      item.fill = SolidColor{ctx.palette.class_color(*winner)};
      break;
    }
    case Background::Blend:
      item.fill = SolidColor{blend_fill(intens, ctx.palette)};
      break;
    case Background::Weave: {
      const double density = cls ? intens[*cls] : ctx.data.density[b];
      const int max_side = std::max(2, static_cast<int>(std::floor(item.area.width() / 2.0)));
      const int side = std::clamp(spec.fragments, 2, max_side);
      item.fill = weave_fill(counts, density, spec.normalization, side,
                             derive_seed(spec.seed, static_cast<std::uint64_t>(panel_index), b),
                             ctx.palette);
      break;
    }
    case Background::AttributeBlocks:
      item.area = map(ctx.lattice.inscribed_box(b));
      item.fill = attribute_block_fill(intens, ctx.palette, ctx.block_dims.first,
                                       ctx.block_dims.second);
      break;
    case Background::Hatching: {
      auto strokes = hatch_fill(intens, ctx.palette, ctx.angles, ctx.draw_order);
      for (const auto& layer : strokes.layers) {
        item.strokes.push_back(hatch_segments(layer, outline));
      }
      item.fill = std::move(strokes);
      break;
    }
  }
  return item;
}

std::optional<GlyphItem> glyph_item(const PanelContext& ctx, const ScreenMap& map,
                                    int panel_index, std::optional<ClassId> cls, BinIndex b,
                                    const Polygon& outline) {
  const auto& spec = ctx.spec;
  const auto counts = only(ctx.data.grid.row(b), cls);
  std::uint64_t total = 0;
  for (auto n : counts) total += n;
  if (total == 0 || spec.glyph == GlyphKind::None) return std::nullopt;

  const Box box = inset(map(ctx.lattice.inscribed_box(b)), kGlyphInset);
  const double radius = std::min(box.width(), box.height()) / 2.0;
  GlyphItem item;
  item.bin = b;
  switch (spec.glyph) {
    case GlyphKind::None:
      return std::nullopt;
    case GlyphKind::Pie:
      item.glyph = pie_glyph(counts, PieVariant::Pie, spec.normalization, std::nullopt,
                             box.center(), radius, ctx.palette);
      break;
    case GlyphKind::Donut:
      item.glyph = pie_glyph(counts, PieVariant::Donut, spec.normalization, std::nullopt,
                             box.center(), radius, ctx.palette);
      break;
    case GlyphKind::AreaPie:
      item.glyph = pie_glyph(counts, PieVariant::AreaScaled, spec.normalization,
                             ctx.data.density[b], box.center(), radius, ctx.palette);
      break;
    case GlyphKind::GroupedBar:
    case GlyphKind::StackedBar: {
      const auto values = only(ctx.data.linear.row(b), cls);
      const auto variant =
          spec.glyph == GlyphKind::GroupedBar ? BarVariant::Grouped : BarVariant::Stacked;
      double sum = 0.0;
      for (double v : values) sum += v;
      if (sum <= 0.0) return std::nullopt;
      item.glyph = bar_glyph(values, variant, spec.normalization, box, ctx.palette);
      break;
    }
    case GlyphKind::Points: {
      std::vector<LabeledPoint> pts;
      for (const auto& p : ctx.data.bin_points[b]) {
        if (!cls || p.cls == *cls) pts.push_back(p);
      }
      const auto& dom = ctx.lattice.domain();
      const double frame_radius = spec.point_radius * dom.width() / map.view.width;
      const auto sample = sample_points(
          pts, ctx.data.grid.class_count(), static_cast<std::uint64_t>(spec.sample_budget),
          ctx.lattice, b, derive_seed(spec.seed, static_cast<std::uint64_t>(panel_index), b),
          frame_radius);
      std::vector<Point2> positions;
      std::vector<ClassId> classes;
      for (const auto& p : sample) {
        positions.push_back(map(p.position()));
        classes.push_back(p.cls);
      }
      item.glyph = point_glyph(positions, classes, spec.point_radius, outline, ctx.palette);
      break;
    }
  }
  return item;
}

Panel compose_panel(const PanelContext& ctx, int index, std::optional<ClassId> cls,
                    const Viewport& view, const Dataset& dataset) {
  const auto& lattice = ctx.lattice;
  const ScreenMap map{lattice.domain(), view};
  Panel panel;
  panel.index = index;
  panel.class_filter = cls;
  if (cls) panel.title = dataset.labels()[*cls];
  panel.viewport = view;
  panel.domain = lattice.domain();
  panel.shape = lattice.shape();
  panel.bins_x = lattice.bins_x();
  panel.axes = axis_ticks(lattice.domain(), view);

  std::vector<DisplayItem> fills;
  std::vector<DisplayItem> boundaries;
  std::vector<DisplayItem> glyphs;
  for (BinIndex b = 0; b < lattice.bin_count(); ++b) {
    BinRecord rec;
    rec.bin = b;
    rec.outline = map(lattice.bin_polygon(b));
    rec.counts = only(ctx.data.grid.row(b), cls);
    for (auto n : rec.counts) rec.total += n;
    if (auto f = background_fill(ctx, map, index, cls, b, rec.outline)) {
      fills.emplace_back(std::move(*f));
    }
    if (ctx.spec.boundaries) boundaries.emplace_back(BoundaryItem{b});
    if (auto g = glyph_item(ctx, map, index, cls, b, rec.outline)) {
      glyphs.emplace_back(std::move(*g));
    }
    panel.bins.push_back(std::move(rec));
  }
  panel.display = std::move(fills);
  for (auto& d : boundaries) panel.display.push_back(std::move(d));
  for (auto& d : glyphs) panel.display.push_back(std::move(d));
  return panel;
}

}  // namespace

double nice_step(double range, int target) {
  if (!(range > 0.0) || !std::isfinite(range) || target < 1) {
    throw Error(Errc::InvalidParameter, "tick range must be positive and finite");
  }
  const double raw = range / target;
  const double e = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / e;
  double nice = 10.0;
  if (f < 1.5) {
    nice = 1.0;
  } else if (f < 3.0) {
    nice = 2.0;
  } else if (f < 7.0) {
    nice = 5.0;
  }
  return nice * e;
}

std::vector<double> tick_values(double lo, double hi, int max_ticks) {
  double step = nice_step(hi - lo);
  for (;;) {
    const double first = std::ceil(lo / step - 1e-9);
    const double last = std::floor(hi / step + 1e-9);
    if (last - first + 1.0 <= max_ticks) {
      std::vector<double> out;
      for (double k = first; k <= last; k += 1.0) {
        double v = k * step;
        if (v == 0.0) v = 0.0;
        out.push_back(v);
      }
      return out;
    }
    step = next_nice(step);
  }
}

std::string format_tick(double value, double step) {
  int decimals = 0;
  if (step < 1.0) decimals = static_cast<int>(std::ceil(-std::log10(step) - 1e-9));
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  std::string s(buf, res.ptr);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

AxisSet axis_ticks(const Domain& domain, const Viewport& viewport) {
  AxisSet axes;
  const auto xs = tick_values(domain.x_min, domain.x_max);
  const auto ys = tick_values(domain.y_min, domain.y_max);
  const double xstep = xs.size() > 1 ? xs[1] - xs[0] : nice_step(domain.width());
  const double ystep = ys.size() > 1 ? ys[1] - ys[0] : nice_step(domain.height());
  for (double v : xs) {
    axes.x.push_back({v, viewport.x + (v - domain.x_min) / domain.width() * viewport.width,
                      format_tick(v, xstep)});
  }
  for (double v : ys) {
    axes.y.push_back(
        {v, viewport.y + viewport.height - (v - domain.y_min) / domain.height() * viewport.height,
         format_tick(v, ystep)});
  }
  return axes;
}

std::vector<LegendEntry> legend_entries(const Dataset& dataset, const Palette& palette,
                                        Point2 origin) {
  std::vector<LegendEntry> out;
  for (std::size_t c = 0; c < dataset.class_count(); ++c) {
    const auto cls = static_cast<ClassId>(c);
    out.push_back({cls, dataset.labels()[c], palette.class_color(cls),
                   {origin.x, origin.y + static_cast<double>(c) * kLegendRowHeight}});
  }
  return out;
}

Palette resolve_palette(const DesignSpec& spec, std::size_t class_count) {
  Palette p = Palette::default_for(class_count);
  if (!spec.palette.empty()) p.classes = spec.palette;
  p.quantization_levels = spec.quantization;
  return p;
}

Scene compose(const ValidatedDesign& design, const Dataset& dataset, const Domain& domain,
              const ComposeOptions& options) {
  const auto& spec = design.spec();
  const std::size_t k = dataset.class_count();
  if (design.class_count() != k) {
    throw Error(Errc::SpecNotValidated, "design was validated for " +
                                            std::to_string(design.class_count()) +
                                            " classes, dataset has " + std::to_string(k));
  }
  const Palette palette = resolve_palette(spec, k);

  const bool juxtaposed = spec.composition == Composition::Juxtaposed;
  const std::size_t panel_count = juxtaposed ? k : 1;
  const int cols = juxtaposed ? std::max(1, static_cast<int>(std::ceil(std::sqrt(
                                               static_cast<double>(panel_count)))))
                              : 1;
  const int rows = juxtaposed
                       ? std::max(1, static_cast<int>((panel_count + cols - 1) / cols))
                       : 1;
  const double size = spec.panel_size;

  Scene scene;
  scene.spec = spec;
  scene.width = kMarginLeft + cols * size + (cols - 1) * kPanelGap + kLegendWidth;
  scene.height = kMarginTop + rows * size + (rows - 1) * kPanelGap + kMarginBottom;
  scene.legend = legend_entries(dataset, palette,
                                {scene.width - kLegendWidth + 24.0, kMarginTop});

  std::vector<std::uint64_t> class_totals(k, 0);
  for (const auto& p : dataset.points()) ++class_totals[p.cls];
  std::vector<ClassId> draw_order;
  if (spec.hatch_draw_order.empty()) {
    draw_order = default_draw_order(class_totals);
  } else {
    for (const auto& label : spec.hatch_draw_order) {
      const auto id = dataset.find_class(label);
      if (!id) throw Error(Errc::SpecNotValidated, "unknown class in draw order: " + label);
      draw_order.push_back(*id);
    }
  }
  const auto angles = spec.hatch_angles.empty() ? default_hatch_angles(k) : spec.hatch_angles;
  const auto dims = default_block_dims(k);

  std::map<int, std::pair<BinLattice, LatticeData>> cache;
  auto data_for = [&](int bins_x) -> const std::pair<BinLattice, LatticeData>& {
    auto it = cache.find(bins_x);
    if (it == cache.end()) {
      auto lattice = BinLattice::build(domain, spec.shape, bins_x);
      auto data = derive(lattice, dataset, spec, options.threads);
      it = cache.emplace(bins_x, std::make_pair(std::move(lattice), std::move(data))).first;
    }
    return it->second;
  };

  for (std::size_t i = 0; i < panel_count; ++i) {
    const int r = static_cast<int>(i) / cols;
    const int c = static_cast<int>(i) % cols;
    const Viewport view{kMarginLeft + c * (size + kPanelGap), kMarginTop + r * (size + kPanelGap),
                        size, size};
    const int bins_x = spec.heterogeneous ? spec.panel_bins_x.at(i) : spec.bins_x;
    const auto& [lattice, data] = data_for(bins_x);
    const PanelContext ctx{spec, palette, lattice, data, draw_order, angles, dims};
    std::optional<ClassId> cls;
    if (juxtaposed) cls = static_cast<ClassId>(i);
    auto panel = compose_panel(ctx, static_cast<int>(i), cls, view, dataset);
    panel.axes.x_title = options.x_title;
    panel.axes.y_title = options.y_title;
    scene.panels.push_back(std::move(panel));
  }
  return scene;
}

}  // namespace binplot
