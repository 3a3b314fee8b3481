#include <doctest.h>

#include <cmath>

#include "binplot/aggregation.hpp"
#include "binplot/error.hpp"
#include "binplot/glyphs.hpp"
#include "binplot/random.hpp"
#include "oracles.hpp"

using namespace binplot;

namespace {

const Palette kPal = Palette::default_for(4);
constexpr auto kBinInternal = NormalizationMode::BinInternal;

double overlap(const PointDisc& a, const PointDisc& b) {
  return a.radius + b.radius - std::hypot(a.center.x - b.center.x, a.center.y - b.center.y);
}

}  // namespace

TEST_CASE("pie angles") {
  const std::vector<std::uint64_t> c{3, 1};
  const auto g = pie_glyph(c, PieVariant::Pie, kBinInternal, std::nullopt, {50, 50}, 20, kPal);
  REQUIRE(g.slices.size() == 2);
  CHECK(g.slices[0].cls == 0);
  CHECK(g.slices[0].end - g.slices[0].start == 270.0);
  CHECK(g.slices[1].end - g.slices[1].start == 90.0);
  CHECK(g.inner_radius == 0.0);
  CHECK(g.outer_radius == 20.0);

  // Largest share first, ties in registry order, absent classes skipped.
  const std::vector<std::uint64_t> d{1, 0, 4, 1};
  const auto h = pie_glyph(d, PieVariant::Pie, kBinInternal, std::nullopt, {0, 0}, 5, kPal);
  REQUIRE(h.slices.size() == 3);
  CHECK(h.slices[0].cls == 2);
  CHECK(h.slices[1].cls == 0);
  CHECK(h.slices[2].cls == 3);
  CHECK(h.slices[0].start == 0.0);
  CHECK(h.slices.back().end == 360.0);
  for (std::size_t i = 1; i < h.slices.size(); ++i) {
    CHECK(h.slices[i].start == h.slices[i - 1].end);
  }

  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint64_t> k(1 + rng.below(10));
    for (auto& x : k) x = rng.below(1000);
    k[rng.below(k.size())] += 1;
    const auto p = pie_glyph(k, PieVariant::Pie, kBinInternal, std::nullopt, {0, 0}, 5,
                             Palette::default_for(k.size()));
    std::uint64_t total = 0;
    for (auto x : k) total += x;
    double sum = 0.0;
    for (const auto& s : p.slices) {
      CHECK(s.end - s.start == doctest::Approx(360.0 * k[s.cls] / total).epsilon(1e-9));
      sum += s.end - s.start;
    }
    CHECK(sum == doctest::Approx(360.0));
    CHECK(p.slices.back().end == 360.0);
  }
}

TEST_CASE("pie errors and variants") {
  const std::vector<std::uint64_t> c{2, 2};
  const std::vector<std::uint64_t> empty{0, 0};
  try {
    pie_glyph(c, PieVariant::Pie, NormalizationMode::Global, std::nullopt, {0, 0}, 5, kPal);
    FAIL("expected unsupported-normalization");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedNormalization);
  }
  CHECK_THROWS_AS(
      pie_glyph(c, PieVariant::Pie, NormalizationMode::ClassInternal, std::nullopt, {0, 0}, 5, kPal),
      Error);
  try {
    pie_glyph(empty, PieVariant::Pie, kBinInternal, std::nullopt, {0, 0}, 5, kPal);
    FAIL("expected empty-bin");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyBin);
  }

  const auto donut = pie_glyph(c, PieVariant::Donut, kBinInternal, std::nullopt, {0, 0}, 16, kPal);
  CHECK(donut.inner_radius == 8.0);
  CHECK(donut.outer_radius == 16.0);

  const auto area = pie_glyph(c, PieVariant::AreaScaled, kBinInternal, 0.25, {0, 0}, 20, kPal);
  CHECK(area.outer_radius == doctest::Approx(10.0));
  const auto full = pie_glyph(c, PieVariant::AreaScaled, kBinInternal, 1.0, {0, 0}, 20, kPal);
  CHECK(full.outer_radius == 20.0);
  const auto tiny = pie_glyph(c, PieVariant::AreaScaled, kBinInternal, 1e-6, {0, 0}, 20, kPal);
  CHECK(tiny.outer_radius == kMinAreaPieRadius);
  // Area is proportional to density above the floor.
  for (double d : {0.1, 0.3, 0.6, 0.9}) {
    const auto g = pie_glyph(c, PieVariant::AreaScaled, kBinInternal, d, {0, 0}, 20, kPal);
    CHECK(g.outer_radius * g.outer_radius / 400.0 == doctest::Approx(d));
  }
}

TEST_CASE("grouped and stacked bars") {
  const Box box{0, 0, 40, 20};
  const std::vector<double> v{1.0, 0.5, 0.0, 0.25};
  const auto grouped = bar_glyph(v, BarVariant::Grouped, NormalizationMode::Global, box, kPal);
  REQUIRE(grouped.bars.size() == 3);
  CHECK(grouped.bars[0].height == 20.0);
  CHECK(grouped.bars[1].height == 10.0);
  CHECK(grouped.bars[2].cls == 3);
  CHECK(grouped.bars[2].height == 5.0);
  for (const auto& b : grouped.bars) {
    CHECK(b.y + b.height == doctest::Approx(box.y_max));
    CHECK(b.x >= box.x_min);
    CHECK(b.x + b.width <= box.x_max + 1e-9);
  }
  for (std::size_t i = 1; i < grouped.bars.size(); ++i) {
    CHECK(grouped.bars[i].x >= grouped.bars[i - 1].x + grouped.bars[i - 1].width);
  }

  const std::vector<double> shares{3, 1, 0, 0};
  const auto stacked = bar_glyph(shares, BarVariant::Stacked, kBinInternal, box, kPal);
  REQUIRE(stacked.bars.size() == 2);
  CHECK(stacked.bars[0].height + stacked.bars[1].height == doctest::Approx(20.0));
  CHECK(stacked.bars[0].height == doctest::Approx(15.0));
  CHECK(stacked.bars[1].y + stacked.bars[1].height == doctest::Approx(stacked.bars[0].y));

  try {
    bar_glyph(std::vector<double>{0, 0}, BarVariant::Grouped, kBinInternal, box, kPal);
    FAIL("expected empty-bin");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyBin);
  }
}

TEST_CASE("class-internal bars compare across bins") {
  // Bins with counts {4, 1} and {8, 2}: class maxima are 8 and 2.
  const auto lat = BinLattice::build({0, 2, 0, 1}, ShapeKind::Rect, 2);
  Dataset ds;
  const auto a = ds.intern("a");
  const auto b = ds.intern("b");
  auto put = [&](double x, ClassId c, int n) {
    for (int i = 0; i < n; ++i) ds.add(x, 0.25, c);
  };
  put(0.5, a, 4);
  put(0.5, b, 1);
  put(1.5, a, 8);
  put(1.5, b, 2);
  const auto grid = aggregate(lat, ds);
  REQUIRE(grid.count(0, a) == 4);
  const auto intens = normalize(grid, NormalizationMode::ClassInternal);
  const Box box{0, 0, 30, 10};
  const auto g0 = bar_glyph(intens.row(0), BarVariant::Grouped, NormalizationMode::ClassInternal,
                            box, kPal);
  REQUIRE(g0.bars.size() == 2);
  CHECK(g0.bars[0].height == doctest::Approx(5.0));
  CHECK(g0.bars[1].height == doctest::Approx(5.0));
  const auto g1 = bar_glyph(intens.row(1), BarVariant::Grouped, NormalizationMode::ClassInternal,
                            box, kPal);
  CHECK(g1.bars[0].height == doctest::Approx(10.0));
  CHECK(g1.bars[1].height == doctest::Approx(10.0));
}

TEST_CASE("point glyph placement") {
  const Polygon hex{{10, 0}, {5, 8.66}, {-5, 8.66}, {-10, 0}, {-5, -8.66}, {5, -8.66}};
  CHECK(point_glyph({}, {}, 1.0, hex, kPal).discs.empty());

  const std::vector<Point2> one{{7, 7}};
  const std::vector<ClassId> cls1{2};
  const auto single = point_glyph(one, cls1, 1.0, hex, kPal);
  REQUIRE(single.discs.size() == 1);
  CHECK(single.discs[0].color == kPal.class_color(2));
  CHECK(oracle::strictly_inside(hex, single.discs[0].center, 1.0 - 1e-6));

  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(12);
    std::vector<Point2> pos(n);
    std::vector<ClassId> cls(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = {rng.uniform() * 24 - 12, rng.uniform() * 20 - 10};
      cls[i] = static_cast<ClassId>(rng.below(4));
    }
    const auto cluster = point_glyph(pos, cls, 1.2, hex, kPal);
    REQUIRE(cluster.discs.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(cluster.discs[i].cls == cls[i]);
      CHECK(oracle::strictly_inside(hex, cluster.discs[i].center, 1.2 - 1e-6));
    }
    const auto again = point_glyph(pos, cls, 1.2, hex, kPal);
    CHECK(again == cluster);
  }

  // Two well separated points inside are left where they are.
  const std::vector<Point2> apart{{-3, 0}, {3, 0}};
  const std::vector<ClassId> cls2{0, 1};
  const auto kept = point_glyph(apart, cls2, 1.0, hex, kPal);
  CHECK(kept.discs[0].center == apart[0]);
  CHECK(kept.discs[1].center == apart[1]);

  // Coincident points get pushed apart.
  const std::vector<Point2> same{{0, 0}, {0, 0}};
  const auto split = point_glyph(same, cls2, 1.0, hex, kPal);
  CHECK(overlap(split.discs[0], split.discs[1]) <= 1e-9);
}
