#include <doctest.h>

#include <algorithm>
#include <set>

#include "binplot/aggregation.hpp"
#include "binplot/error.hpp"
#include "binplot/fixtures.hpp"
#include "oracles.hpp"

using namespace binplot;

namespace {

BinSummaryGrid grid_from(const std::vector<std::vector<std::uint64_t>>& m) {
  // One rect bin per matrix row along x; points at cell centers.
  const int n = static_cast<int>(m.size());
  const auto lat = BinLattice::build({0, static_cast<double>(n), 0, 1}, ShapeKind::Rect, n);
  Dataset ds;
  for (std::size_t c = 0; c < m[0].size(); ++c) ds.intern("k" + std::to_string(c));
  for (int b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < m[b].size(); ++c) {
      for (std::uint64_t i = 0; i < m[b][c]; ++i) {
        ds.add(b + 0.5, 0.5 / n, static_cast<ClassId>(c));
      }
    }
  }
  return aggregate(lat, ds);
}

}  // namespace

TEST_CASE("empty dataset aggregates to zeros") {
  const auto lat = BinLattice::build({0, 1, 0, 1}, ShapeKind::Hex, 4);
  Dataset ds;
  ds.intern("a");
  const auto g = aggregate(lat, ds);
  CHECK(g.grand_total() == 0);
  for (BinIndex b = 0; b < g.bin_count(); ++b) CHECK(g.total(b) == 0);
}

TEST_CASE("points in one rect cell") {
  const auto lat = BinLattice::build({0, 10, 0, 10}, ShapeKind::Rect, 10);
  Dataset ds;
  const auto a = ds.intern("A");
  for (int i = 0; i < 4; ++i) ds.add(3.2 + 0.1 * i, 7.5, a);
  const auto g = aggregate(lat, ds);
  CHECK(g.count(73, a) == 4);
  CHECK(g.grand_total() == 4);
}

TEST_CASE("counts equal a naive loop, independent of threads and order") {
  const auto ds = gaussian_clusters(10000, 5, 11);
  const auto dom = ds.bounding_domain();
  for (auto shape : {ShapeKind::Rect, ShapeKind::Hex, ShapeKind::Tri}) {
    const auto lat = BinLattice::build(dom, shape, 20);
    const auto want = oracle::naive_counts(lat, ds);
    const auto g1 = aggregate(lat, ds, {OutOfDomainPolicy::Reject, 1});
    const auto g8 = aggregate(lat, ds, {OutOfDomainPolicy::Reject, 8});
    CHECK(g1 == g8);
    for (BinIndex b = 0; b < lat.bin_count(); ++b) {
      for (ClassId c = 0; c < 5; ++c) REQUIRE(g1.count(b, c) == want[b][c]);
    }
    CHECK(g1.grand_total() == 10000);
    std::uint64_t sum_totals = 0;
    for (auto t : g1.totals()) sum_totals += t;
    std::uint64_t sum_classes = 0;
    for (auto t : g1.class_totals()) sum_classes += t;
    CHECK(sum_totals == 10000);
    CHECK(sum_classes == 10000);

    auto pts = ds.points();
    std::reverse(pts.begin(), pts.end());
    const Dataset reversed(pts, ds.labels());
    CHECK(aggregate(lat, reversed) == g1);
  }
}

TEST_CASE("out-of-domain points") {
  const auto lat = BinLattice::build({0, 1, 0, 1}, ShapeKind::Rect, 2);
  Dataset ds;
  const auto a = ds.intern("a");
  ds.add(0.5, 0.5, a);
  ds.add(2.0, 0.5, a);
  ds.add(0.3, 0.3, a);
  ds.add(0.5, -1.0, a);
  try {
    aggregate(lat, ds);
    FAIL("expected out-of-domain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfDomain);
    CHECK(e.indices() == std::vector<std::size_t>{1, 3});
  }
  const auto g = aggregate(lat, ds, {OutOfDomainPolicy::Drop, 1});
  CHECK(g.grand_total() == 2);
}

TEST_CASE("normalization examples") {
  {
    const auto g = grid_from({{4, 1}});
    const auto n = normalize(g, NormalizationMode::BinInternal);
    CHECK(n.value(0, 0) == 1.0);
    CHECK(n.value(0, 1) == 0.25);
  }
  {
    const auto g = grid_from({{4}, {8}, {2}});
    const auto n = normalize(g, NormalizationMode::ClassInternal);
    CHECK(n.value(0, 0) == 0.5);
    CHECK(n.value(1, 0) == 1.0);
    CHECK(n.value(2, 0) == 0.25);
  }
  {
    const auto g = grid_from({{4, 1}, {8, 2}});
    const auto n = normalize(g, NormalizationMode::Global);
    CHECK(n.value(0, 0) == 0.5);
    CHECK(n.value(0, 1) == 0.125);
    CHECK(n.value(1, 0) == 1.0);
    CHECK(n.value(1, 1) == 0.25);
  }
}

TEST_CASE("log attenuation follows the log1p ratio") {
  CHECK(attenuate(0, 100, ScaleKind::Log) == 0.0);
  CHECK(attenuate(100, 100, ScaleKind::Log) == 1.0);
  CHECK(attenuate(1, 100, ScaleKind::Log) == doctest::Approx(std::log1p(1.0) / std::log1p(100.0)).epsilon(1e-15));
  CHECK(attenuate(10, 100, ScaleKind::Log) == doctest::Approx(std::log1p(10.0) / std::log1p(100.0)).epsilon(1e-15));
  CHECK(attenuate(1, 100, ScaleKind::Log) == doctest::Approx(0.1502).epsilon(1e-3));
  CHECK(attenuate(10, 100, ScaleKind::Log) == doctest::Approx(0.5196).epsilon(1e-3));
  CHECK(attenuate(5, 0, ScaleKind::Linear) == 0.0);
  // Strictly monotone within a unit.
  for (std::uint64_t n = 0; n < 200; ++n) {
    CHECK(attenuate(n, 200, ScaleKind::Log) < attenuate(n + 1, 200, ScaleKind::Log));
    CHECK(attenuate(n, 200, ScaleKind::Linear) < attenuate(n + 1, 200, ScaleKind::Linear));
  }
}

TEST_CASE("normalize equals the two-loop oracle, with unit maxima at exactly 1") {
  const auto ds = gaussian_clusters(3000, 4, 5);
  const auto lat = BinLattice::build(ds.bounding_domain(), ShapeKind::Hex, 9);
  const auto g = aggregate(lat, ds);
  const auto m = oracle::naive_counts(lat, ds);
  for (auto mode : {NormalizationMode::BinInternal, NormalizationMode::ClassInternal,
                    NormalizationMode::Global}) {
    for (auto scale : {ScaleKind::Linear, ScaleKind::Log}) {
      const auto n = normalize(g, mode, scale);
      const auto want = oracle::naive_normalize(m, mode, scale);
      for (BinIndex b = 0; b < g.bin_count(); ++b) {
        for (ClassId c = 0; c < 4; ++c) {
          REQUIRE(n.value(b, c) == want[b][c]);
          CHECK(n.value(b, c) >= 0.0);
          CHECK(n.value(b, c) <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("bin density is total over the densest total") {
  const auto g = grid_from({{4, 1}, {8, 2}, {0, 0}});
  const auto d = bin_density(g);
  CHECK(d[0] == 0.5);
  CHECK(d[1] == 1.0);
  CHECK(d[2] == 0.0);
}

TEST_CASE("largest remainder matches the Hamilton oracle") {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    std::vector<std::uint64_t> w(1 + rng.below(10));
    for (auto& x : w) x = rng.below(4) == 0 ? 0 : rng.below(1000);
    const auto seats = rng.below(200);
    const auto got = largest_remainder(w, seats);
    CHECK(got == oracle::hamilton(w, seats));
    std::uint64_t total = 0;
    for (auto x : w) total += x;
    if (total > 0) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += got[i];
        const double exact = static_cast<double>(w[i]) * seats / total;
        CHECK(std::abs(static_cast<double>(got[i]) - exact) < 1.0);
      }
      CHECK(s == seats);
    }
  }
  CHECK(largest_remainder(std::vector<std::uint64_t>{1, 1, 1}, 2) ==
        std::vector<std::uint64_t>{1, 1, 0});
}

TEST_CASE("sample quotas") {
  CHECK(sample_quotas(std::vector<std::uint64_t>{90, 10}, 10) == std::vector<std::uint64_t>{9, 1});
  CHECK(sample_quotas(std::vector<std::uint64_t>{99, 1}, 5) == std::vector<std::uint64_t>{4, 1});
  CHECK(sample_quotas(std::vector<std::uint64_t>{3}, 10) == std::vector<std::uint64_t>{3});
  CHECK(sample_quotas(std::vector<std::uint64_t>{5, 1, 1, 1}, 2) ==
        std::vector<std::uint64_t>{1, 1, 1, 1});
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::uint64_t> counts(1 + rng.below(10));
    for (auto& c : counts) c = rng.below(3) == 0 ? 0 : 1 + rng.below(rng.below(2) ? 5 : 500);
    const auto budget = 1 + rng.below(30);
    const auto q = sample_quotas(counts, budget);
    CHECK(q == oracle::quotas(counts, budget));
    std::uint64_t present = 0, total = 0, sum = 0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      present += counts[c] > 0;
      total += counts[c];
      sum += q[c];
      if (counts[c] > 0) CHECK(q[c] >= 1);
      CHECK(q[c] <= counts[c]);
    }
    CHECK(sum <= std::max(budget, present));
    CHECK(sum == std::max(std::min(budget, total), present));
  }
}

TEST_CASE("sample_points covers present classes and stays inside") {
  const auto ds = gaussian_clusters(4000, 3, 8);
  for (auto shape : {ShapeKind::Rect, ShapeKind::Hex, ShapeKind::Tri}) {
    const auto lat = BinLattice::build(ds.bounding_domain(), shape, 8);
    std::vector<std::vector<LabeledPoint>> per_bin(lat.bin_count());
    for (const auto& p : ds.points()) per_bin[lat.assign(p.position())].push_back(p);
    const double r = 0.004 * lat.domain().width();
    for (BinIndex b = 0; b < lat.bin_count(); ++b) {
      if (per_bin[b].empty()) continue;
      const auto s1 = sample_points(per_bin[b], 3, 10, lat, b, 77 + b, r);
      const auto s2 = sample_points(per_bin[b], 3, 10, lat, b, 77 + b, r);
      CHECK(s1 == s2);
      std::set<ClassId> want, got;
      for (const auto& p : per_bin[b]) want.insert(p.cls);
      for (const auto& p : s1) got.insert(p.cls);
      CHECK(got == want);
      CHECK(s1.size() <= std::max<std::size_t>(10, want.size()));
      Polygon frame;
      for (const auto& v : lat.bin_polygon(b)) frame.push_back(lat.to_frame(v));
      for (const auto& p : s1) {
        CHECK(oracle::strictly_inside(frame, lat.to_frame(p.position()), r * (1 - 1e-6)));
      }
    }
  }
}

TEST_CASE("single-class bin sample") {
  const auto lat = BinLattice::build({0, 1, 0, 1}, ShapeKind::Rect, 1);
  std::vector<LabeledPoint> pts;
  for (int i = 0; i < 20; ++i) pts.push_back({0.05 * i, 0.99, 0});
  const auto s = sample_points(pts, 1, 3, lat, 0, 5, 0.02);
  CHECK(s.size() == 3);
  for (const auto& p : s) CHECK(oracle::strictly_inside(lat.bin_polygon(0), p.position(), 0.0199));
}
