#include "binplot/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace binplot {

double standard_normal(Rng& rng) {
  double u1 = rng.uniform();
  while (u1 <= 0.0) u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Dataset gaussian_clusters(std::size_t n, std::size_t class_count, std::uint64_t seed) {
  Rng rng(seed);
  Dataset ds;
  struct Cluster {
    double cx, cy, sx, sy;
  };
  std::vector<std::vector<Cluster>> clusters(class_count);
  for (std::size_t c = 0; c < class_count; ++c) {
    ds.intern("c" + std::to_string(c));
    const auto m = 1 + rng.below(3);
    for (std::uint64_t i = 0; i < m; ++i) {
      clusters[c].push_back({100.0 * rng.uniform(), 100.0 * rng.uniform(),
                             2.0 + 10.0 * rng.uniform(), 2.0 + 10.0 * rng.uniform()});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Every class gets at least one point when n allows it.
    const auto c = i < class_count ? i : static_cast<std::size_t>(rng.below(class_count));
    const auto& cl = clusters[c][rng.below(clusters[c].size())];
    const double x = cl.cx + cl.sx * standard_normal(rng);
    const double y = cl.cy + cl.sy * standard_normal(rng);
    ds.add(x, y, static_cast<ClassId>(c));
  }
  return ds;
}

Dataset tree_cover_fixture(std::size_t points_per_class, std::uint64_t seed) {
  Rng rng(seed);
  Dataset ds;
  const ClassId lodgepole = ds.intern("lodgepole");
  const ClassId spruce = ds.intern("spruce");
  for (std::size_t i = 0; i < points_per_class; ++i) {
    ds.add(2900.0 + 110.0 * standard_normal(rng), 300.0 + 120.0 * standard_normal(rng),
           lodgepole);
    ds.add(3150.0 + 110.0 * standard_normal(rng), 300.0 + 120.0 * standard_normal(rng), spruce);
  }
  return ds;
}

Dataset demo_fixture(std::uint64_t seed) {
  Rng rng(seed);
  Dataset ds;
  const ClassId a = ds.intern("alpha");
  const ClassId b = ds.intern("beta");
  const ClassId c = ds.intern("gamma");
  for (int i = 0; i < 300; ++i) {
    ds.add(30.0 + 12.0 * standard_normal(rng), 40.0 + 10.0 * standard_normal(rng), a);
  }
  for (int i = 0; i < 200; ++i) {
    ds.add(60.0 + 10.0 * standard_normal(rng), 60.0 + 14.0 * standard_normal(rng), b);
  }
  for (int i = 0; i < 100; ++i) {
    ds.add(50.0 + 20.0 * standard_normal(rng), 30.0 + 6.0 * standard_normal(rng), c);
  }
  return ds;
}

}  // namespace binplot
