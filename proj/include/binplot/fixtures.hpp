#pragma once

#include <cstddef>
#include <cstdint>

#include "binplot/dataset.hpp"
#include "binplot/random.hpp"

namespace binplot {

/// Standard normal variate (Box-Muller on the portable Rng stream).
double standard_normal(Rng& rng);

/// `n` points in 1-3 Gaussian clusters per class with random centers in
/// [0, 100]^2. Class labels are "c0", "c1", ...
Dataset gaussian_clusters(std::size_t n, std::size_t class_count, std::uint64_t seed);

/// Two tree-cover-like classes along an elevation axis: "lodgepole" peaks
/// near 2900 and "spruce" near 3150 with overlapping spreads. y is a second,
/// class-independent attribute.
Dataset tree_cover_fixture(std::size_t points_per_class = 2000, std::uint64_t seed = 1);

/// Small three-class dataset used for golden renders.
Dataset demo_fixture(std::uint64_t seed = 42);

}  // namespace binplot
