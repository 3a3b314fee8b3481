#pragma once

#include <optional>
#include <vector>

#include "binplot/config.hpp"
#include "binplot/dataset.hpp"
#include "binplot/design.hpp"
#include "binplot/scene.hpp"

namespace binplot {

struct PlotOptions {
  unsigned threads = 1;
  /// Replaces the config's seed when set.
  std::optional<std::uint64_t> seed;
};

struct PlotResult {
  std::optional<Scene> scene;
  std::vector<Violation> violations;
  bool ok() const { return scene.has_value(); }
};

/// Dataset with the config's class order applied. Throws Error{ConfigError}
/// if the order is not a permutation of the dataset's labels.
Dataset apply_class_order(const Dataset& dataset, const DesignConfig& config);

/// Explicit config domain, otherwise the 1%-padded bounding box.
Domain resolve_domain(const Dataset& dataset, const DesignConfig& config);

/// validate, aggregate, encode and compose. Violations are returned, not
/// thrown; data problems (points outside an explicit domain) throw.
PlotResult plot(const Dataset& dataset, const DesignConfig& config,
                const PlotOptions& options = {});

}  // namespace binplot
