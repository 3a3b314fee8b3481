#include "binplot/pipeline.hpp"

#include "binplot/error.hpp"
#include "binplot/layout.hpp"

namespace binplot {

Dataset apply_class_order(const Dataset& dataset, const DesignConfig& config) {
  if (config.class_order.empty()) return dataset;
  try {
    return dataset.with_class_order(config.class_order);
  } catch (const Error& e) {
    throw Error(Errc::ConfigError, std::string("class_order: ") + e.what());
  }
}

Domain resolve_domain(const Dataset& dataset, const DesignConfig& config) {
  return config.domain ? *config.domain : dataset.bounding_domain(0.01);
}

PlotResult plot(const Dataset& dataset, const DesignConfig& config, const PlotOptions& options) {
  const Dataset ordered = apply_class_order(dataset, config);
  DesignSpec spec = config.design;
  if (options.seed) spec.seed = *options.seed;
  PlotResult result;
  auto validated = validate_design(spec, ordered);
  if (!validated.ok()) {
    result.violations = std::move(validated.violations);
    return result;
  }
  ComposeOptions opts;
  opts.threads = options.threads;
  opts.x_title = config.columns.x;
  opts.y_title = config.columns.y;
  result.scene = compose(*validated.design, ordered, resolve_domain(ordered, config), opts);
  return result;
}

}  // namespace binplot
