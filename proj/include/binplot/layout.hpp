#pragma once

#include <string>
#include <vector>

#include "binplot/dataset.hpp"
#include "binplot/design.hpp"
#include "binplot/encoding.hpp"
#include "binplot/scene.hpp"

namespace binplot {

/// Round step near range / target: 1, 2 or 5 times a power of ten.
double nice_step(double range, int target = 6);

/// Multiples of a nice step inside [lo, hi], at most `max_ticks` of them.
std::vector<double> tick_values(double lo, double hi, int max_ticks = 8);

/// Tick labels with as many decimals as the step needs.
std::string format_tick(double value, double step);

AxisSet axis_ticks(const Domain& domain, const Viewport& viewport);

/// One entry per class in registry order.
std::vector<LegendEntry> legend_entries(const Dataset& dataset, const Palette& palette,
                                        Point2 origin);

/// Palette implied by a spec for `class_count` classes.
Palette resolve_palette(const DesignSpec& spec, std::size_t class_count);

struct ComposeOptions {
  unsigned threads = 1;
  std::string x_title = "x";
  std::string y_title = "y";
};

/// Aggregate, encode and arrange `dataset` into a Scene. Superimposed
/// designs produce one panel; juxtaposed designs one panel per class in a
/// near-square grid. Throws Error{SpecNotValidated} if the design was
/// validated for a different class count and Error{OutOfDomain} for points
/// outside `domain`.
Scene compose(const ValidatedDesign& design, const Dataset& dataset, const Domain& domain,
              const ComposeOptions& options = {});

}  // namespace binplot
