#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binplot/tessellation.hpp"

namespace binplot {

using ClassId = std::uint16_t;

/// Upper bound on distinguishable class colors.
inline constexpr std::size_t kMaxClasses = 10;

struct LabeledPoint {
  double x = 0.0;
  double y = 0.0;
  ClassId cls = 0;

  Point2 position() const { return {x, y}; }
  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// Ordered list of labeled points plus a class registry. Class ids are
/// registry positions, so registry order is legend order.
class Dataset {
 public:
  Dataset() = default;

  /// Throws Error{TooManyClasses} or Error{InvalidParameter} if any point
  /// references an unknown class.
  Dataset(std::vector<LabeledPoint> points, std::vector<std::string> labels);

  /// Returns the id for `label`, registering it if new.
  ClassId intern(std::string_view label);
  void add(double x, double y, ClassId cls);

  const std::vector<LabeledPoint>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return points_.size(); }
  std::size_t class_count() const { return labels_.size(); }
  std::optional<ClassId> find_class(std::string_view label) const;

  /// Same points with the registry permuted to `order` (a permutation of the
  /// current labels).
  Dataset with_class_order(std::span<const std::string> order) const;

  /// Bounding box of the points, padded by `pad_fraction` of each extent.
  /// Degenerate extents are widened to a unit interval first.
  Domain bounding_domain(double pad_fraction = 0.01) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<LabeledPoint> points_;
  std::vector<std::string> labels_;
};

}  // namespace binplot
