#include "binplot/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "binplot/error.hpp"

namespace binplot {

Dataset::Dataset(std::vector<LabeledPoint> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (labels_.size() > kMaxClasses) {
    throw Error(Errc::TooManyClasses, std::to_string(labels_.size()) + " classes exceed the limit of " +
                                          std::to_string(kMaxClasses));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw Error(Errc::InvalidParameter, "duplicate class label '" + labels_[i] + "'");
      }
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].cls >= labels_.size()) {
      throw Error(Errc::InvalidParameter,
                  "point " + std::to_string(i) + " references unknown class " +
                      std::to_string(points_[i].cls));
    }
  }
}

ClassId Dataset::intern(std::string_view label) {
  if (auto id = find_class(label)) return *id;
  if (labels_.size() >= kMaxClasses) {
    throw Error(Errc::TooManyClasses, "more than " + std::to_string(kMaxClasses) +
                                          " distinct classes (label '" + std::string(label) + "')");
  }
  labels_.emplace_back(label);
  return static_cast<ClassId>(labels_.size() - 1);
}

void Dataset::add(double x, double y, ClassId cls) {
  if (cls >= labels_.size()) {
    throw Error(Errc::InvalidParameter, "unknown class id " + std::to_string(cls));
  }
  points_.push_back({x, y, cls});
}

std::optional<ClassId> Dataset::find_class(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<ClassId>(i);
  }
  return std::nullopt;
}

Dataset Dataset::with_class_order(std::span<const std::string> order) const {
  if (order.size() != labels_.size()) {
    throw Error(Errc::InvalidParameter, "class order must list every class exactly once");
  }
  std::vector<ClassId> remap(labels_.size(), 0);
  std::vector<bool> seen(labels_.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto id = find_class(order[i]);
    if (!id || seen[*id]) {
      throw Error(Errc::InvalidParameter, "class order entry '" + order[i] +
                                              "' is unknown or repeated");
    }
    seen[*id] = true;
    remap[*id] = static_cast<ClassId>(i);
  }
  std::vector<LabeledPoint> pts = points_;
  for (auto& p : pts) p.cls = remap[p.cls];
  return Dataset(std::move(pts), std::vector<std::string>(order.begin(), order.end()));
}

Domain Dataset::bounding_domain(double pad_fraction) const {
  if (points_.empty()) return Domain{0.0, 1.0, 0.0, 1.0};
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  for (const auto& p : points_) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  auto widen = [](double& lo, double& hi) {
    if (hi - lo <= 0.0) {
      lo -= 0.5;
      hi += 0.5;
    }
  };
  widen(x0, x1);
  widen(y0, y1);
  const double px = (x1 - x0) * pad_fraction;
  const double py = (y1 - y0) * pad_fraction;
  return Domain{x0 - px, x1 + px, y0 - py, y1 + py};
}

}  // namespace binplot
