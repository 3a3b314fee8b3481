#pragma once

#include <span>
#include <vector>

namespace binplot {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

using Polygon = std::vector<Point2>;

struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  Point2 center() const { return {(x_min + x_max) * 0.5, (y_min + y_max) * 0.5}; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Signed shoelace area; positive for counter-clockwise vertex order.
double signed_area(std::span<const Point2> poly);
double area(std::span<const Point2> poly);
Point2 centroid(std::span<const Point2> poly);
Box bounding_box(std::span<const Point2> poly);

/// Closed containment test for a convex polygon of either orientation.
bool convex_contains(std::span<const Point2> poly, Point2 p, double eps = 0.0);

/// Smallest distance from p to any edge line of a convex polygon, signed so
/// that interior points are positive.
double convex_inner_distance(std::span<const Point2> poly, Point2 p);

/// Sutherland-Hodgman clip of a convex polygon against an axis-aligned box.
/// Edge intersections are computed from canonically ordered endpoints so two
/// polygons sharing an edge produce bit-identical clipped vertices.
Polygon clip_to_box(std::span<const Point2> poly, const Box& box);

/// Clip the segment a-b to a convex polygon; returns false if nothing remains.
bool clip_segment(std::span<const Point2> poly, Point2& a, Point2& b);

/// Move p along the line toward `target` by the smallest amount that places a
/// disc of radius r completely inside the convex polygon. If no such position
/// exists on the segment, returns `target`.
Point2 pull_inside(std::span<const Point2> poly, Point2 target, Point2 p, double r);

}  // namespace binplot
