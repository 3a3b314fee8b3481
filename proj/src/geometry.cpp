#include "binplot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace binplot {

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double orientation_sign(std::span<const Point2> poly) {
  return signed_area(poly) >= 0.0 ? 1.0 : -1.0;
}

// One Sutherland-Hodgman pass. `axis` 0 clips on x, 1 on y; `keep_above`
// retains the side with coordinate >= bound.
Polygon clip_pass(const Polygon& in, int axis, double bound, bool keep_above) {
  Polygon out;
  if (in.empty()) return out;
  auto coord = [axis](Point2 p) { return axis == 0 ? p.x : p.y; };
  auto inside = [&](Point2 p) {
    return keep_above ? coord(p) >= bound : coord(p) <= bound;
  };
  auto intersect = [&](Point2 a, Point2 b) {
    if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
    if (coord(a) == bound) return a;
    if (coord(b) == bound) return b;
    const double t = (bound - coord(a)) / (coord(b) - coord(a));
    Point2 r;
    if (axis == 0) {
      r.x = bound;
      r.y = a.y + t * (b.y - a.y);
    } else {
      r.x = a.x + t * (b.x - a.x);
      r.y = bound;
    }
    return r;
  };
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Point2 cur = in[i];
    const Point2 prev = in[(i + in.size() - 1) % in.size()];
    const bool cur_in = inside(cur);
    const bool prev_in = inside(prev);
    if (cur_in) {
      if (!prev_in) out.push_back(intersect(prev, cur));
      out.push_back(cur);
    } else if (prev_in) {
      out.push_back(intersect(prev, cur));
    }
  }
  return out;
}

void drop_duplicates(Polygon& poly) {
  Polygon out;
  out.reserve(poly.size());
  for (const auto& p : poly) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  poly = std::move(out);
}

}  // namespace

double signed_area(std::span<const Point2> poly) {
  double acc = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return 0.5 * acc;
}

double area(std::span<const Point2> poly) { return std::abs(signed_area(poly)); }

Point2 centroid(std::span<const Point2> poly) {
  const double a = signed_area(poly);
  if (poly.empty()) return {};
  if (std::abs(a) < std::numeric_limits<double>::min()) {
    Point2 mean;
    for (const auto& p : poly) {
      mean.x += p.x;
      mean.y += p.y;
    }
    mean.x /= static_cast<double>(poly.size());
    mean.y /= static_cast<double>(poly.size());
    return mean;
  }
  double cx = 0.0;
  double cy = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = poly[i];
    const Point2 q = poly[(i + 1) % n];
    const double w = p.x * q.y - q.x * p.y;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

Box bounding_box(std::span<const Point2> poly) {
  Box b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
        -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : poly) {
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  return b;
}

bool convex_contains(std::span<const Point2> poly, Point2 p, double eps) {
  if (poly.size() < 3) return false;
  const double s = orientation_sign(poly);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s * cross(poly[i], poly[(i + 1) % n], p) < -eps) return false;
  }
  return true;
}

double convex_inner_distance(std::span<const Point2> poly, Point2 p) {
  const double s = orientation_sign(poly);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    best = std::min(best, s * cross(a, b, p) / len);
  }
  return best;
}

Polygon clip_to_box(std::span<const Point2> poly, const Box& box) {
  Polygon out(poly.begin(), poly.end());
  out = clip_pass(out, 0, box.x_min, true);
  out = clip_pass(out, 0, box.x_max, false);
  out = clip_pass(out, 1, box.y_min, true);
  out = clip_pass(out, 1, box.y_max, false);
  drop_duplicates(out);
  return out;
}

bool clip_segment(std::span<const Point2> poly, Point2& a, Point2& b) {
  if (poly.size() < 3) return false;
  const double s = orientation_sign(poly);
  double t0 = 0.0;
  double t1 = 1.0;
  const Point2 d{b.x - a.x, b.y - a.y};
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e0 = poly[i];
    const Point2 e1 = poly[(i + 1) % n];
    // Inside iff s * cross(e0, e1, a + t d) >= 0, linear in t.
    const double ex = e1.x - e0.x;
    const double ey = e1.y - e0.y;
    const double base = s * (ex * (a.y - e0.y) - ey * (a.x - e0.x));
    const double slope = s * (ex * d.y - ey * d.x);
    if (slope == 0.0) {
      if (base < 0.0) return false;
      continue;
    }
    const double t = -base / slope;
    if (slope > 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 >= t1) return false;
  }
  const Point2 start{a.x + t0 * d.x, a.y + t0 * d.y};
  const Point2 end{a.x + t1 * d.x, a.y + t1 * d.y};
  a = start;
  b = end;
  return true;
}

Point2 pull_inside(std::span<const Point2> poly, Point2 target, Point2 p, double r) {
  const double s = orientation_sign(poly);
  const std::size_t n = poly.size();
  double t_needed = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    const double dp = s * cross(a, b, p) / len;
    const double dt = s * cross(a, b, target) / len;
    if (dt < r) return target;
    if (dp < r) t_needed = std::max(t_needed, (r - dp) / (dt - dp));
  }
  if (t_needed <= 0.0) return p;
  // Absorb rounding so the disc ends up inside rather than tangent-minus-ulp.
  t_needed += 1e-9;
  if (t_needed >= 1.0) return target;
  return {p.x + t_needed * (target.x - p.x), p.y + t_needed * (target.y - p.y)};
}

}  // namespace binplot
