#pragma once

// Reference implementations written independently of the library, used as
// test oracles. Simple and slow on purpose.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "binplot/aggregation.hpp"
#include "binplot/dataset.hpp"
#include "binplot/geometry.hpp"
#include "binplot/random.hpp"
#include "binplot/tessellation.hpp"

namespace oracle {

using binplot::BinIndex;
using binplot::Point2;
using binplot::Polygon;

inline double shoelace(const Polygon& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    s += (a.x * b.y - a.y * b.x);
  }
  return s / 2.0;
}

inline bool on_segment(Point2 a, Point2 b, Point2 p) {
  const double cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  if (cr != 0.0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

/// Closed point-in-polygon by ray crossing plus an exact boundary test.
inline bool contains_closed(const Polygon& poly, Point2 p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (on_segment(poly[j], poly[i], p)) return true;
    const auto& a = poly[i];
    const auto& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

/// Strict interior test with a margin.
inline bool strictly_inside(const Polygon& poly, Point2 p, double margin = 0.0) {
  const double orient = shoelace(poly) > 0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const double d = orient * ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / len;
    if (!(d > margin)) return false;
  }
  return true;
}

/// Hex centers in the normalized frame, enumerated row by row until the
/// guaranteed-covered height reaches the frame top. Index order row-major.
inline std::vector<Point2> hex_centers(double frame_side, int bins_x) {
  const double p = frame_side / bins_x;
  const double r = p / std::sqrt(3.0);
  std::vector<Point2> out;
  for (int row = 0;; ++row) {
    const double v = row * 1.5 * r;
    if (row % 2 == 0) {
      for (int c = 0; c <= bins_x; ++c) out.push_back({c * p, v});
    } else {
      for (int c = 0; c < bins_x; ++c) out.push_back({(c + 0.5) * p, v});
    }
    if (v + r / 2.0 >= frame_side - 1e-9 * frame_side) break;
  }
  return out;
}

inline BinIndex nearest_center(const std::vector<Point2>& centers, Point2 q) {
  BinIndex best = 0;
  double best_d = INFINITY;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const double dx = centers[i].x - q.x;
    const double dy = centers[i].y - q.y;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

/// Brute-force assignment: every bin polygon containing the point, then the
/// tie rule. Rect and tri use half-open cells (the larger row/column wins on
/// a shared line) and part 0 on a cell diagonal; hex picks the nearest center.
inline std::optional<BinIndex> brute_force_assign(const binplot::BinLattice& lat, Point2 p) {
  std::vector<BinIndex> hits;
  for (BinIndex b = 0; b < lat.bin_count(); ++b) {
    if (contains_closed(lat.bin_polygon(b), p)) hits.push_back(b);
  }
  if (hits.empty()) return std::nullopt;
  switch (lat.shape()) {
    case binplot::ShapeKind::Rect:
      return *std::max_element(hits.begin(), hits.end());
    case binplot::ShapeKind::Tri: {
      BinIndex best = hits.front();
      for (auto h : hits) {
        const auto cell = h / 2;
        const auto best_cell = best / 2;
        if (cell > best_cell || (cell == best_cell && h % 2 < best % 2)) best = h;
      }
      return best;
    }
    case binplot::ShapeKind::Hex: {
      const auto centers = hex_centers(lat.domain().width(), lat.bins_x());
      const Point2 q = lat.to_frame(p);
      BinIndex best = hits.front();
      double best_d = INFINITY;
      for (auto h : hits) {
        const double dx = centers[h].x - q.x;
        const double dy = centers[h].y - q.y;
        const double d = dx * dx + dy * dy;
        if (d < best_d) {
          best_d = d;
          best = h;
        }
      }
      return best;
    }
  }
  return std::nullopt;
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

inline Matrix naive_counts(const binplot::BinLattice& lat, const binplot::Dataset& ds) {
  Matrix m(lat.bin_count(), std::vector<std::uint64_t>(ds.class_count(), 0));
  for (const auto& p : ds.points()) m[lat.assign(p.position())][p.cls] += 1;
  return m;
}

/// Two-loop normalization and attenuation straight from the definitions.
inline std::vector<std::vector<double>> naive_normalize(const Matrix& m,
                                                        binplot::NormalizationMode mode,
                                                        binplot::ScaleKind scale) {
  const std::size_t nb = m.size();
  const std::size_t nc = nb ? m[0].size() : 0;
  auto f = [scale](double n) { return scale == binplot::ScaleKind::Log ? std::log1p(n) : n; };
  std::vector<std::vector<double>> out(nb, std::vector<double>(nc, 0.0));
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t c = 0; c < nc; ++c) {
      std::uint64_t unit = 0;
      for (std::size_t b2 = 0; b2 < nb; ++b2) {
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
          const bool same = mode == binplot::NormalizationMode::Global ||
                            (mode == binplot::NormalizationMode::BinInternal && b2 == b) ||
                            (mode == binplot::NormalizationMode::ClassInternal && c2 == c);
          if (same) unit = std::max(unit, m[b2][c2]);
        }
      }
      out[b][c] = unit == 0 ? 0.0 : f(static_cast<double>(m[b][c])) / f(static_cast<double>(unit));
    }
  }
  return out;
}

/// Hamilton apportionment via exact rational comparison of remainders.
inline std::vector<std::uint64_t> hamilton(const std::vector<std::uint64_t>& w, std::uint64_t seats) {
  const std::uint64_t total = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
  std::vector<std::uint64_t> q(w.size(), 0);
  if (total == 0) return q;
  std::vector<std::uint64_t> rem(w.size());
  std::uint64_t given = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(w[i]) * seats;
    q[i] = static_cast<std::uint64_t>(prod / total);
    rem[i] = static_cast<std::uint64_t>(prod % total);
    given += q[i];
  }
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rem[a] > rem[b]; });
  for (std::size_t k = 0; given < seats; ++k, ++given) q[order[k]] += 1;
  return q;
}

/// Sample quotas from the stated rule: cap at bin size, raise to the number
/// of present classes, apportion, then floor present classes at one by
/// taking from the current largest quota (lowest index on ties).
inline std::vector<std::uint64_t> quotas(const std::vector<std::uint64_t>& counts,
                                         std::uint64_t budget) {
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  const auto present =
      static_cast<std::uint64_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
  std::uint64_t b = std::max(std::min(budget, total), present);
  auto q = hamilton(counts, b);
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0 && q[c] == 0) {
      std::size_t big = 0;
      for (std::size_t i = 1; i < q.size(); ++i) {
        if (q[i] > q[big]) big = i;
      }
      q[big] -= 1;
      q[c] = 1;
    }
  }
  return q;
}

/// sRGB electro-optical transfer function and its inverse.
inline double to_linear(double c8) {
  const double c = c8 / 255.0;
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}
inline double to_srgb8(double lin) {
  const double c = lin <= 0.0031308 ? 12.92 * lin : 1.055 * std::pow(lin, 1.0 / 2.4) - 0.055;
  return c * 255.0;
}

/// Smallest value in {1, 2, 5, 10} x 10^k that is >= x.
inline double round_up_step(double x) {
  const double e = std::pow(10.0, std::floor(std::log10(x)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * e >= x * (1 - 1e-12)) return m * e;
  }
  return 10.0 * e;
}

/// Tiny XML well-formedness check: balanced tags, quoted attributes, one
/// root element, known entities only.
inline bool well_formed_xml(const std::string& doc, std::string* why = nullptr) {
  auto fail = [&](std::string w) {
    if (why) *why = std::move(w);
    return false;
  };
  std::vector<std::string> stack;
  std::size_t i = 0;
  int roots = 0;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      if (doc[i] == '&') {
        const auto semi = doc.find(';', i);
        if (semi == std::string::npos) return fail("bad entity");
        const auto ent = doc.substr(i, semi - i + 1);
        if (ent != "&amp;" && ent != "&lt;" && ent != "&gt;" && ent != "&quot;" && ent != "&apos;") {
          return fail("unknown entity " + ent);
        }
      } else if (stack.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) {
        return fail("text outside root");
      }
      ++i;
      continue;
    }
    const auto close = doc.find('>', i);
    if (close == std::string::npos) return fail("unterminated tag");
    std::string tag = doc.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.starts_with("?")) continue;
    if (tag.starts_with("/")) {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      continue;
    }
    const bool self = tag.ends_with("/");
    if (self) tag.pop_back();
    const auto sp = tag.find_first_of(" \t\n");
    const std::string name = tag.substr(0, sp);
    // Attributes: name="value" pairs.
    std::size_t k = sp == std::string::npos ? tag.size() : sp;
    while (k < tag.size()) {
      while (k < tag.size() && std::isspace(static_cast<unsigned char>(tag[k]))) ++k;
      if (k >= tag.size()) break;
      const auto eq = tag.find('=', k);
      if (eq == std::string::npos || eq + 1 >= tag.size() || tag[eq + 1] != '"') {
        return fail("bad attribute in <" + name + ">");
      }
      const auto end = tag.find('"', eq + 2);
      if (end == std::string::npos) return fail("unterminated attribute in <" + name + ">");
      const auto value = tag.substr(eq + 2, end - eq - 2);
      if (value.find('<') != std::string::npos) return fail("'<' in attribute");
      k = end + 1;
    }
    if (stack.empty()) ++roots;
    if (!self) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (roots != 1) return fail("expected a single root element");
  return true;
}

inline std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace oracle
