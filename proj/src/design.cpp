#include "binplot/design.hpp"

#include <algorithm>
#include <string>

#include "binplot/encoding.hpp"
#include "binplot/error.hpp"

namespace binplot {

std::string_view to_string(Composition c) noexcept {
  return c == Composition::Juxtaposed ? "juxtaposed" : "superimposed";
}

std::string_view to_string(Background b) noexcept {
  switch (b) {
    case Background::None: return "none";
    case Background::Luminance: return "luminance";
    case Background::Majority: return "majority";
    case Background::Blend: return "blend";
    case Background::Weave: return "weave";
    case Background::AttributeBlocks: return "attribute-blocks";
    case Background::Hatching: return "hatching";
  }
  return "none";
}

std::string_view to_string(GlyphKind g) noexcept {
  switch (g) {
    case GlyphKind::None: return "none";
    case GlyphKind::Pie: return "pie";
    case GlyphKind::Donut: return "donut";
    case GlyphKind::AreaPie: return "area-pie";
    case GlyphKind::GroupedBar: return "grouped-bar";
    case GlyphKind::StackedBar: return "stacked-bar";
    case GlyphKind::Points: return "points";
  }
  return "none";
}

namespace {

bool is_pie(GlyphKind g) {
  return g == GlyphKind::Pie || g == GlyphKind::Donut || g == GlyphKind::AreaPie;
}

void add(std::vector<Violation>& out, std::string_view rule, std::string message, std::string reason) {
  out.push_back({std::string(rule), std::move(message), std::move(reason)});
}

void parameter(std::vector<Violation>& out, std::string message) {
  add(out, rules::kParameter, std::move(message), "the value is outside the supported range");
}

}  // namespace

std::vector<Violation> legality_violations(const DesignSpec& s) {
  std::vector<Violation> out;
  if (is_pie(s.glyph) && s.normalization != NormalizationMode::BinInternal) {
    add(out, rules::kPieNormalization,
        "pie requires bin-internal normalization (got " + std::string(to_string(s.normalization)) + ")",
        "a pie divides one bin's whole into parts, so slices are only meaningful for counts "
        "normalized within that bin");
  }
  if (s.composition == Composition::Juxtaposed &&
      s.normalization == NormalizationMode::BinInternal) {
    add(out, rules::kJuxtaposedNormalization,
        "juxtaposed panels require class-internal or global normalization",
        "each juxtaposed panel shows a single class, so bins must be scaled per class or "
        "against the global maximum; bin-internal shares need all classes in one view");
  }
  if (s.background == Background::Weave) {
    if (s.normalization == NormalizationMode::ClassInternal) {
      add(out, rules::kWeave, "weave requires bin-internal or global normalization",
          "woven fragments read as parts of a bin's whole, which per-class scaling breaks");
    }
    if (s.glyph != GlyphKind::None) {
      add(out, rules::kWeave, "weave cannot be combined with a glyph",
          "a glyph placed on top hides the fragments that encode the class mix");
    }
  }
  if ((s.background == Background::AttributeBlocks || s.background == Background::Hatching) &&
      s.glyph != GlyphKind::None) {
    add(out, rules::kFullBinFill,
        std::string(to_string(s.background)) + " cannot be combined with a glyph",
        "this fill uses the whole bin area, leaving no room for a foreground glyph");
  }
  if (!s.boundaries &&
      (s.background == Background::None || s.background == Background::Luminance) &&
      s.glyph == GlyphKind::None) {
    add(out, rules::kBoundaryless, "bins without boundaries need a glyph for this background",
        "with no outline and at most a density shade, nothing in the bin tells classes apart, "
        "so a glyph must supply that");
  }
  return out;
}

std::vector<Violation> validate(const DesignSpec& s, const Dataset& dataset) {
  std::vector<Violation> out = legality_violations(s);
  const std::size_t k = dataset.class_count();

  if (s.bins_x < 1 || s.bins_x > 1000) parameter(out, "bins_x must be in [1, 1000]");
  if (s.panel_size < 50 || s.panel_size > 4096) parameter(out, "panel_size must be in [50, 4096] px");
  if (s.fragments < 2 || s.fragments > 64) parameter(out, "fragments must be in [2, 64]");
  if (s.sample_budget < 1) parameter(out, "sample_budget must be at least 1");
  if (!(s.point_radius > 0.0)) parameter(out, "point_radius must be positive");
  if (s.quantization < 0 || s.quantization > 64) parameter(out, "quantization must be in [0, 64]");

  if (k > kMaxClasses) {
    add(out, rules::kParameter, std::to_string(k) + " classes exceed the limit of " + std::to_string(kMaxClasses),
        "class identity is carried by color, which stays distinguishable for about ten classes");
  }
  if (!s.palette.empty()) {
    Palette p;
    p.classes = s.palette;
    try {
      p.check(k);
    } catch (const Error& e) {
      parameter(out, std::string("palette: ") + e.what());
    }
  }
  if (!s.hatch_angles.empty() && s.hatch_angles.size() < k) {
    parameter(out, "hatch_angles lists " + std::to_string(s.hatch_angles.size()) + " angles for " +
                       std::to_string(k) + " classes");
  }
  if (!s.hatch_draw_order.empty()) {
    bool ok = s.hatch_draw_order.size() == k;
    std::vector<bool> seen(k, false);
    for (const auto& label : s.hatch_draw_order) {
      auto id = dataset.find_class(label);
      if (!id || seen[*id]) {
        ok = false;
        break;
      }
      seen[*id] = true;
    }
    if (!ok) parameter(out, "hatch_draw_order must list every class label exactly once");
  }
  if (s.heterogeneous) {
    if (s.composition != Composition::Juxtaposed) {
      parameter(out, "heterogeneous bin sizes apply to juxtaposed designs only");
    }
    if (s.panel_bins_x.size() != k) {
      parameter(out, "panel_bins_x must give one bins_x per class");
    }
    for (int b : s.panel_bins_x) {
      if (b < 1 || b > 1000) {
        parameter(out, "panel_bins_x entries must be in [1, 1000]");
        break;
      }
    }
  }
  return out;
}

ValidationResult validate_design(const DesignSpec& spec, const Dataset& dataset) {
  ValidationResult r;
  r.violations = validate(spec, dataset);
  if (r.violations.empty()) r.design = ValidatedDesign(spec, dataset.class_count());
  return r;
}

}  // namespace binplot
