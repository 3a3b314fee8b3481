#include "binplot/svg.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "binplot/error.hpp"

namespace binplot {

namespace {

constexpr const char* kFont = "font-family=\"sans-serif\" font-size=\"11\"";

class Writer {
 public:
  explicit Writer(const Scene& scene) : scene_(scene) {}

  std::string run() {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
            num(scene_.width) + "\" height=\"" + num(scene_.height) + "\" viewBox=\"0 0 " +
            num(scene_.width) + " " + num(scene_.height) + "\">\n";
    out_ += "<rect id=\"background\" x=\"0\" y=\"0\" width=\"" + num(scene_.width) +
            "\" height=\"" + num(scene_.height) + "\" fill=\"#ffffff\"/>\n";
    for (const auto& panel : scene_.panels) write_panel(panel);
    write_legend();
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  static std::string num(double v) { return format_number(v); }

  std::string points(const Polygon& poly) const {
    std::string s;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) s += ' ';
      s += num(poly[i].x) + "," + num(poly[i].y);
    }
    return s;
  }

  std::string path_data(const Polygon& poly) const {
    std::string s;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      s += i ? " L" : "M";
      s += num(poly[i].x) + " " + num(poly[i].y);
    }
    if (!poly.empty()) s += " Z";
    return s;
  }

  void rect(double x, double y, double w, double h, const Rgb& fill) {
    out_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
            "\" height=\"" + num(h) + "\" fill=\"" + fill.hex() + "\"/>\n";
  }

  const Polygon& outline(const Panel& panel, BinIndex bin) const {
    return panel.bins.at(bin).outline;
  }

  void write_panel(const Panel& panel) {
    out_ += "<g id=\"panel-" + std::to_string(panel.index) + "\" class=\"panel\"";
    if (panel.class_filter) out_ += " data-class=\"" + std::to_string(*panel.class_filter) + "\"";
    out_ += ">\n";
    const auto& v = panel.viewport;
    if (!panel.title.empty()) {
      out_ += "<text class=\"panel-title\" x=\"" + num(v.x + v.width / 2) + "\" y=\"" +
              num(v.y - 12) + "\" text-anchor=\"middle\" " + kFont + ">" +
              xml_escape(panel.title) + "</text>\n";
    }
    std::size_t i = 0;
    const auto& items = panel.display;
    out_ += "<g class=\"fills\">\n";
    for (; i < items.size() && std::holds_alternative<FillItem>(items[i]); ++i) {
      write_fill(panel, std::get<FillItem>(items[i]));
    }
    out_ += "</g>\n";
    out_ += "<g class=\"boundaries\" fill=\"none\" stroke=\"#6b6b6b\" stroke-width=\"0.750\">\n";
    for (; i < items.size() && std::holds_alternative<BoundaryItem>(items[i]); ++i) {
      const auto bin = std::get<BoundaryItem>(items[i]).bin;
      out_ += "<path id=\"" + bin_element_id(scene_, panel.index, bin) + "-boundary\" d=\"" +
              path_data(outline(panel, bin)) + "\"/>\n";
    }
    out_ += "</g>\n";
    out_ += "<g class=\"glyphs\">\n";
    for (; i < items.size(); ++i) {
      if (const auto* g = std::get_if<GlyphItem>(&items[i])) {
        write_glyph(panel, *g);
      } else {
        throw Error(Errc::InvalidParameter, "display list is not ordered fills, boundaries, glyphs");
      }
    }
    out_ += "</g>\n";
    write_axes(panel);
    out_ += "</g>\n";
  }

  void write_fill(const Panel& panel, const FillItem& item) {
    const std::string id = bin_element_id(scene_, panel.index, item.bin);
    const std::string data = " data-bin=\"" + std::to_string(item.bin) + "\"";
    const auto& poly = outline(panel, item.bin);
    if (const auto* solid = std::get_if<SolidColor>(&item.fill)) {
      out_ += "<polygon id=\"" + id + "\" class=\"fill\"" + data + " points=\"" + points(poly) +
              "\" fill=\"" + solid->color.hex() + "\"/>\n";
      return;
    }
    if (const auto* grid = std::get_if<FragmentGrid>(&item.fill)) {
      const std::string clip = "clip-" + id;
      out_ += "<clipPath id=\"" + clip + "\"><polygon points=\"" + points(poly) +
              "\"/></clipPath>\n";
      out_ += "<g id=\"" + id + "\" class=\"fill weave\"" + data + " clip-path=\"url(#" + clip +
              ")\">\n";
      const double cw = item.area.width() / grid->side;
      const double ch = item.area.height() / grid->side;
      for (int r = 0; r < grid->side; ++r) {
        for (int c = 0; c < grid->side; ++c) {
          rect(item.area.x_min + c * cw, item.area.y_min + r * ch, cw, ch,
               grid->colors[static_cast<std::size_t>(r * grid->side + c)]);
        }
      }
      out_ += "</g>\n";
      return;
    }
    if (const auto* blocks = std::get_if<SubBlockGrid>(&item.fill)) {
      out_ += "<g id=\"" + id + "\" class=\"fill blocks\"" + data + ">\n";
      const double cw = item.area.width() / blocks->cols;
      const double ch = item.area.height() / blocks->rows;
      for (int r = 0; r < blocks->rows; ++r) {
        for (int c = 0; c < blocks->cols; ++c) {
          rect(item.area.x_min + c * cw, item.area.y_min + r * ch, cw, ch,
               blocks->colors[static_cast<std::size_t>(r * blocks->cols + c)]);
        }
      }
      out_ += "</g>\n";
      return;
    }
    const auto& strokes = std::get<StrokeSet>(item.fill);
    out_ += "<g id=\"" + id + "\" class=\"fill hatch\"" + data + " stroke-width=\"" +
            num(strokes.stroke_width) + "\" stroke-linecap=\"butt\">\n";
    for (std::size_t l = 0; l < strokes.layers.size(); ++l) {
      const auto& layer = strokes.layers[l];
      out_ += "<g data-class=\"" + std::to_string(layer.cls) + "\" stroke=\"" +
              layer.color.hex() + "\">\n";
      if (l < item.strokes.size()) {
        for (const auto& s : item.strokes[l]) {
          out_ += "<line x1=\"" + num(s.a.x) + "\" y1=\"" + num(s.a.y) + "\" x2=\"" +
                  num(s.b.x) + "\" y2=\"" + num(s.b.y) + "\"/>\n";
        }
      }
      out_ += "</g>\n";
    }
    out_ += "</g>\n";
  }

  static Point2 on_circle(Point2 c, double r, double degrees) {
    const double a = degrees * std::numbers::pi / 180.0;
    return {c.x + r * std::sin(a), c.y - r * std::cos(a)};
  }

  void write_glyph(const Panel& panel, const GlyphItem& item) {
    const std::string id = bin_element_id(scene_, panel.index, item.bin) + "-glyph";
    if (const auto* pie = std::get_if<PieGlyph>(&item.glyph)) {
      out_ += "<g id=\"" + id + "\" class=\"glyph pie\">\n";
      const Point2 c = pie->center;
      const double ro = pie->outer_radius;
      const double ri = pie->inner_radius;
      for (const auto& s : pie->slices) {
        const std::string cls = " data-class=\"" + std::to_string(s.cls) + "\"";
        const double sweep = s.end - s.start;
        if (sweep >= 360.0) {
          if (ri > 0.0) {
            out_ += "<path" + cls + " fill-rule=\"evenodd\" d=\"" + ring(c, ro) + " " + ring(c, ri) +
                    "\" fill=\"" + s.color.hex() + "\"/>\n";
          } else {
            out_ += "<circle" + cls + " cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" +
                    num(ro) + "\" fill=\"" + s.color.hex() + "\"/>\n";
          }
          continue;
        }
        const char* large = sweep > 180.0 ? "1" : "0";
        const Point2 o0 = on_circle(c, ro, s.start);
        const Point2 o1 = on_circle(c, ro, s.end);
        std::string d = "M";
        if (ri > 0.0) {
          const Point2 i0 = on_circle(c, ri, s.start);
          const Point2 i1 = on_circle(c, ri, s.end);
          d += num(o0.x) + " " + num(o0.y) + " A" + num(ro) + " " + num(ro) + " 0 " + large +
               " 1 " + num(o1.x) + " " + num(o1.y) + " L" + num(i1.x) + " " + num(i1.y) + " A" +
               num(ri) + " " + num(ri) + " 0 " + large + " 0 " + num(i0.x) + " " + num(i0.y) +
               " Z";
        } else {
          d += num(c.x) + " " + num(c.y) + " L" + num(o0.x) + " " + num(o0.y) + " A" + num(ro) +
               " " + num(ro) + " 0 " + large + " 1 " + num(o1.x) + " " + num(o1.y) + " Z";
        }
        out_ += "<path" + cls + " d=\"" + d + "\" fill=\"" + s.color.hex() + "\"/>\n";
      }
      out_ += "</g>\n";
      return;
    }
    if (const auto* bars = std::get_if<BarGlyph>(&item.glyph)) {
      out_ += "<g id=\"" + id + "\" class=\"glyph bars\">\n";
      for (const auto& b : bars->bars) {
        out_ += "<rect data-class=\"" + std::to_string(b.cls) + "\" x=\"" + num(b.x) +
                "\" y=\"" + num(b.y) + "\" width=\"" + num(b.width) + "\" height=\"" +
                num(b.height) + "\" fill=\"" + b.color.hex() + "\"/>\n";
      }
      out_ += "</g>\n";
      return;
    }
    const auto& cluster = std::get<PointCluster>(item.glyph);
    out_ += "<g id=\"" + id + "\" class=\"glyph points\">\n";
    for (const auto& d : cluster.discs) {
      out_ += "<circle data-class=\"" + std::to_string(d.cls) + "\" cx=\"" + num(d.center.x) +
              "\" cy=\"" + num(d.center.y) + "\" r=\"" + num(d.radius) + "\" fill=\"" +
              d.color.hex() + "\"/>\n";
    }
    out_ += "</g>\n";
  }

  static std::string ring(Point2 c, double r) {
    return "M" + num(c.x) + " " + num(c.y - r) + " A" + num(r) + " " + num(r) + " 0 1 1 " +
           num(c.x) + " " + num(c.y + r) + " A" + num(r) + " " + num(r) + " 0 1 1 " + num(c.x) +
           " " + num(c.y - r) + " Z";
  }

  void write_axes(const Panel& panel) {
    const auto& v = panel.viewport;
    const double bottom = v.y + v.height;
    out_ += "<g class=\"axes\" stroke=\"#333333\" stroke-width=\"1.000\">\n";
    out_ += "<rect x=\"" + num(v.x) + "\" y=\"" + num(v.y) + "\" width=\"" + num(v.width) +
            "\" height=\"" + num(v.height) + "\" fill=\"none\"/>\n";
    for (const auto& t : panel.axes.x) {
      out_ += "<line x1=\"" + num(t.position) + "\" y1=\"" + num(bottom) + "\" x2=\"" +
              num(t.position) + "\" y2=\"" + num(bottom + 5) + "\"/>\n";
    }
    for (const auto& t : panel.axes.y) {
      out_ += "<line x1=\"" + num(v.x - 5) + "\" y1=\"" + num(t.position) + "\" x2=\"" +
              num(v.x) + "\" y2=\"" + num(t.position) + "\"/>\n";
    }
    out_ += "</g>\n";
    out_ += "<g class=\"tick-labels\" fill=\"#333333\" " + std::string(kFont) + ">\n";
    for (const auto& t : panel.axes.x) {
      out_ += "<text x=\"" + num(t.position) + "\" y=\"" + num(bottom + 17) +
              "\" text-anchor=\"middle\">" + xml_escape(t.label) + "</text>\n";
    }
    for (const auto& t : panel.axes.y) {
      out_ += "<text x=\"" + num(v.x - 8) + "\" y=\"" + num(t.position + 4) +
              "\" text-anchor=\"end\">" + xml_escape(t.label) + "</text>\n";
    }
    if (!panel.axes.x_title.empty()) {
      out_ += "<text x=\"" + num(v.x + v.width / 2) + "\" y=\"" + num(bottom + 34) +
              "\" text-anchor=\"middle\">" + xml_escape(panel.axes.x_title) + "</text>\n";
    }
    if (!panel.axes.y_title.empty()) {
      const double x = v.x - 44;
      const double y = v.y + v.height / 2;
      out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"middle\" " +
              "transform=\"rotate(-90 " + num(x) + " " + num(y) + ")\">" +
              xml_escape(panel.axes.y_title) + "</text>\n";
    }
    out_ += "</g>\n";
  }

  void write_legend() {
    out_ += "<g id=\"legend\" " + std::string(kFont) + ">\n";
    for (const auto& e : scene_.legend) {
      out_ += "<g id=\"legend-class-" + std::to_string(e.cls) + "\" data-class=\"" +
              std::to_string(e.cls) + "\">";
      out_ += "<rect x=\"" + num(e.position.x) + "\" y=\"" + num(e.position.y) +
              "\" width=\"12.000\" height=\"12.000\" fill=\"" + e.color.hex() + "\"/>";
      out_ += "<text x=\"" + num(e.position.x + 18) + "\" y=\"" + num(e.position.y + 10) +
              "\" fill=\"#333333\">" + xml_escape(e.label) + "</text></g>\n";
    }
    out_ += "</g>\n";
  }

  const Scene& scene_;
  std::string out_;
};

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) throw Error(Errc::InvalidParameter, "non-finite coordinate");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 3);
  std::string s(buf, res.ptr);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        // Control characters are not allowed in XML 1.0 text.
        if (static_cast<unsigned char>(ch) >= 0x20 || ch == '\t' || ch == '\n' || ch == '\r') {
          out += ch;
        }
    }
  }
  return out;
}

std::string bin_element_id(const Scene& scene, int panel, BinIndex bin) {
  std::string id = "bin-" + std::to_string(bin);
  if (scene.panels.size() > 1) id = "panel-" + std::to_string(panel) + "-" + id;
  return id;
}

std::string render_svg(const Scene& scene) { return Writer(scene).run(); }

void render_svg(const Scene& scene, std::ostream& out) {
  const std::string doc = render_svg(scene);
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  out.flush();
  if (!out) throw Error(Errc::Io, "failed to write SVG output");
}

}  // namespace binplot
