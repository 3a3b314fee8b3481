#include "binplot/scene_json.hpp"

#include "binplot/config.hpp"
#include "binplot/error.hpp"

namespace binplot {

using nlohmann::json;

namespace {

json pt(Point2 p) { return json::array({p.x, p.y}); }
Point2 pt(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json box(const Box& b) {
  return {{"x_min", b.x_min}, {"y_min", b.y_min}, {"x_max", b.x_max}, {"y_max", b.y_max}};
}
Box box(const json& j) {
  return {j.at("x_min").get<double>(), j.at("y_min").get<double>(), j.at("x_max").get<double>(),
          j.at("y_max").get<double>()};
}

json colors(const std::vector<Rgb>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(c.hex());
  return a;
}
std::vector<Rgb> colors(const json& j) {
  std::vector<Rgb> out;
  for (const auto& c : j) out.push_back(Rgb::from_hex(c.get<std::string>()));
  return out;
}
Rgb color(const json& j) { return Rgb::from_hex(j.get<std::string>()); }

json fill_json(const BinFill& fill) {
  if (const auto* s = std::get_if<SolidColor>(&fill)) {
    return {{"type", "solid"}, {"color", s->color.hex()}};
  }
  if (const auto* g = std::get_if<FragmentGrid>(&fill)) {
    return {{"type", "weave"}, {"side", g->side}, {"classes", g->classes},
            {"colors", colors(g->colors)}};
  }
  if (const auto* g = std::get_if<SubBlockGrid>(&fill)) {
    return {{"type", "blocks"}, {"rows", g->rows}, {"cols", g->cols}, {"classes", g->classes},
            {"colors", colors(g->colors)}};
  }
  const auto& st = std::get<StrokeSet>(fill);
  json layers = json::array();
  for (const auto& l : st.layers) {
    layers.push_back({{"class", l.cls}, {"angle", l.angle}, {"spacing", l.spacing},
                      {"color", l.color.hex()}, {"order", l.order}});
  }
  return {{"type", "hatch"}, {"stroke_width", st.stroke_width}, {"layers", layers}};
}

BinFill fill_from(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "solid") return SolidColor{color(j.at("color"))};
  if (type == "weave") {
    return FragmentGrid{j.at("side").get<int>(), j.at("classes").get<std::vector<int>>(),
                        colors(j.at("colors"))};
  }
  if (type == "blocks") {
    return SubBlockGrid{j.at("rows").get<int>(), j.at("cols").get<int>(),
                        j.at("classes").get<std::vector<int>>(), colors(j.at("colors"))};
  }
  if (type == "hatch") {
    StrokeSet st;
    st.stroke_width = j.at("stroke_width").get<double>();
    for (const auto& l : j.at("layers")) {
      st.layers.push_back({l.at("class").get<ClassId>(), l.at("angle").get<double>(),
                           l.at("spacing").get<double>(), color(l.at("color")),
                           l.at("order").get<int>()});
    }
    return st;
  }
  throw Error(Errc::ParseError, "unknown fill type \"" + type + "\"");
}

json glyph_json(const GlyphGeometry& g) {
  if (const auto* p = std::get_if<PieGlyph>(&g)) {
    json slices = json::array();
    for (const auto& s : p->slices) {
      slices.push_back(
          {{"class", s.cls}, {"start", s.start}, {"end", s.end}, {"color", s.color.hex()}});
    }
    return {{"type", "pie"}, {"center", pt(p->center)}, {"outer_radius", p->outer_radius},
            {"inner_radius", p->inner_radius}, {"slices", slices}};
  }
  if (const auto* b = std::get_if<BarGlyph>(&g)) {
    json bars = json::array();
    for (const auto& r : b->bars) {
      bars.push_back({{"class", r.cls}, {"x", r.x}, {"y", r.y}, {"width", r.width},
                      {"height", r.height}, {"color", r.color.hex()}});
    }
    return {{"type", "bars"},
            {"variant", b->variant == BarVariant::Grouped ? "grouped" : "stacked"},
            {"baseline", b->baseline},
            {"bars", bars}};
  }
  const auto& c = std::get<PointCluster>(g);
  json discs = json::array();
  for (const auto& d : c.discs) {
    discs.push_back({{"class", d.cls}, {"center", pt(d.center)}, {"radius", d.radius},
                     {"color", d.color.hex()}});
  }
  return {{"type", "points"}, {"discs", discs}};
}

GlyphGeometry glyph_from(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "pie") {
    PieGlyph p;
    p.center = pt(j.at("center"));
    p.outer_radius = j.at("outer_radius").get<double>();
    p.inner_radius = j.at("inner_radius").get<double>();
    for (const auto& s : j.at("slices")) {
      p.slices.push_back({s.at("class").get<ClassId>(), s.at("start").get<double>(),
                          s.at("end").get<double>(), color(s.at("color"))});
    }
    return p;
  }
  if (type == "bars") {
    BarGlyph b;
    const auto variant = j.at("variant").get<std::string>();
    if (variant != "grouped" && variant != "stacked") {
      throw Error(Errc::ParseError, "unknown bar variant \"" + variant + "\"");
    }
    b.variant = variant == "grouped" ? BarVariant::Grouped : BarVariant::Stacked;
    b.baseline = j.at("baseline").get<double>();
    for (const auto& r : j.at("bars")) {
      b.bars.push_back({r.at("class").get<ClassId>(), r.at("x").get<double>(),
                        r.at("y").get<double>(), r.at("width").get<double>(),
                        r.at("height").get<double>(), color(r.at("color"))});
    }
    return b;
  }
  if (type == "points") {
    PointCluster c;
    for (const auto& d : j.at("discs")) {
      c.discs.push_back({d.at("class").get<ClassId>(), pt(d.at("center")),
                         d.at("radius").get<double>(), color(d.at("color"))});
    }
    return c;
  }
  throw Error(Errc::ParseError, "unknown glyph type \"" + type + "\"");
}

json ticks_json(const std::vector<Tick>& ticks) {
  json a = json::array();
  for (const auto& t : ticks) {
    a.push_back({{"value", t.value}, {"position", t.position}, {"label", t.label}});
  }
  return a;
}
std::vector<Tick> ticks_from(const json& j) {
  std::vector<Tick> out;
  for (const auto& t : j) {
    out.push_back({t.at("value").get<double>(), t.at("position").get<double>(),
                   t.at("label").get<std::string>()});
  }
  return out;
}

json panel_json(const Panel& p) {
  json bins = json::array();
  for (const auto& b : p.bins) {
    json outline = json::array();
    for (const auto& v : b.outline) outline.push_back(pt(v));
    bins.push_back(
        {{"bin", b.bin}, {"outline", outline}, {"counts", b.counts}, {"total", b.total}});
  }
  json display = json::array();
  for (const auto& item : p.display) {
    if (const auto* f = std::get_if<FillItem>(&item)) {
      json strokes = json::array();
      for (const auto& layer : f->strokes) {
        json segs = json::array();
        for (const auto& s : layer) segs.push_back({s.a.x, s.a.y, s.b.x, s.b.y});
        strokes.push_back(segs);
      }
      display.push_back({{"kind", "fill"}, {"bin", f->bin}, {"fill", fill_json(f->fill)},
                         {"area", box(f->area)}, {"strokes", strokes}});
    } else if (const auto* b = std::get_if<BoundaryItem>(&item)) {
      display.push_back({{"kind", "boundary"}, {"bin", b->bin}});
    } else {
      const auto& g = std::get<GlyphItem>(item);
      display.push_back({{"kind", "glyph"}, {"bin", g.bin}, {"glyph", glyph_json(g.glyph)}});
    }
  }
  json j;
  j["index"] = p.index;
  j["class"] = p.class_filter ? json(*p.class_filter) : json(nullptr);
  j["title"] = p.title;
  j["viewport"] = {{"x", p.viewport.x}, {"y", p.viewport.y}, {"width", p.viewport.width},
                   {"height", p.viewport.height}};
  j["domain"] = {{"x_min", p.domain.x_min}, {"x_max", p.domain.x_max},
                 {"y_min", p.domain.y_min}, {"y_max", p.domain.y_max}};
  j["shape"] = to_string(p.shape);
  j["bins_x"] = p.bins_x;
  j["axes"] = {{"x", ticks_json(p.axes.x)}, {"y", ticks_json(p.axes.y)},
               {"x_title", p.axes.x_title}, {"y_title", p.axes.y_title}};
  j["bins"] = bins;
  j["display"] = display;
  return j;
}

Panel panel_from(const json& j) {
  Panel p;
  p.index = j.at("index").get<int>();
  if (!j.at("class").is_null()) p.class_filter = j.at("class").get<ClassId>();
  p.title = j.at("title").get<std::string>();
  const auto& v = j.at("viewport");
  p.viewport = {v.at("x").get<double>(), v.at("y").get<double>(), v.at("width").get<double>(),
                v.at("height").get<double>()};
  const auto& d = j.at("domain");
  p.domain = {d.at("x_min").get<double>(), d.at("x_max").get<double>(),
              d.at("y_min").get<double>(), d.at("y_max").get<double>()};
  p.shape = parse_shape(j.at("shape").get<std::string>());
  p.bins_x = j.at("bins_x").get<int>();
  const auto& a = j.at("axes");
  p.axes = {ticks_from(a.at("x")), ticks_from(a.at("y")), a.at("x_title").get<std::string>(),
            a.at("y_title").get<std::string>()};
  for (const auto& b : j.at("bins")) {
    BinRecord r;
    r.bin = b.at("bin").get<BinIndex>();
    for (const auto& q : b.at("outline")) r.outline.push_back(pt(q));
    r.counts = b.at("counts").get<std::vector<std::uint64_t>>();
    r.total = b.at("total").get<std::uint64_t>();
    p.bins.push_back(std::move(r));
  }
  for (const auto& item : j.at("display")) {
    const auto kind = item.at("kind").get<std::string>();
    const auto bin = item.at("bin").get<BinIndex>();
    if (kind == "fill") {
      FillItem f;
      f.bin = bin;
      f.fill = fill_from(item.at("fill"));
      f.area = box(item.at("area"));
      for (const auto& layer : item.at("strokes")) {
        std::vector<Segment> segs;
        for (const auto& s : layer) {
          segs.push_back({{s.at(0).get<double>(), s.at(1).get<double>()},
                          {s.at(2).get<double>(), s.at(3).get<double>()}});
        }
        f.strokes.push_back(std::move(segs));
      }
      p.display.emplace_back(std::move(f));
    } else if (kind == "boundary") {
      p.display.emplace_back(BoundaryItem{bin});
    } else if (kind == "glyph") {
      p.display.emplace_back(GlyphItem{bin, glyph_from(item.at("glyph"))});
    } else {
      throw Error(Errc::ParseError, "unknown display item kind \"" + kind + "\"");
    }
  }
  return p;
}

}  // namespace

json scene_to_json_value(const Scene& scene) {
  json legend = json::array();
  for (const auto& e : scene.legend) {
    legend.push_back({{"class", e.cls}, {"label", e.label}, {"color", e.color.hex()},
                      {"position", pt(e.position)}});
  }
  json panels = json::array();
  for (const auto& p : scene.panels) panels.push_back(panel_json(p));
  return {{"width", scene.width}, {"height", scene.height}, {"spec", design_to_json(scene.spec)},
          {"legend", legend},     {"panels", panels}};
}

Scene scene_from_json_value(const json& j) {
  try {
    Scene s;
    s.width = j.at("width").get<double>();
    s.height = j.at("height").get<double>();
    s.spec = design_from_json(j.at("spec"));
    for (const auto& e : j.at("legend")) {
      s.legend.push_back({e.at("class").get<ClassId>(), e.at("label").get<std::string>(),
                          color(e.at("color")), pt(e.at("position"))});
    }
    for (const auto& p : j.at("panels")) s.panels.push_back(panel_from(p));
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("scene document: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ParseError, std::string("scene document: ") + e.what());
  }
}

std::string scene_to_json(const Scene& scene, int indent) {
  return scene_to_json_value(scene).dump(indent);
}

Scene scene_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("scene document: ") + e.what());
  }
  return scene_from_json_value(j);
}

}  // namespace binplot
