#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "binplot/error.hpp"
#include "binplot/fixtures.hpp"
#include "binplot/layout.hpp"
#include "binplot/scene_json.hpp"
#include "binplot/svg.hpp"
#include "oracles.hpp"

using namespace binplot;

namespace {

Scene scene_for(DesignSpec s, const Dataset& ds) {
  auto v = validate_design(s, ds);
  REQUIRE(v.ok());
  return compose(*v.design, ds, ds.bounding_domain());
}

Dataset one_point() {
  Dataset ds;
  ds.add(0.5, 0.5, ds.intern("only"));
  return ds;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1.000");
  CHECK(format_number(-0.0) == "0.000");
  CHECK(format_number(-0.0004) == "0.000");
  CHECK(format_number(2.0 / 3.0) == "0.667");
  CHECK(format_number(-12.3456) == "-12.346");
  CHECK(format_number(1e6) == "1000000.000");
  CHECK(xml_escape("a<b&\"c'>") == "a&lt;b&amp;&quot;c&apos;&gt;");
  CHECK(xml_escape(std::string("x\x01y")) == "xy");
}

TEST_CASE("single rect bin with a solid fill") {
  DesignSpec s;
  s.shape = ShapeKind::Rect;
  s.bins_x = 1;
  s.background = Background::Luminance;
  const auto ds = one_point();
  const Domain dom{0, 1, 0, 1};
  auto v = validate_design(s, ds);
  REQUIRE(v.ok());
  const auto scene = compose(*v.design, ds, dom);
  const auto svg = render_svg(scene);
  CHECK(oracle::count_substr(svg, "<polygon") == 1);
  CHECK(oracle::count_substr(svg, "<polygon id=\"bin-0\"") == 1);
  CHECK(oracle::count_substr(svg, "id=\"bin-0-boundary\"") == 1);
  CHECK(oracle::count_substr(svg, "id=\"legend-class-0\"") == 1);
  std::string why;
  CHECK_MESSAGE(oracle::well_formed_xml(svg, &why), why);
}

TEST_CASE("empty scene is well formed") {
  Scene scene;
  scene.width = 100;
  scene.height = 50;
  const auto svg = render_svg(scene);
  CHECK(oracle::well_formed_xml(svg));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("width=\"100.000\"") != std::string::npos);
}

TEST_CASE("every design renders well-formed and deterministic svg") {
  const auto ds = gaussian_clusters(600, 4, 9);
  const Background bgs[] = {Background::None,  Background::Luminance,       Background::Majority,
                            Background::Blend, Background::Weave,           Background::AttributeBlocks,
                            Background::Hatching};
  const GlyphKind glyphs[] = {GlyphKind::None, GlyphKind::Pie, GlyphKind::Donut, GlyphKind::AreaPie,
                              GlyphKind::GroupedBar, GlyphKind::StackedBar, GlyphKind::Points};
  for (auto shape : {ShapeKind::Rect, ShapeKind::Hex, ShapeKind::Tri}) {
    for (auto bg : bgs) {
      for (auto gl : glyphs) {
        for (auto comp : {Composition::Superimposed, Composition::Juxtaposed}) {
          DesignSpec s;
          s.shape = shape;
          s.bins_x = 4;
          s.background = bg;
          s.glyph = gl;
          s.composition = comp;
          s.boundaries = bg != Background::None || gl == GlyphKind::None;
          s.normalization = comp == Composition::Juxtaposed ? NormalizationMode::Global
                                                            : NormalizationMode::BinInternal;
          auto v = validate_design(s, ds);
          if (!v.ok()) continue;
          const auto scene = compose(*v.design, ds, ds.bounding_domain());
          const auto a = render_svg(scene);
          const auto b = render_svg(compose(*v.design, ds, ds.bounding_domain()));
          CHECK(a == b);
          std::string why;
          CHECK_MESSAGE(oracle::well_formed_xml(a, &why), why);
          std::ostringstream os;
          render_svg(scene, os);
          CHECK(os.str() == a);
        }
      }
    }
  }
}

TEST_CASE("element ids") {
  const auto ds = gaussian_clusters(300, 2, 4);
  DesignSpec s;
  s.bins_x = 3;
  s.shape = ShapeKind::Rect;
  s.composition = Composition::Juxtaposed;
  s.background = Background::Weave;
  const auto scene = scene_for(s, ds);
  CHECK(bin_element_id(scene, 1, 4) == "panel-1-bin-4");
  const auto svg = render_svg(scene);
  CHECK(oracle::count_substr(svg, "id=\"panel-0\"") == 1);
  CHECK(oracle::count_substr(svg, "id=\"panel-1\"") == 1);
  CHECK(oracle::count_substr(svg, "id=\"panel-1-bin-8-boundary\"") == 1);
  CHECK(oracle::count_substr(svg, "-boundary\"") == 18);
  CHECK(oracle::count_substr(svg, "<clipPath") == oracle::count_substr(svg, "class=\"fill weave\""));

  s.composition = Composition::Superimposed;
  s.background = Background::Luminance;
  s.glyph = GlyphKind::Pie;
  s.normalization = NormalizationMode::BinInternal;
  const auto single = scene_for(s, ds);
  CHECK(bin_element_id(single, 0, 4) == "bin-4");
  const auto svg1 = render_svg(single);
  std::size_t non_empty = 0;
  for (const auto& b : single.panels[0].bins) non_empty += b.total > 0;
  CHECK(oracle::count_substr(svg1, "-glyph\"") == non_empty);
  CHECK(oracle::count_substr(svg1, "id=\"legend-class-1\"") == 1);
}

TEST_CASE("weave svg fragment count") {
  const auto ds = gaussian_clusters(500, 3, 2);
  DesignSpec s;
  s.bins_x = 4;
  s.shape = ShapeKind::Rect;
  s.background = Background::Weave;
  s.normalization = NormalizationMode::BinInternal;
  s.fragments = 4;
  const auto scene = scene_for(s, ds);
  const auto svg = render_svg(scene);
  const auto weaves = oracle::count_substr(svg, "class=\"fill weave\"");
  std::size_t non_empty = 0;
  for (const auto& b : scene.panels[0].bins) non_empty += b.total > 0;
  CHECK(weaves == non_empty);
}

TEST_CASE("labels are escaped") {
  Dataset ds;
  ds.add(1, 1, ds.intern("a<b & \"c\""));
  ds.add(2, 2, ds.intern("d"));
  DesignSpec s;
  s.composition = Composition::Juxtaposed;
  const auto svg = render_svg(scene_for(s, ds));
  CHECK(svg.find("a&lt;b &amp; &quot;c&quot;") != std::string::npos);
  CHECK(oracle::well_formed_xml(svg));
}

TEST_CASE("scene json round trip") {
  const auto ds = gaussian_clusters(800, 3, 6);
  const Background bgs[] = {Background::Luminance, Background::Weave, Background::AttributeBlocks,
                            Background::Hatching, Background::Majority};
  for (auto bg : bgs) {
    for (auto gl : {GlyphKind::None, GlyphKind::Pie, GlyphKind::StackedBar, GlyphKind::Points}) {
      DesignSpec s;
      s.background = bg;
      s.glyph = gl;
      s.normalization = NormalizationMode::BinInternal;
      s.bins_x = 5;
      s.seed = 3;
      auto v = validate_design(s, ds);
      if (!v.ok()) continue;
      const auto scene = compose(*v.design, ds, ds.bounding_domain());
      const auto text = scene_to_json(scene);
      const auto back = scene_from_json(text);
      CHECK(back == scene);
      CHECK(scene_to_json(back) == text);
      CHECK(render_svg(back) == render_svg(scene));
    }
  }
}

TEST_CASE("scene json bin records") {
  const auto ds = gaussian_clusters(800, 3, 6);
  DesignSpec s;
  s.shape = ShapeKind::Rect;
  s.bins_x = 10;
  const auto scene = scene_for(s, ds);
  const auto j = nlohmann::json::parse(scene_to_json(scene));
  REQUIRE(j["panels"].size() == 1);
  CHECK(j["panels"][0]["bins"].size() == 100);
  CHECK(j["legend"].size() == 3);
  CHECK(j["spec"]["shape"] == "rect");
  std::uint64_t total = 0;
  for (const auto& b : j["panels"][0]["bins"]) total += b["total"].get<std::uint64_t>();
  CHECK(total == ds.size());
  CHECK_THROWS_AS(scene_from_json("{\"panels\": 3}"), Error);
  CHECK_THROWS_AS(scene_from_json("not json"), Error);
}
