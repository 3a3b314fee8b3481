#include <doctest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "binplot/csv.hpp"
#include "binplot/fixtures.hpp"
#include "binplot/service.hpp"

using namespace binplot;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCsv = write_csv(gaussian_clusters(400, 3, 8));

std::string request(const std::string& id, const json& config) {
  return json{{"dataset", id}, {"config", config}}.dump();
}

}  // namespace

TEST_CASE("dataset upload and ids") {
  Service svc;
  auto r = svc.post_dataset(kCsv, {});
  CHECK(r.status == 200);
  CHECK(r.content_type == "application/json");
  auto j = json::parse(r.body);
  CHECK(j["id"] == "ds-1");
  CHECK(j["size"] == 400);
  CHECK(j["classes"].size() == 3);
  CHECK(j["domain"].contains("x_min"));
  CHECK(json::parse(svc.post_dataset(kCsv, {}).body)["id"] == "ds-2");

  r = svc.post_dataset("x,y\n1,2\n", {});
  CHECK(r.status == 400);
  CHECK(json::parse(r.body)["error"] == "missing-column");
  r = svc.post_dataset("x,y,class\n1,2,a\nq,2,a\n", {});
  CHECK(r.status == 400);
  j = json::parse(r.body);
  CHECK(j["error"] == "parse-error");
  CHECK(j["line"] == 3);
  // A failed upload does not use up an id.
  CHECK(json::parse(svc.post_dataset(kCsv, {}).body)["id"] == "ds-3");

  r = svc.post_dataset("lon,lat,kind\n1,2,a\n", {{"x", "lon"}, {"y", "lat"}, {"class", "kind"}});
  CHECK(r.status == 200);
}

TEST_CASE("summary endpoint") {
  Service svc;
  const auto id = json::parse(svc.post_dataset(kCsv, {}).body)["id"].get<std::string>();
  const QueryParams q{{"shape", "rect"}, {"bins_x", "10"}, {"normalization", "class-internal"}};
  auto r = svc.get_summary(id, q);
  REQUIRE(r.status == 200);
  const auto j = json::parse(r.body);
  CHECK(j["bin_count"] == 100);
  CHECK(j["bins"].size() == 100);
  CHECK(j["grand_total"] == 400);
  std::uint64_t total = 0;
  for (const auto& b : j["bins"]) {
    total += b["total"].get<std::uint64_t>();
    CHECK(b["counts"].size() == 3);
    CHECK(b["intensities"].size() == 3);
    CHECK(b["polygon"].size() == 4);
    for (const auto& v : b["intensities"]) {
      CHECK(v.get<double>() >= 0.0);
      CHECK(v.get<double>() <= 1.0);
    }
  }
  CHECK(total == 400);

  // Cache transparency.
  CHECK(svc.cached_grids() == 1);
  CHECK(svc.get_summary(id, q).body == r.body);
  CHECK(svc.cached_grids() == 1);
  svc.clear_cache();
  CHECK(svc.cached_grids() == 0);
  CHECK(svc.get_summary(id, q).body == r.body);

  CHECK(svc.get_summary("ds-99", q).status == 404);
  CHECK(svc.get_summary(id, {{"shape", "octagon"}}).status == 400);
  CHECK(svc.get_summary(id, {{"bins_x", "ten"}}).status == 400);
  CHECK(svc.get_summary(id, {{"bins_x", "0"}}).status == 400);
}

TEST_CASE("points endpoint") {
  Service svc;
  const auto id = svc.add_dataset(gaussian_clusters(300, 2, 5));
  auto all = json::parse(svc.get_points(id, {}).body);
  CHECK(all["count"] == 300);
  std::size_t sum = 0;
  for (int b = 0; b < 16; ++b) {
    const auto r = svc.get_points(id, {{"shape", "rect"}, {"bins_x", "4"}, {"bin", std::to_string(b)}});
    REQUIRE(r.status == 200);
    sum += json::parse(r.body)["count"].get<std::size_t>();
  }
  CHECK(sum == 300);
  CHECK(svc.get_points(id, {{"shape", "rect"}, {"bins_x", "4"}, {"bin", "16"}}).status == 400);
  CHECK(svc.get_points("nope", {}).status == 404);
}

TEST_CASE("render, scene and validate endpoints") {
  Service svc;
  const auto id = svc.add_dataset(gaussian_clusters(500, 3, 1));
  const json good{{"background", "weave"}, {"normalization", "global"}, {"seed", 4}};
  auto r = svc.post_render(request(id, good));
  CHECK(r.status == 200);
  CHECK(r.content_type == "image/svg+xml");
  CHECK(r.body.find("<svg") != std::string::npos);
  CHECK(svc.post_render(request(id, good)).body == r.body);

  auto s = svc.post_scene(request(id, good));
  CHECK(s.status == 200);
  CHECK(json::parse(s.body).contains("panels"));

  const json jux{{"composition", "juxtaposed"}, {"normalization", "bin-internal"}};
  r = svc.post_render(request(id, jux));
  CHECK(r.status == 422);
  auto j = json::parse(r.body);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["rule"] == "juxtaposed-requires-class-internal-or-global");
  CHECK_FALSE(j["violations"][0]["reason"].get<std::string>().empty());

  CHECK(svc.post_render(request("ds-42", good)).status == 404);
  CHECK(svc.post_scene(request("ds-42", good)).status == 404);
  CHECK(svc.post_render("{").status == 400);
  CHECK(svc.post_render(R"({"config": {}})").status == 400);
  CHECK(svc.post_render(request(id, json{{"shape", "circle"}})).status == 400);
  CHECK(svc.post_render(request(id, json{{"class_order", {"c0"}}})).status == 400);

  auto v = json::parse(svc.post_validate(json{{"config", jux}}.dump()).body);
  CHECK(v["valid"] == false);
  v = json::parse(svc.post_validate(json{{"config", good}, {"dataset", id}}.dump()).body);
  CHECK(v["valid"] == true);

  const auto d = json::parse(svc.get_designs().body);
  CHECK(d["tasks"].size() == 16);
  CHECK(d["rules"].size() >= 5);
  CHECK(d["vocabulary"]["glyph"].size() == 7);
  CHECK(d["defaults"]["shape"] == "hex");
}

TEST_CASE("concurrent requests give identical answers") {
  Service svc;
  const auto id = svc.add_dataset(gaussian_clusters(2000, 4, 2));
  const std::string body = request(id, json{{"background", "majority"}, {"bins_x", 9}});
  const auto expected = svc.post_render(body).body;
  svc.clear_cache();
  std::vector<std::string> got(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < got.size(); ++t) {
    pool.emplace_back([&, t] {
      if (t % 2) svc.post_dataset(kCsv, {});
      got[t] = svc.post_render(body).body;
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& g : got) CHECK(g == expected);
}

TEST_CASE("persisted datasets reload") {
  const auto dir = fs::temp_directory_path() / ("binplot-persist-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ServiceOptions opts;
  opts.persist_dir = dir;
  std::string first_summary;
  {
    Service svc(opts);
    CHECK(json::parse(svc.post_dataset(kCsv, {}).body)["id"] == "ds-1");
    first_summary = svc.get_summary("ds-1", {}).body;
    CHECK(fs::exists(dir / "ds-1.csv"));
  }
  {
    Service svc(opts);
    CHECK(svc.get_summary("ds-1", {}).body == first_summary);
    CHECK(json::parse(svc.post_dataset(kCsv, {}).body)["id"] == "ds-2");
  }
  fs::remove_all(dir);
}

TEST_CASE("http server round trip") {
  Service svc;
  HttpServer server(svc, "http://localhost:5173");
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread th([&] { server.listen(); });
  httplib::Client cli("127.0.0.1", port);
  cli.set_connection_timeout(5);
  for (int i = 0; i < 100; ++i) {
    if (cli.Get("/designs")) break;
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }

  auto up = cli.Post("/datasets?class=class", kCsv, "text/csv");
  REQUIRE(up);
  CHECK(up->status == 200);
  CHECK(up->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
  const auto id = json::parse(up->body)["id"].get<std::string>();

  auto sum = cli.Get("/datasets/" + id + "/summary?shape=rect&bins_x=10");
  REQUIRE(sum);
  CHECK(sum->status == 200);
  CHECK(json::parse(sum->body)["bins"].size() == 100);
  CHECK(sum->body == svc.get_summary(id, {{"shape", "rect"}, {"bins_x", "10"}}).body);

  auto missing = cli.Get("/datasets/ds-77/summary");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto pts = cli.Get("/datasets/" + id + "/points");
  REQUIRE(pts);
  CHECK(json::parse(pts->body)["count"] == 400);

  auto svg = cli.Post("/render", request(id, json{{"background", "blend"}}), "application/json");
  REQUIRE(svg);
  CHECK(svg->status == 200);
  CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");

  auto bad = cli.Post("/scene", request(id, json{{"glyph", "pie"}}), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 422);

  auto pre = cli.Options("/render");
  REQUIRE(pre);
  CHECK(pre->status == 204);
  CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

  auto val = cli.Post("/validate", json{{"config", json::object()}}.dump(), "application/json");
  REQUIRE(val);
  CHECK(json::parse(val->body)["valid"] == true);

  server.stop();
  th.join();
}
