#include "binplot/service.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>

#include <httplib.h>
#include <json.hpp>

#include "binplot/csv.hpp"
#include "binplot/error.hpp"
#include "binplot/pipeline.hpp"
#include "binplot/scene_json.hpp"
#include "binplot/svg.hpp"
#include "binplot/tasks.hpp"

namespace binplot {

using nlohmann::json;

namespace {

HttpResponse json_response(int status, const json& body) {
  return {status, "application/json", body.dump()};
}

HttpResponse error_response(int status, std::string_view code, const std::string& message,
                            std::optional<std::size_t> line = std::nullopt) {
  json j{{"error", code}, {"message", message}};
  if (line) j["line"] = *line;
  return json_response(status, j);
}

HttpResponse error_response(int status, const Error& e) {
  return error_response(status, errc_name(e.code()), e.what(), e.line());
}

json violations_json(const std::vector<Violation>& vs) {
  json a = json::array();
  for (const auto& v : vs) {
    a.push_back({{"rule", v.rule}, {"message", v.message}, {"reason", v.reason}});
  }
  return a;
}

json domain_json(const Domain& d) {
  return {{"x_min", d.x_min}, {"x_max", d.x_max}, {"y_min", d.y_min}, {"y_max", d.y_max}};
}

std::optional<std::string> param(const QueryParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) return std::nullopt;
  return it->second;
}

int int_param(const QueryParams& p, const std::string& key, int fallback) {
  auto v = param(p, key);
  if (!v) return fallback;
  int out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw Error(Errc::ConfigError, "query parameter \"" + key + "\" must be an integer");
  }
  return out;
}

ColumnNames columns_from(const QueryParams& p) {
  ColumnNames c;
  if (auto v = param(p, "x")) c.x = *v;
  if (auto v = param(p, "y")) c.y = *v;
  if (auto v = param(p, "class")) c.cls = *v;
  return c;
}

std::optional<std::uint64_t> id_number(std::string_view id) {
  if (!id.starts_with("ds-")) return std::nullopt;
  id.remove_prefix(3);
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), n);
  if (ec != std::errc() || ptr != id.data() + id.size() || n == 0) return std::nullopt;
  return n;
}

template <class E, std::size_t N>
json names(const std::array<E, N>& values) {
  json a = json::array();
  for (E v : values) a.push_back(to_string(v));
  return a;
}

}  // namespace

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  if (options_.persist_dir) load_persisted();
}

std::string Service::add_dataset(Dataset dataset) {
  auto entry = std::make_shared<Entry>();
  entry->domain = dataset.bounding_domain(0.01);
  entry->dataset = std::move(dataset);
  std::unique_lock lock(mutex_);
  const std::string id = "ds-" + std::to_string(next_id_++);
  persist(id, entry->dataset);
  datasets_.emplace(id, std::move(entry));
  return id;
}

void Service::persist(const std::string& id, const Dataset& dataset) const {
  if (!options_.persist_dir) return;
  namespace fs = std::filesystem;
  fs::create_directories(*options_.persist_dir);
  const fs::path target = *options_.persist_dir / (id + ".csv");
  const fs::path tmp = *options_.persist_dir / (id + ".csv.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << write_csv(dataset);
    if (!out) throw Error(Errc::Io, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

void Service::load_persisted() {
  namespace fs = std::filesystem;
  if (!fs::exists(*options_.persist_dir)) return;
  std::vector<std::pair<std::uint64_t, fs::path>> files;
  for (const auto& e : fs::directory_iterator(*options_.persist_dir)) {
    if (e.path().extension() != ".csv") continue;
    if (auto n = id_number(e.path().stem().string())) files.emplace_back(*n, e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& [n, path] : files) {
    auto entry = std::make_shared<Entry>();
    entry->dataset = load_csv(path);
    entry->domain = entry->dataset.bounding_domain(0.01);
    datasets_.emplace("ds-" + std::to_string(n), std::move(entry));
    next_id_ = std::max(next_id_, n + 1);
  }
}

std::shared_ptr<const Service::Entry> Service::find(std::string_view id) const {
  std::shared_lock lock(mutex_);
  auto it = datasets_.find(id);
  if (it == datasets_.end()) return nullptr;
  return it->second;
}

std::shared_ptr<const BinSummaryGrid> Service::grid(const Entry& e, ShapeKind shape,
                                                    int bins_x) const {
  const auto key = std::make_pair(static_cast<int>(shape), bins_x);
  {
    std::lock_guard lock(e.cache_mutex);
    auto it = e.grids.find(key);
    if (it != e.grids.end()) return it->second;
  }
  AggregateOptions opts;
  opts.threads = options_.threads;
  auto g = std::make_shared<const BinSummaryGrid>(
      aggregate(BinLattice::build(e.domain, shape, bins_x), e.dataset, opts));
  std::lock_guard lock(e.cache_mutex);
  return e.grids.emplace(key, std::move(g)).first->second;
}

std::size_t Service::cached_grids() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& [id, e] : datasets_) {
    std::lock_guard l(e->cache_mutex);
    n += e->grids.size();
  }
  return n;
}

void Service::clear_cache() {
  std::shared_lock lock(mutex_);
  for (const auto& [id, e] : datasets_) {
    std::lock_guard l(e->cache_mutex);
    e->grids.clear();
  }
}

HttpResponse Service::post_dataset(std::string_view csv, const QueryParams& params) {
  try {
    Dataset ds = parse_csv(csv, columns_from(params));
    const Domain domain = ds.bounding_domain(0.01);
    json labels = ds.labels();
    const auto size = ds.size();
    const std::string id = add_dataset(std::move(ds));
    return json_response(200, {{"id", id},
                               {"size", size},
                               {"classes", labels},
                               {"domain", domain_json(domain)}});
  } catch (const Error& e) {
    return error_response(e.code() == Errc::Io ? 500 : 400, e);
  }
}

HttpResponse Service::get_summary(std::string_view id, const QueryParams& params) {
  const auto entry = find(id);
  if (!entry) return error_response(404, "not-found", "unknown dataset " + std::string(id));
  try {
    const ShapeKind shape = parse_shape(param(params, "shape").value_or("hex"));
    const int bins_x = int_param(params, "bins_x", 12);
    const auto mode = parse_normalization(param(params, "normalization").value_or("global"));
    const auto scale = parse_scale(param(params, "scale").value_or("linear"));
    if (bins_x < 1 || bins_x > 1000) {
      throw Error(Errc::ConfigError, "bins_x must be in [1, 1000]");
    }
    const auto g = grid(*entry, shape, bins_x);
    const auto intens = normalize(*g, mode, scale);
    const auto& lattice = g->lattice();
    json bins = json::array();
    for (BinIndex b = 0; b < g->bin_count(); ++b) {
      json poly = json::array();
      for (const auto& p : lattice.bin_polygon(b)) poly.push_back({p.x, p.y});
      const auto row = g->row(b);
      const auto irow = intens.row(b);
      bins.push_back({{"bin", b},
                      {"counts", std::vector<std::uint64_t>(row.begin(), row.end())},
                      {"total", g->total(b)},
                      {"intensities", std::vector<double>(irow.begin(), irow.end())},
                      {"polygon", poly}});
    }
    return json_response(200, {{"dataset", id},
                               {"shape", to_string(shape)},
                               {"bins_x", bins_x},
                               {"normalization", to_string(mode)},
                               {"scale", to_string(scale)},
                               {"domain", domain_json(entry->domain)},
                               {"classes", entry->dataset.labels()},
                               {"bin_count", g->bin_count()},
                               {"grand_total", g->grand_total()},
                               {"class_totals", g->class_totals()},
                               {"bins", bins}});
  } catch (const Error& e) {
    return error_response(400, e);
  }
}

HttpResponse Service::get_points(std::string_view id, const QueryParams& params) {
  const auto entry = find(id);
  if (!entry) return error_response(404, "not-found", "unknown dataset " + std::string(id));
  try {
    const auto& pts = entry->dataset.points();
    std::vector<std::size_t> selected;
    if (auto bin = param(params, "bin")) {
      const ShapeKind shape = parse_shape(param(params, "shape").value_or("hex"));
      const int bins_x = int_param(params, "bins_x", 12);
      const int b = int_param(params, "bin", 0);
      const auto lattice = BinLattice::build(entry->domain, shape, bins_x);
      if (b < 0 || static_cast<std::size_t>(b) >= lattice.bin_count()) {
        throw Error(Errc::ConfigError, "bin index out of range");
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (lattice.try_assign(pts[i].position()) == static_cast<BinIndex>(b)) selected.push_back(i);
      }
    } else {
      for (std::size_t i = 0; i < pts.size(); ++i) selected.push_back(i);
    }
    json out = json::array();
    for (auto i : selected) out.push_back({pts[i].x, pts[i].y, pts[i].cls});
    return json_response(200, {{"dataset", id},
                               {"count", selected.size()},
                               {"classes", entry->dataset.labels()},
                               {"points", out}});
  } catch (const Error& e) {
    return error_response(400, e);
  }
}

HttpResponse Service::run_plot(std::string_view body, bool svg) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(400, "config-error", std::string("request is not valid JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("dataset") || !req["dataset"].is_string()) {
    return error_response(400, "config-error", "request needs a \"dataset\" id");
  }
  const auto id = req["dataset"].get<std::string>();
  const auto entry = find(id);
  if (!entry) return error_response(404, "not-found", "unknown dataset " + id);
  try {
    const DesignConfig cfg = config_from_json(req.value("config", json::object()));
    PlotOptions opts;
    opts.threads = options_.threads;
    const auto result = plot(entry->dataset, cfg, opts);
    if (!result.ok()) {
      return json_response(422, {{"error", "validation"},
                                 {"violations", violations_json(result.violations)}});
    }
    if (svg) return {200, "image/svg+xml", render_svg(*result.scene)};
    return {200, "application/json", scene_to_json(*result.scene)};
  } catch (const Error& e) {
    return error_response(e.code() == Errc::OutOfDomain ? 422 : 400, e);
  }
}

HttpResponse Service::post_render(std::string_view body) { return run_plot(body, true); }

HttpResponse Service::post_scene(std::string_view body) { return run_plot(body, false); }

HttpResponse Service::post_validate(std::string_view body) {
  try {
    const json req = json::parse(body);
    if (!req.is_object()) throw Error(Errc::ConfigError, "request must be a JSON object");
    const DesignConfig cfg = config_from_json(req.value("config", json::object()));
    std::vector<Violation> violations;
    if (req.contains("dataset")) {
      if (!req["dataset"].is_string()) throw Error(Errc::ConfigError, "dataset must be an id");
      const auto id = req["dataset"].get<std::string>();
      const auto entry = find(id);
      if (!entry) return error_response(404, "not-found", "unknown dataset " + id);
      violations = validate(cfg.design, apply_class_order(entry->dataset, cfg));
    } else {
      violations = legality_violations(cfg.design);
    }
    return json_response(200, {{"valid", violations.empty()},
                               {"violations", violations_json(violations)}});
  } catch (const json::parse_error& e) {
    return error_response(400, "config-error", std::string("request is not valid JSON: ") + e.what());
  } catch (const Error& e) {
    return error_response(400, e);
  }
}

HttpResponse Service::get_designs() const {
  json tasks = json::array();
  for (const auto& t : analysis_tasks()) {
    tasks.push_back({{"number", t.number}, {"name", t.name},
                     {"scope", t.bin_centric ? "bin" : "class"}});
  }
  json matrix = json::array();
  for (const auto& r : design_task_matrix()) {
    json support = json::array();
    for (auto s : r.support) {
      support.push_back(s == Support::Full ? "full" : s == Support::Partial ? "partial" : "none");
    }
    matrix.push_back({{"design", r.design}, {"support", support}, {"note", r.note}});
  }
  json vocab{
      {"shape", names(std::array{ShapeKind::Rect, ShapeKind::Hex, ShapeKind::Tri})},
      {"normalization", names(std::array{NormalizationMode::BinInternal,
                                         NormalizationMode::ClassInternal,
                                         NormalizationMode::Global})},
      {"scale", names(std::array{ScaleKind::Linear, ScaleKind::Log})},
      {"composition", names(std::array{Composition::Superimposed, Composition::Juxtaposed})},
      {"background", names(std::array{Background::None, Background::Luminance,
                                      Background::Majority, Background::Blend, Background::Weave,
                                      Background::AttributeBlocks, Background::Hatching})},
      {"glyph", names(std::array{GlyphKind::None, GlyphKind::Pie, GlyphKind::Donut,
                                 GlyphKind::AreaPie, GlyphKind::GroupedBar,
                                 GlyphKind::StackedBar, GlyphKind::Points})}};
  json rules_list = {rules::kPieNormalization, rules::kJuxtaposedNormalization, rules::kWeave,
                     rules::kFullBinFill,      rules::kBoundaryless,            rules::kParameter};
  return json_response(200, {{"tasks", tasks},
                             {"matrix", matrix},
                             {"vocabulary", vocab},
                             {"rules", rules_list},
                             {"defaults", design_to_json(DesignSpec{})}});
}

struct HttpServer::Impl {
  Service& service;
  std::string origin;
  httplib::Server server;
  int port = -1;
};

namespace {

QueryParams query(const httplib::Request& req) {
  QueryParams p;
  for (const auto& [k, v] : req.params) p.emplace(k, v);
  return p;
}

void reply(httplib::Response& res, const HttpResponse& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

HttpServer::HttpServer(Service& service, std::string cors_origin)
    : impl_(new Impl{service, std::move(cors_origin), {}, -1}) {
  auto& s = impl_->server;
  Service* svc = &service;
  s.set_default_headers({{"Access-Control-Allow-Origin", impl_->origin},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                         {"Access-Control-Allow-Headers", "Content-Type"}});
  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  s.Post("/datasets", [svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc->post_dataset(req.body, query(req)));
  });
  s.Get(R"(/datasets/([^/]+)/summary)", [svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc->get_summary(req.matches[1].str(), query(req)));
  });
  s.Get(R"(/datasets/([^/]+)/points)", [svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc->get_points(req.matches[1].str(), query(req)));
  });
  s.Post("/render", [svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc->post_render(req.body));
  });
  s.Post("/scene", [svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc->post_scene(req.body));
  });
  s.Post("/validate", [svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc->post_validate(req.body));
  });
  s.Get("/designs", [svc](const httplib::Request&, httplib::Response& res) {
    reply(res, svc->get_designs());
  });
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    reply(res, error_response(500, "internal", message));
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
  } else {
    impl_->port = impl_->server.bind_to_port(host, port) ? port : -1;
  }
  return impl_->port;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace binplot
