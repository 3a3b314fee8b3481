#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "binplot/aggregation.hpp"
#include "binplot/config.hpp"
#include "binplot/dataset.hpp"

namespace binplot {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::map<std::string, std::string>;

struct ServiceOptions {
  /// Datasets are snapshotted here as CSV and reloaded on start.
  std::optional<std::filesystem::path> persist_dir;
  unsigned threads = 1;
};

/// Transport-independent request handlers. Responses depend only on the
/// stored datasets and the request; the grid cache is transparent.
///
/// Thread-safe: uploads take the store exclusively, everything else shares it.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  /// Store a dataset and return its id ("ds-1", "ds-2", ...).
  std::string add_dataset(Dataset dataset);

  HttpResponse post_dataset(std::string_view csv, const QueryParams& params);
  HttpResponse get_summary(std::string_view id, const QueryParams& params);
  HttpResponse get_points(std::string_view id, const QueryParams& params);
  HttpResponse post_render(std::string_view body);
  HttpResponse post_scene(std::string_view body);
  HttpResponse post_validate(std::string_view body);
  HttpResponse get_designs() const;

  std::size_t cached_grids() const;
  void clear_cache();

 private:
  struct Entry {
    Dataset dataset;
    Domain domain;
    mutable std::mutex cache_mutex;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const BinSummaryGrid>> grids;
  };

  std::shared_ptr<const Entry> find(std::string_view id) const;
  std::shared_ptr<const BinSummaryGrid> grid(const Entry& e, ShapeKind shape, int bins_x) const;
  HttpResponse run_plot(std::string_view body, bool svg);
  void persist(const std::string& id, const Dataset& dataset) const;
  void load_persisted();

  ServiceOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>, std::less<>> datasets_;
  std::uint64_t next_id_ = 1;
};

/// Blocking HTTP/1.1 front end for a Service, CORS enabled.
class HttpServer {
 public:
  explicit HttpServer(Service& service, std::string cors_origin = "*");
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Bind; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serve until stop(). Call after bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace binplot
