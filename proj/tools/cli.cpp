#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "binplot/config.hpp"
#include "binplot/csv.hpp"
#include "binplot/fixtures.hpp"
#include "binplot/pipeline.hpp"
#include "binplot/scene_json.hpp"
#include "binplot/service.hpp"
#include "binplot/svg.hpp"
#include "binplot/tasks.hpp"

namespace binplot::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Write next to the target and rename, so a failed run leaves no partial file.
void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::Io, "cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(Errc::Io, "cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::Io, "cannot write " + path.string());
  }
}

void print_violations(const std::vector<Violation>& vs, std::ostream& err) {
  for (const auto& v : vs) {
    err << "violation [" << v.rule << "]: " << v.message << "\n  reason: " << v.reason << "\n";
  }
}

struct RenderArgs {
  std::string data;
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> serve;
  unsigned threads = 1;
  std::string scene_json;
};

struct ServeArgs {
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string persist;
  unsigned threads = 1;
};

struct GenerateArgs {
  std::string kind = "demo";
  std::string out;
  std::size_t n = 10000;
  std::size_t classes = 3;
  std::uint64_t seed = 1;
};

struct ValidateArgs {
  std::string config;
  std::string data;
};

int serve_forever(Service& service, const std::string& host, int port, std::ostream& out) {
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) throw Error(Errc::Io, "cannot listen on " + host + ":" + std::to_string(port));
  out << "serving on http://" << host << ":" << bound << std::endl;
  return server.listen() ? kExitOk : kExitIo;
}

int do_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  const DesignConfig cfg = parse_config(read_file(a.config));
  const Dataset ds = load_csv(a.data, cfg.columns);
  PlotOptions opts;
  opts.threads = a.threads;
  opts.seed = a.seed;
  const auto result = plot(ds, cfg, opts);
  if (!result.ok()) {
    print_violations(result.violations, err);
    return kExitValidation;
  }
  const std::string svg = render_svg(*result.scene);
  std::string scene;
  if (!a.scene_json.empty()) scene = scene_to_json(*result.scene, 2) + "\n";
  write_atomic(a.out, svg);
  if (!a.scene_json.empty()) write_atomic(a.scene_json, scene);
  if (a.serve) {
    ServiceOptions so;
    so.threads = a.threads;
    Service service(so);
    out << "dataset " << service.add_dataset(apply_class_order(ds, cfg)) << " loaded\n";
    return serve_forever(service, "127.0.0.1", *a.serve, out);
  }
  return kExitOk;
}

int do_generate(const GenerateArgs& a) {
  Dataset ds;
  if (a.kind == "demo") {
    ds = demo_fixture(a.seed);
  } else if (a.kind == "clusters") {
    ds = gaussian_clusters(a.n, a.classes, a.seed);
  } else {
    ds = tree_cover_fixture(a.n / 2, a.seed);
  }
  write_atomic(a.out, write_csv(ds));
  return kExitOk;
}

int do_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const DesignConfig cfg = parse_config(read_file(a.config));
  std::vector<Violation> vs;
  if (a.data.empty()) {
    vs = legality_violations(cfg.design);
  } else {
    vs = validate(cfg.design, apply_class_order(load_csv(a.data, cfg.columns), cfg));
  }
  if (!vs.empty()) {
    print_violations(vs, err);
    return kExitValidation;
  }
  out << "valid\n";
  return kExitOk;
}

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::Io:
      return kExitIo;
    case Errc::ConfigError:
    case Errc::SpecNotValidated:
      return kExitValidation;
    default:
      return kExitData;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binned scatterplot renderer", "binplot"};
  bool list_designs = false;
  app.add_flag("--list-designs", list_designs, "Print the design x task matrix");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "Render a CSV dataset to SVG");
  render->add_option("--data", ra.data, "Input CSV")->required();
  render->add_option("--config", ra.config, "Design config JSON")->required();
  render->add_option("--out", ra.out, "Output SVG path")->required();
  render->add_option("--seed", ra.seed, "Override the config seed");
  render->add_option("--serve", ra.serve, "Serve the dataset on PORT after rendering");
  render->add_option("--threads", ra.threads, "Aggregation threads")->check(CLI::Range(1u, 256u));
  render->add_option("--scene-json", ra.scene_json, "Also write the scene as JSON");

  ServeArgs sa;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", sa.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", sa.host, "Bind address");
  serve->add_option("--persist", sa.persist, "Snapshot datasets to this directory");
  serve->add_option("--threads", sa.threads, "Aggregation threads")->check(CLI::Range(1u, 256u));

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
  generate->add_option("--kind", ga.kind, "demo, clusters or tree-cover")
      ->check(CLI::IsMember({"demo", "clusters", "tree-cover"}));
  generate->add_option("--out", ga.out, "Output CSV path")->required();
  generate->add_option("--n", ga.n, "Point count");
  generate->add_option("--classes", ga.classes, "Class count for clusters")
      ->check(CLI::Range(std::size_t{1}, kMaxClasses));
  generate->add_option("--seed", ga.seed, "Random seed");

  ValidateArgs va;
  auto* check = app.add_subcommand("validate", "Check a design config");
  check->add_option("--config", va.config, "Design config JSON")->required();
  check->add_option("--data", va.data, "Optional CSV for dataset-dependent checks");

  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (list_designs) {
      out << format_design_task_matrix();
      return kExitOk;
    }
    if (*render) return do_render(ra, out, err);
    if (*generate) return do_generate(ga);
    if (*check) return do_validate(va, out, err);
    if (*serve) {
      ServiceOptions so;
      if (!sa.persist.empty()) so.persist_dir = sa.persist;
      so.threads = sa.threads;
      Service service(so);
      return serve_forever(service, sa.host, sa.port, out);
    }
    err << "usage error: expected a subcommand or --list-designs\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error [io-error]: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace binplot::cli
