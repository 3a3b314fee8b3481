#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "binplot/aggregation.hpp"
#include "binplot/config.hpp"
#include "binplot/csv.hpp"
#include "binplot/error.hpp"
#include "binplot/fixtures.hpp"
#include "binplot/pipeline.hpp"
#include "binplot/scene_json.hpp"
#include "binplot/svg.hpp"
#include "binplot/tessellation.hpp"

namespace py = pybind11;
using namespace binplot;

namespace {

// Configs may be given as a JSON string or as a dict.
std::string config_text(const py::object& config) {
  if (py::isinstance<py::str>(config)) return config.cast<std::string>();
  return py::module_::import("json").attr("dumps")(config).cast<std::string>();
}

PlotResult run_plot(const Dataset& ds, const std::string& config,
                    std::optional<std::uint64_t> seed, unsigned threads) {
  PlotOptions opts;
  opts.seed = seed;
  opts.threads = threads;
  return plot(ds, parse_config(config), opts);
}

py::list violations_list(const std::vector<Violation>& vs) {
  py::list out;
  for (const auto& v : vs) {
    py::dict d;
    d["rule"] = v.rule;
    d["message"] = v.message;
    d["reason"] = v.reason;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_binplot, m) {
  m.doc() = "Binned multi-class scatterplot aggregation and rendering";

  static py::exception<Error> error(m, "BinplotError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(std::string(errc_name(e.code())) + ": " + e.what());
      exc.attr("code") = std::string(errc_name(e.code()));
      if (e.line()) exc.attr("line") = *e.line();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<>())
      .def_static(
          "from_csv",
          [](const std::string& text, const std::string& x, const std::string& y,
             const std::string& cls) { return parse_csv(text, ColumnNames{x, y, cls}); },
          py::arg("text"), py::arg("x") = "x", py::arg("y") = "y", py::arg("cls") = "class")
      .def("add",
           [](Dataset& d, double x, double y, const std::string& label) {
             d.add(x, y, d.intern(label));
           })
      .def_property_readonly("size", &Dataset::size)
      .def_property_readonly("labels", &Dataset::labels)
      .def("points",
           [](const Dataset& d) {
             std::vector<std::tuple<double, double, int>> out;
             for (const auto& p : d.points()) out.emplace_back(p.x, p.y, p.cls);
             return out;
           })
      .def("bounding_domain",
           [](const Dataset& d) {
             const auto b = d.bounding_domain();
             return std::make_tuple(b.x_min, b.x_max, b.y_min, b.y_max);
           })
      .def("to_csv", [](const Dataset& d) { return write_csv(d); })
      .def("__len__", &Dataset::size);

  py::class_<BinLattice>(m, "Lattice")
      .def_property_readonly("bin_count", &BinLattice::bin_count)
      .def_property_readonly("bins_x", &BinLattice::bins_x)
      .def("assign", [](const BinLattice& l, double x, double y) { return l.assign({x, y}); })
      .def("bin_polygon",
           [](const BinLattice& l, BinIndex b) {
             std::vector<std::pair<double, double>> out;
             for (const auto& p : l.bin_polygon(b)) out.emplace_back(p.x, p.y);
             return out;
           })
      .def("neighbors", &BinLattice::neighbors);

  m.def(
      "build_lattice",
      [](std::tuple<double, double, double, double> domain, const std::string& shape,
         int bins_x) {
        auto [x0, x1, y0, y1] = domain;
        return BinLattice::build(Domain{x0, x1, y0, y1}, parse_shape(shape), bins_x);
      },
      py::arg("domain"), py::arg("shape"), py::arg("bins_x"));

  m.def(
      "aggregate",
      [](const BinLattice& lattice, const Dataset& ds, unsigned threads) {
        AggregateOptions opts;
        opts.threads = threads;
        const auto g = aggregate(lattice, ds, opts);
        std::vector<std::vector<std::uint64_t>> out;
        for (BinIndex b = 0; b < g.bin_count(); ++b) {
          const auto row = g.row(b);
          out.emplace_back(row.begin(), row.end());
        }
        return out;
      },
      py::arg("lattice"), py::arg("dataset"), py::arg("threads") = 1);

  m.def(
      "normalize",
      [](const BinLattice& lattice, const Dataset& ds, const std::string& mode,
         const std::string& scale) {
        const auto g = aggregate(lattice, ds);
        const auto n = normalize(g, parse_normalization(mode), parse_scale(scale));
        std::vector<std::vector<double>> out;
        for (BinIndex b = 0; b < n.bin_count; ++b) {
          const auto row = n.row(b);
          out.emplace_back(row.begin(), row.end());
        }
        return out;
      },
      py::arg("lattice"), py::arg("dataset"), py::arg("mode") = "global",
      py::arg("scale") = "linear");

  m.def(
      "largest_remainder",
      [](const std::vector<std::uint64_t>& weights, std::uint64_t seats) {
        return largest_remainder(weights, seats);
      },
      py::arg("weights"), py::arg("seats"));

  m.def(
      "validate",
      [](const py::object& config, std::optional<Dataset> ds) {
        const auto cfg = parse_config(config_text(config));
        return violations_list(ds ? validate(cfg.design, apply_class_order(*ds, cfg))
                                  : legality_violations(cfg.design));
      },
      py::arg("config"), py::arg("dataset") = py::none());

  m.def(
      "render_svg",
      [](const Dataset& ds, const py::object& config, std::optional<std::uint64_t> seed,
         unsigned threads) -> py::object {
        const auto r = run_plot(ds, config_text(config), seed, threads);
        if (!r.ok()) throw py::value_error(py::str(violations_list(r.violations)));
        return py::str(render_svg(*r.scene));
      },
      py::arg("dataset"), py::arg("config"), py::arg("seed") = py::none(),
      py::arg("threads") = 1);

  m.def(
      "scene_json",
      [](const Dataset& ds, const py::object& config, std::optional<std::uint64_t> seed,
         unsigned threads) -> py::object {
        const auto r = run_plot(ds, config_text(config), seed, threads);
        if (!r.ok()) throw py::value_error(py::str(violations_list(r.violations)));
        return py::str(scene_to_json(*r.scene));
      },
      py::arg("dataset"), py::arg("config"), py::arg("seed") = py::none(),
      py::arg("threads") = 1);

  m.def("demo_dataset", &demo_fixture, py::arg("seed") = 42);
  m.def("cluster_dataset", &gaussian_clusters, py::arg("n"), py::arg("classes"),
        py::arg("seed"));
}
