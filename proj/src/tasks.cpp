#include "binplot/tasks.hpp"

#include <algorithm>
#include <initializer_list>

namespace binplot {

namespace {

DesignTaskRow row(std::string design, std::initializer_list<int> full,
                  std::initializer_list<int> partial = {}, std::string note = {}) {
  DesignTaskRow r;
  r.design = std::move(design);
  for (int t : full) r.support[static_cast<std::size_t>(t - 1)] = Support::Full;
  for (int t : partial) r.support[static_cast<std::size_t>(t - 1)] = Support::Partial;
  r.note = std::move(note);
  return r;
}

}  // namespace

const std::vector<Task>& analysis_tasks() {
  static const std::vector<Task> tasks = [] {
    const char* names[] = {"explore neighborhood",      "search motif",
                           "explore data",              "characterize distribution",
                           "identify anomalies",        "identify correlation",
                           "numerosity comparison",     "understand distances"};
    std::vector<Task> out;
    int n = 1;
    for (const char* name : names) {
      out.push_back({n++, name, true});
      out.push_back({n++, name, false});
    }
    return out;
  }();
  return tasks;
}

const std::vector<DesignTaskRow>& design_task_matrix() {
  static const std::vector<DesignTaskRow> rows = {
      row("juxtaposed", {4, 6, 10}, {2, 8, 14}),
      row("superimposed", {1, 3, 5, 7, 9, 11, 13, 15, 2, 8, 14}),
      row("luminance", {1, 3, 5, 7, 9, 11, 13}, {}, "quantized steps help 5, 9, 13"),
      row("majority (bin-internal, global)", {5, 7, 9}),
      row("majority (class-internal)", {6, 8, 10}),
      row("blend", {1, 8}),
      row("weave", {1, 3, 5, 7, 9, 11, 13, 2}),
      row("attribute blocks", {6, 8, 10, 12, 16}),
      row("hatching", {6, 8, 10}),
      row("pie / donut", {3, 5, 7, 9, 11}, {13}),
      row("area pie", {3, 5, 7, 9, 11, 13}),
      row("bars", {14}),
      row("points", {12, 15, 16}),
  };
  return rows;
}

std::string format_design_task_matrix() {
  std::size_t width = 6;
  for (const auto& r : design_task_matrix()) width = std::max(width, r.design.size());
  std::string out = "Tasks (odd: bin-centric, even: class-centric)\n";
  for (const auto& t : analysis_tasks()) {
    out += "  " + std::to_string(t.number) + (t.number < 10 ? "  " : " ") + t.name + " (" +
           (t.bin_centric ? "bins" : "classes") + ")\n";
  }
  out += "\n" + std::string(width, ' ');
  for (int t = 1; t <= 16; ++t) out += (t < 10 ? "  " : " ") + std::to_string(t);
  out += "\n";
  for (const auto& r : design_task_matrix()) {
    out += r.design + std::string(width - r.design.size(), ' ');
    for (auto s : r.support) {
      out += s == Support::Full ? "  +" : s == Support::Partial ? "  o" : "  .";
    }
    if (!r.note.empty()) out += "  " + r.note;
    out += "\n";
  }
  out += "\n+ supported, o partially supported, . not suited\n";
  return out;
}

}  // namespace binplot
