#pragma once

#include <array>
#include <string>
#include <vector>

namespace binplot {

/// Analysis task. Odd numbers are bin-centric, even numbers class-centric.
struct Task {
  int number = 0;
  std::string name;
  bool bin_centric = true;
};

const std::vector<Task>& analysis_tasks();

enum class Support { None, Partial, Full };

struct DesignTaskRow {
  std::string design;
  std::array<Support, 16> support{};
  std::string note;
};

/// Which designs suit which tasks. Documentation only; the validator does not
/// consult it.
const std::vector<DesignTaskRow>& design_task_matrix();

/// Plain-text table for terminals.
std::string format_design_task_matrix();

}  // namespace binplot
