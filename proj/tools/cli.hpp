#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "binplot/error.hpp"

namespace binplot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitUsage = 64;

int exit_code_for(Errc code) noexcept;

/// Entry point behind the binplot executable. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binplot::cli
