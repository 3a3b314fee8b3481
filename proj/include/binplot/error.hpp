#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binplot {

enum class Errc {
  InvalidDomain,
  InvalidParameter,
  OutOfDomain,
  InvalidIndex,
  InvalidIntensity,
  UnsupportedNormalization,
  GridTooSmall,
  TooManyClasses,
  EmptyBin,
  MissingColumn,
  ParseError,
  SpecNotValidated,
  ConfigError,
  Io,
};

/// Stable kebab-case name used in CLI messages and service error payloads.
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(Errc code, const std::string& message, std::size_t line)
      : std::runtime_error(message), code_(code), line_(line) {}

  Error(Errc code, const std::string& message, std::vector<std::size_t> indices)
      : std::runtime_error(message), code_(code), indices_(std::move(indices)) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  Errc code_;
  std::optional<std::size_t> line_;
  std::vector<std::size_t> indices_;
};

}  // namespace binplot
