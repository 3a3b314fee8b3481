#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "binplot/config.hpp"
#include "binplot/dataset.hpp"

namespace binplot {

/// Split CSV text into records. Quoted fields may contain commas, doubled
/// quotes and line breaks. Each record carries the 1-based line it starts on.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRecord> parse_csv_records(std::string_view text);

/// Header row required. Class labels get ids in first-appearance order.
/// Throws Error{MissingColumn}, Error{ParseError} with the offending line, or
/// Error{TooManyClasses}.
Dataset parse_csv(std::string_view text, const ColumnNames& columns = {});

/// As parse_csv; unreadable files are Error{Io}.
Dataset load_csv(const std::filesystem::path& path, const ColumnNames& columns = {});

/// Round-trip text for a dataset: header from `columns`, then one row per
/// point with shortest round-trip numbers.
std::string write_csv(const Dataset& dataset, const ColumnNames& columns = {});

}  // namespace binplot
