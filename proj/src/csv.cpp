#include "binplot/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "binplot/error.hpp"

namespace binplot {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& field, std::string_view column, std::size_t line) {
  const std::string t = trim(field);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ": column \"" + std::string(column) +
                    "\" is not a finite number: \"" + field + "\"",
                line);
  }
  return v;
}

std::string quote(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<CsvRecord> parse_csv_records(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<CsvRecord> out;
  CsvRecord rec;
  std::string field;
  std::size_t line = 1;
  std::size_t i = 0;
  bool in_quotes = false;
  bool quoted = false;
  bool any = false;
  rec.line = 1;
  auto end_field = [&] {
    rec.fields.push_back(std::move(field));
    field.clear();
    quoted = false;
  };
  auto end_record = [&] {
    end_field();
    // A blank line is not a record.
    if (!(rec.fields.size() == 1 && rec.fields[0].empty() && !any)) out.push_back(std::move(rec));
    rec = CsvRecord{};
    any = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        in_quotes = false;
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"' && field.empty() && !quoted) {
      in_quotes = true;
      quoted = true;
      any = true;
    } else if (c == '"') {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line) + ": stray quote inside an unquoted field",
                  line);
    } else if (c == ',') {
      any = true;
      end_field();
    } else if (c == '\r' || c == '\n') {
      end_record();
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++line;
      rec.line = line;
    } else {
      if (quoted) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line) + ": text after a closing quote", line);
      }
      field += c;
      any = true;
    }
    ++i;
  }
  if (in_quotes) {
    throw Error(Errc::ParseError, "line " + std::to_string(rec.line) + ": unterminated quote",
                rec.line);
  }
  if (any || !field.empty()) end_record();
  return out;
}

Dataset parse_csv(std::string_view text, const ColumnNames& columns) {
  const auto records = parse_csv_records(text);
  if (records.empty()) throw Error(Errc::ParseError, "line 1: missing header row", 1);
  const auto& header = records.front().fields;
  auto find = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (trim(header[i]) == name) return i;
    }
    throw Error(Errc::MissingColumn, "header has no column \"" + name + "\"");
  };
  const std::size_t xi = find(columns.x);
  const std::size_t yi = find(columns.y);
  const std::size_t ci = find(columns.cls);

  Dataset ds;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(rec.line) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(rec.fields.size()),
                  rec.line);
    }
    const double x = parse_number(rec.fields[xi], columns.x, rec.line);
    const double y = parse_number(rec.fields[yi], columns.y, rec.line);
    const std::string label = trim(rec.fields[ci]);
    if (label.empty()) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(rec.line) + ": empty class label", rec.line);
    }
    ClassId cls = 0;
    try {
      cls = ds.intern(label);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(rec.line) + ": " + e.what(), rec.line);
    }
    ds.add(x, y, cls);
  }
  return ds;
}

Dataset load_csv(const std::filesystem::path& path, const ColumnNames& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(Errc::Io, "cannot read " + path.string());
  return parse_csv(buf.str(), columns);
}

std::string write_csv(const Dataset& dataset, const ColumnNames& columns) {
  std::string out = quote(columns.x) + "," + quote(columns.y) + "," + quote(columns.cls) + "\n";
  for (const auto& p : dataset.points()) {
    out += number(p.x) + "," + number(p.y) + "," + quote(dataset.labels()[p.cls]) + "\n";
  }
  return out;
}

}  // namespace binplot
