#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "droughtcap/error.hpp"

namespace droughtcap::csv {

struct Row {
  long line{};  // 1-based line number in the source file
  std::vector<std::string> fields;
};

struct Table {
  std::string path;
  std::vector<std::string> header;
  std::vector<Row> rows;
};

/// Splits one CSV record. Double quotes delimit fields that contain commas;
/// "" inside a quoted field is a literal quote.
inline std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string{s.substr(b, e - b + 1)};
}

inline Table parse(std::istream& in, std::string path) {
  Table table;
  table.path = std::move(path);
  std::string line;
  long line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_record(line);
    for (auto& f : fields) f = trim(f);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
    } else {
      table.rows.push_back({line_no, std::move(fields)});
    }
  }
  if (!have_header) throw Error(ErrorKind::Parse, "empty file", {.file = table.path});
  return table;
}

inline Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open file", {.file = path});
  return parse(in, path);
}

/// Requires the header to equal `expected` exactly, in order.
inline void require_columns(const Table& table, const std::vector<std::string_view>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i >= table.header.size() || table.header[i] != expected[i]) {
      throw Error(ErrorKind::MissingColumn, "expected column '" + std::string{expected[i]} + "' at position " +
                                                std::to_string(i + 1),
                  {.file = table.path, .row = 1, .field = std::string{expected[i]}});
    }
  }
  if (table.header.size() != expected.size()) {
    throw Error(ErrorKind::Parse, "unexpected extra columns", {.file = table.path, .row = 1});
  }
}

/// Parses a finite real number; nullopt for anything else (including blank).
inline std::optional<double> to_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

/// Quotes a field if it contains a comma or quote.
inline std::string escape(std::string_view field) {
  if (field.find_first_of(",\"") == std::string_view::npos) return std::string{field};
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace droughtcap::csv
