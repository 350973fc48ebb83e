// Copyright 2026 The RiskMiner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! File helpers: whole-file reads, atomic writes and a small CSV dialect
//! (comma separated, RFC 4180 quoting, LF line endings).

#ifndef RISKMINER_IO_HPP
#define RISKMINER_IO_HPP

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "riskminer/error.hpp"

namespace riskminer::io {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to a sibling temp file and renames it over `path`, so readers
/// never observe a partially written output.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path() && !path.parent_path().empty()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw RuntimeError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw RuntimeError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw RuntimeError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

/// Splits text into lines on LF, dropping a trailing CR from each line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// ---------------------------------------------------------------------------
// CSV

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// Parses a full CSV document. Quoted fields may contain commas, doubled
/// quotes and newlines. Empty lines are skipped.
inline std::vector<CsvRow> parse_csv(std::string_view text, const std::string& source = "<csv>") {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  row.line = 1;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    if (!(row.fields.empty() && !field_started && field.empty())) {
      end_field();
      rows.push_back(std::move(row));
    }
    row = CsvRow{};
    row.line = line + 1;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ValidationError(source, line, "stray quote inside unquoted field");
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        field_started = true;
        end_field();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field_started = true;
        field.push_back(c);
    }
  }
  if (in_quotes) throw ValidationError(source, line, "unterminated quoted field");
  if (field_started || !field.empty() || !row.fields.empty()) {
    end_field();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string csv_escape(std::string_view field) {
  bool quote = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!quote) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

/// Accumulates a CSV document in memory; `str()` is written atomically by
/// the caller.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header) { row(header); }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_.push_back(',');
      out_ += csv_escape(fields[i]);
    }
    out_.push_back('\n');
  }

  const std::string& str() const noexcept { return out_; }

 private:
  std::string out_;
};

/// Shortest decimal text that parses back to the same double.
inline std::string format_real(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

/// Fixed 17-significant-digit rendering used where bytes must be stable.
inline std::string format_real17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace riskminer::io

#endif  // RISKMINER_IO_HPP
