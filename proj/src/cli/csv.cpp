// Copyright 2026 The hsickit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hsickit/cli/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hsickit/error.hpp"

namespace hsickit::cli {
namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(Errc::InputFormat, what); }

// Splits one logical record starting at `pos`; quoted fields may span lines.
std::vector<std::string> read_record(const std::string& text, std::size_t& pos, std::size_t& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  const std::size_t start_line = line;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          field += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      ++line;
      break;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) {
    format_error("unterminated quoted field starting on line " + std::to_string(start_line));
  }
  fields.push_back(std::move(field));
  return fields;
}

bool blank(const std::vector<std::string>& record) {
  return record.size() == 1 &&
         std::all_of(record[0].begin(), record[0].end(), [](unsigned char c) { return std::isspace(c); });
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t column_index(const CsvTable& table, const std::string& name) {
  const auto first = std::find(table.header.begin(), table.header.end(), name);
  if (first == table.header.end()) format_error("unknown column '" + name + "'");
  if (std::find(first + 1, table.header.end(), name) != table.header.end()) {
    format_error("column name '" + name + "' appears more than once in the header");
  }
  return static_cast<std::size_t>(first - table.header.begin());
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& column) {
  const std::string cell = trim(raw);
  std::string lowered = cell;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::ostringstream where;
  where << "row " << row + 1 << ", column '" << column << "'";
  if (cell.empty() || lowered == "na" || lowered == "nan" || lowered == "null") {
    format_error("missing value at " + where.str());
  }
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    format_error("non-numeric value '" + cell + "' at " + where.str());
  }
  return value;
}

PointSet extract(const CsvTable& table, const std::vector<std::string>& columns, const char* side) {
  if (columns.empty()) format_error(std::string("no ") + side + " columns selected");
  std::vector<std::size_t> index;
  for (const auto& name : columns) index.push_back(column_index(table, name));
  const auto n = static_cast<Eigen::Index>(table.rows.size());
  PointSet points(n, static_cast<Eigen::Index>(columns.size()));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < index.size(); ++c) {
      points(r, static_cast<Eigen::Index>(c)) =
          parse_cell(table.rows[static_cast<std::size_t>(r)][index[c]], static_cast<std::size_t>(r),
                     columns[c]);
    }
  }
  return points;
}

}  // namespace

CsvTable parse_csv(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);

  CsvTable table;
  std::size_t pos = 0, line = 1;
  while (pos < text.size()) {
    const std::size_t record_line = line;
    auto record = read_record(text, pos, line);
    if (blank(record)) continue;
    if (table.header.empty()) {
      for (auto& name : record) name = trim(name);
      table.header = std::move(record);
      continue;
    }
    if (record.size() != table.header.size()) {
      std::ostringstream msg;
      msg << "line " << record_line << " has " << record.size() << " fields, header has "
          << table.header.size();
      format_error(msg.str());
    }
    table.rows.push_back(std::move(record));
  }
  if (table.header.empty()) format_error("CSV input is empty (a header row is required)");
  return table;
}

Dataset dataset_from_table(const CsvTable& table, const std::vector<std::string>& x_columns,
                           const std::vector<std::string>& y_columns) {
  if (table.rows.empty()) format_error("CSV input has a header but no data rows");
  return {extract(table, x_columns, "x"), extract(table, y_columns, "y")};
}

Dataset load_dataset(const std::string& path, const std::vector<std::string>& x_columns,
                     const std::vector<std::string>& y_columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) format_error("cannot open '" + path + "'");
  return dataset_from_table(parse_csv(in), x_columns, y_columns);
}

void write_csv(std::ostream& out, const Dataset& data) {
  const auto header = [&](char side, Eigen::Index dims) {
    for (Eigen::Index d = 0; d < dims; ++d) {
      if (side == 'y' || d > 0) out << ',';
      out << side;
      if (dims > 1) out << d + 1;
    }
  };
  header('x', data.x().cols());
  header('y', data.y().cols());
  out << '\n';

  char buf[32];
  const auto put = [&](double v) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
  };
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    for (Eigen::Index d = 0; d < data.x().cols(); ++d) {
      if (d > 0) out << ',';
      put(data.x()(i, d));
    }
    for (Eigen::Index d = 0; d < data.y().cols(); ++d) {
      out << ',';
      put(data.y()(i, d));
    }
    out << '\n';
  }
}

}  // namespace hsickit::cli
