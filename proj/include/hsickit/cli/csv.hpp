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

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hsickit/hsic.hpp"

namespace hsickit::cli {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, header row required, RFC 4180 quoting. Blank lines are
/// skipped and a leading UTF-8 byte-order mark is dropped. Throws InputFormat
/// on ragged rows or unterminated quotes.
CsvTable parse_csv(std::istream& in);

/// Builds a dataset from the named columns. Every selected cell must parse as
/// a finite number with '.' as decimal separator; empty, NA and NaN cells are
/// rejected as missing. Throws InputFormat.
Dataset dataset_from_table(const CsvTable& table, const std::vector<std::string>& x_columns,
                           const std::vector<std::string>& y_columns);

Dataset load_dataset(const std::string& path, const std::vector<std::string>& x_columns,
                     const std::vector<std::string>& y_columns);

/// Writes a dataset with header x1..xd,y1..yd (x,y for one-dimensional sides).
void write_csv(std::ostream& out, const Dataset& data);

}  // namespace hsickit::cli
