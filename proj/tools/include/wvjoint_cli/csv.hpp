// Copyright 2026 The wvjoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WVJOINT_CLI_CSV_HPP
#define WVJOINT_CLI_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wvjoint::cli {

/// Rows keyed by a strictly increasing first column (g).
struct SweepTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Appends a row. Throws InvalidArgument on width mismatch, a
    /// non-increasing g or a non-finite value.
    void add(std::vector<double> row);
};

/// 17 significant digits, '.' decimal point, independent of locale.
std::string format_number(double v);

/// RFC-4180 quoting: fields containing a comma, quote or newline are quoted.
std::string csv_field(const std::string &s);

void write_csv(std::ostream &out, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows);

void emit_csv(std::ostream &out, const SweepTable &table);

/// Writes to `path`. Throws Error(Io) naming the path on failure.
void emit_csv(const SweepTable &table, const std::string &path);

}  // namespace wvjoint::cli

#endif
