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

#include "wvjoint_cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "wvjoint/error.hpp"

namespace wvjoint::cli {

void SweepTable::add(std::vector<double> row) {
    if (row.size() != header.size()) {
        throw Error(ErrorCode::InvalidArgument, "row width " + std::to_string(row.size()) + " does not match header (" +
                                                    std::to_string(header.size()) + ")");
    }
    for (double v : row) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite value in sweep row");
        }
    }
    if (!rows.empty() && !(row.front() > rows.back().front())) {
        throw Error(ErrorCode::InvalidArgument, "sweep rows must have strictly increasing g");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    q += '"';
    return q;
}

void write_csv(std::ostream &out, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows) {
    const auto line = [&](const std::vector<std::string> &fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "," : "") << csv_field(fields[i]);
        }
        out << '\n';
    };
    line(header);
    for (const auto &r : rows) {
        line(r);
    }
}

void emit_csv(std::ostream &out, const SweepTable &table) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(table.rows.size());
    for (const auto &r : table.rows) {
        std::vector<std::string> f;
        f.reserve(r.size());
        for (double v : r) {
            f.push_back(format_number(v));
        }
        rows.push_back(std::move(f));
    }
    write_csv(out, table.header, rows);
}

void emit_csv(const SweepTable &table, const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    emit_csv(out, table);
    out.flush();
    if (!out) {
        throw Error(ErrorCode::Io, "write to '" + path + "' failed");
    }
}

}  // namespace wvjoint::cli
