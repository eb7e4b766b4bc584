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

#ifndef WVJOINT_VERIFY_HPP
#define WVJOINT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

/// Cross-engine verification suite shared by the CLI and the acceptance test.
/// Every check aggregates a sweep into one measured value (usually a maximum
/// error) compared against a tolerance.
namespace wvjoint::verify {

enum class Status { Pass, Fail, KnownDiscrepancy, Skipped };

std::string_view status_name(Status s) noexcept;

struct Check {
    std::string group;
    std::string name;
    Status status = Status::Fail;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct Options {
    bool fast = false;  // skip the grid oracle
    int grid_n = 1024;
    int random_pairs = 50;
    std::uint64_t seed = 20260419;
};

/// Grid-vs-analytic tolerance: 1e-6 at n ≥ 512, relaxed to 1e-5 below.
double grid_tolerance(int n) noexcept;

/// |a − b| / max(|a|, |b|, floor).
double rel_err(double a, double b, double floor) noexcept;

std::vector<Check> triple_engine(const Options &opt);
std::vector<Check> closed_forms(const Options &opt);
std::vector<Check> resch_steinberg(const Options &opt);
std::vector<Check> third_order(const Options &opt);
std::vector<Check> hardy_table();
std::vector<Check> hardy_continuous();
std::vector<Check> hardy_discrete();
std::vector<Check> qubit_engine(const Options &opt);
std::vector<Check> sigma_xz_adjudication();

struct Report {
    std::vector<Check> checks;

    /// False if any check failed; known discrepancies and skips are allowed.
    bool ok() const noexcept;
};

Report run_all(const Options &opt);

}  // namespace wvjoint::verify

#endif
