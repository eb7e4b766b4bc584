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

#ifndef WVJOINT_CLI_CONFIG_HPP
#define WVJOINT_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wvjoint/hardy.hpp"
#include "wvjoint/hilbert.hpp"

namespace wvjoint::cli {

enum class Command { WeakValue, Moments, Sweep, Hardy, Verify };

std::string_view command_name(Command c) noexcept;

/// Which exact engine backs `moments` and `sweep` on the continuous meter.
enum class Engine { Gaussian, Expm, Grid };

struct GRange {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
    bool log = false;

    std::vector<double> samples() const;
};

/// Parsed and type-checked configuration. Fields a command needs but the
/// file omits stay empty; `require_for` reports them.
struct RunConfig {
    std::optional<Command> command;
    hardy::MeterKind meter = hardy::MeterKind::Continuous;
    double sigma = 1.0;
    std::optional<double> g;
    std::optional<GRange> g_range;
    Engine engine = Engine::Gaussian;
    int grid_n = 1024;
    double grid_extent = 0.0;  // 0 selects the default extent

    std::optional<hilbert::Ket> pre;
    std::optional<hilbert::Ket> post;
    std::optional<hilbert::Operator> a;
    std::optional<hilbert::Operator> b;

    // Qubit meter only.
    std::optional<hilbert::Ket> meter_init;
    std::optional<hilbert::Operator> sigma1;
    std::optional<hilbert::Operator> sigma2;

    bool fast = false;
    int random_pairs = 50;
    std::uint64_t seed = 20260419;

    std::string output_path;
};

/// Parses the YAML config grammar:
///
///   command: sweep            # optional, must match the subcommand
///   meter: continuous         # or qubit
///   sigma: 1.0
///   g: 0.5                    # single coupling
///   g_range: [1e-3, 5, 200, log]
///   engine: gaussian          # gaussian | expm | grid
///   grid: {n: 512, extent: 40}
///   pre:  [[0.6, 0], [0, 0.8]]        # entries: number or [re, im]
///   post: [1, 0]
///   a: sigma_x                # builtin, proj(1 0), [factors...], matrix rows, {proj: ket}
///   b: [identity, sigma_z]    # list of names is a tensor product
///   meter_init: [1, 0, 0, 0]
///   sigma1: sigma_x
///   sigma2: sigma_x
///   verify: {fast: false, random_pairs: 50, seed: 20260419}
///   output: out.csv
///
/// Inside flow lists write proj(1 0) or quote it: a comma would split the list.
/// Unknown keys are rejected. Throws Error(ConfigParse) with a line number
/// for malformed YAML and Error(ConfigValidation) naming the key otherwise.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file. Throws Error(Io) when it cannot be read.
RunConfig load_config(const std::string &path);

/// Parses one observable spelling, e.g. "sigma_x" or "proj(1, 0)".
hilbert::Operator builtin_observable(std::string_view name);

/// Throws Error(ConfigValidation) if `cfg` lacks what `c` needs or names a
/// different command.
void require_for(const RunConfig &cfg, Command c);

}  // namespace wvjoint::cli

#endif
