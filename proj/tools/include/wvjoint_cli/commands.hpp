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

#ifndef WVJOINT_CLI_COMMANDS_HPP
#define WVJOINT_CLI_COMMANDS_HPP

#include <ostream>

#include "wvjoint/verify.hpp"
#include "wvjoint_cli/config.hpp"
#include "wvjoint_cli/csv.hpp"

namespace wvjoint::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Points whose evaluation hits a vanishing norm or a non-finite value are
/// dropped and logged; more than 1% dropped raises Error(DegenerateNorm).
inline constexpr double kMaxDroppedFraction = 0.01;

/// quantity,re,im rows for A_w, B_w, (AB)_w (when b is given), the
/// overlap and the post-selection probability.
void run_weakvalue(const RunConfig &cfg, std::ostream &out);

/// One row of pointer displacements at cfg.g.
SweepTable run_moments(const RunConfig &cfg, std::ostream &log);

/// Pointer displacements over cfg.g_range. Continuous meter columns:
/// g,x,y,xy,x_py,x2,px_py,w_norm. Qubit meter: g,s1,s2,s12,w_norm.
SweepTable run_sweep(const RunConfig &cfg, std::ostream &log);

/// g,P1..P4,P1_cf..P4_cf. Without g_range: 200 log-spaced g/σ in
/// [1e-3, 5] (continuous) or g_k = πk/201, k = 1..200 (qubit).
SweepTable run_hardy(const RunConfig &cfg, std::ostream &log);

verify::Report run_verify(const RunConfig &cfg);

/// group,check,status,measured,tolerance,detail
void emit_report(std::ostream &out, const verify::Report &report);

/// "verify: N checks, ... fail" on one line.
std::string summarize(const verify::Report &report);

/// Runs `c` and writes its CSV to cfg.output_path, or to `out` when empty.
/// Diagnostics go to `log`. Returns the exit code; errors propagate.
int dispatch(Command c, const RunConfig &cfg, std::ostream &out, std::ostream &log);

}  // namespace wvjoint::cli

#endif
