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

// Acceptance runner. `wvjoint_acceptance N` evaluates criterion N (1..10),
// no argument evaluates all of them. Each criterion prints its supporting
// checks indented, then one "PASS"/"FAIL" line. Exit status is 0 only if
// every requested criterion passed.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wvjoint/verify.hpp"
#include "wvjoint_cli/commands.hpp"

namespace {

using wvjoint::verify::Check;
using wvjoint::verify::Status;

enum class Accept { PassOnly, PassOrKnown };

void print_check(const Check &c) {
    std::printf("    %-17s %-60s %-17s measured=%.3e tol=%.1e  %s\n", std::string(wvjoint::verify::status_name(c.status)).c_str(),
                c.name.c_str(), c.group.c_str(), c.measured, c.tolerance, c.detail.c_str());
}

bool accepted(const Check &c, Accept a) {
    return c.status == Status::Pass || (a == Accept::PassOrKnown && c.status == Status::KnownDiscrepancy);
}

// Every check must be accepted; `required`, when non-empty, restricts the
// verdict to the named checks and reports the rest as context.
bool judge(const std::vector<Check> &checks, Accept a, const std::set<std::string> &required = {}) {
    bool ok = !checks.empty();
    std::size_t seen = 0;
    for (const Check &c : checks) {
        print_check(c);
        if (!required.empty() && !required.count(c.name)) {
            continue;
        }
        ++seen;
        ok = ok && accepted(c, a);
    }
    return ok && (required.empty() || seen == required.size());
}

wvjoint::verify::Options full_options() {
    wvjoint::verify::Options opt;
    opt.fast = false;
    opt.grid_n = 1024;
    opt.random_pairs = 50;
    return opt;
}

std::string run_to_string(wvjoint::cli::Command c, const wvjoint::cli::RunConfig &cfg) {
    std::ostringstream out;
    std::ostringstream log;
    const int rc = wvjoint::cli::dispatch(c, cfg, out, log);
    return std::to_string(rc) + "\n" + out.str();
}

std::string run_to_file(wvjoint::cli::Command c, wvjoint::cli::RunConfig cfg, const std::string &tag) {
    const auto path = std::filesystem::temp_directory_path() / ("wvjoint_accept_" + tag + ".csv");
    cfg.output_path = path.string();
    std::ostringstream out;
    std::ostringstream log;
    wvjoint::cli::dispatch(c, cfg, out, log);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(path);
    return ss.str();
}

bool determinism() {
    using wvjoint::cli::Command;
    using wvjoint::cli::RunConfig;
    RunConfig continuous;
    RunConfig qubit;
    qubit.meter = wvjoint::hardy::MeterKind::Qubit;
    RunConfig verify;
    verify.fast = true;
    struct Case {
        const char *name;
        Command command;
        const RunConfig *cfg;
    };
    const Case cases[] = {
        {"hardy continuous", Command::Hardy, &continuous},
        {"hardy qubit", Command::Hardy, &qubit},
        {"verify --fast", Command::Verify, &verify},
    };
    bool ok = true;
    int k = 0;
    for (const Case &c : cases) {
        const std::string a = run_to_string(c.command, *c.cfg);
        const std::string b = run_to_string(c.command, *c.cfg);
        const std::string tag = std::to_string(k++);
        const std::string fa = run_to_file(c.command, *c.cfg, tag + "a");
        const std::string fb = run_to_file(c.command, *c.cfg, tag + "b");
        const bool same = a == b && fa == fb && !fa.empty() && a.substr(a.find('\n') + 1) == fa;
        std::printf("    %-17s %-60s bytes=%zu\n", same ? "pass" : "fail", c.name, fa.size());
        ok = ok && same;
    }
    return ok;
}

struct Criterion {
    int id;
    const char *title;
    std::function<bool()> run;
};

std::vector<Criterion> criteria() {
    namespace v = wvjoint::verify;
    return {
        {1, "triple-engine agreement (gaussian, expm, grid n=1024)",
         [] { return judge(v::triple_engine(full_options()), Accept::PassOnly); }},
        {2, "closed forms vs exact engine, mismatches logged",
         [] { return judge(v::closed_forms(full_options()), Accept::PassOrKnown); }},
        {3, "second-order joint value recovery converges as g^2",
         [] { return judge(v::resch_steinberg(full_options()), Accept::PassOnly); }},
        {4, "third-order single-pointer coefficients and inference",
         [] {
             return judge(v::third_order(full_options()), Accept::PassOnly,
                          {"involutory <X> g coefficient", "involutory <X> g^3 coefficient",
                           "single-pointer inference error ratio (0.05 vs 0.025) - 4"});
         }},
        {5, "Hardy weak-value table", [] { return judge(v::hardy_table(), Accept::PassOnly); }},
        {6, "Hardy continuous-meter curves", [] { return judge(v::hardy_continuous(), Accept::PassOnly); }},
        {7, "Hardy qubit-meter curves, root and spot values",
         [] { return judge(v::hardy_discrete(), Accept::PassOnly); }},
        {8, "qubit engine self-consistency", [] { return judge(v::qubit_engine(full_options()), Accept::PassOnly); }},
        {9, "sigma_x (x) sigma_z single-pointer claim adjudicated",
         [] { return judge(v::sigma_xz_adjudication(), Accept::PassOrKnown); }},
        {10, "verify and hardy output byte-reproducible", determinism},
    };
}

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    if (argc > 2) {
        std::fprintf(stderr, "usage: wvjoint_acceptance [criterion 1..10]\n");
        return 2;
    }
    if (argc == 2) {
        const std::string_view arg(argv[1]);
        const auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), only);
        if (ec != std::errc() || p != arg.data() + arg.size() || only < 1 || only > 10) {
            std::fprintf(stderr, "usage: wvjoint_acceptance [criterion 1..10]\n");
            return 2;
        }
    }
    bool all = true;
    for (const Criterion &c : criteria()) {
        if (only != 0 && c.id != only) {
            continue;
        }
        std::printf("criterion %d: %s\n", c.id, c.title);
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception &e) {
            std::printf("    error: %s\n", e.what());
        }
        std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.title);
        std::fflush(stdout);
        all = all && ok;
    }
    return all ? 0 : 1;
}
