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

#include <iostream>
#include <string>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "wvjoint/error.hpp"
#include "wvjoint_cli/commands.hpp"

namespace {

using wvjoint::cli::Command;

std::string one_line(std::string s) {
    for (char &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Weak-value pointer simulator: exact engines, Hardy curves and the verification suite"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool fast = false;
    int grid_n = 0;

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "YAML scenario file");
        sub->add_option("--out", out_path, "CSV output path (default: stdout)");
    };
    struct Entry {
        Command command;
        const char *help;
    };
    const Entry entries[] = {
        {Command::WeakValue, "Weak values A_w, B_w, (AB)_w for a pre/post pair"},
        {Command::Moments, "Pointer displacements at a single coupling g"},
        {Command::Sweep, "Pointer displacements over g_range"},
        {Command::Hardy, "Hardy-paradox joint probabilities P1..P4 against g"},
        {Command::Verify, "Cross-engine verification suite"},
    };
    std::vector<std::pair<CLI::App *, Command>> subs;
    for (const Entry &e : entries) {
        CLI::App *sub = app.add_subcommand(std::string(wvjoint::cli::command_name(e.command)), e.help);
        common(sub);
        if (e.command == Command::Verify) {
            sub->add_flag("--fast", fast, "Skip the grid oracle");
        }
        if (e.command != Command::WeakValue && e.command != Command::Hardy) {
            sub->add_option("--grid-n", grid_n, "Grid points per axis for the grid oracle")
                ->check(CLI::Range(16, 1 << 14));
        }
        subs.emplace_back(sub, e.command);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "wvjoint: error: Usage: " << one_line(e.what()) << '\n';
        return wvjoint::cli::kExitError;
    }

    try {
        Command command = Command::Verify;
        for (const auto &[sub, c] : subs) {
            if (sub->parsed()) {
                command = c;
            }
        }
        wvjoint::cli::RunConfig cfg;
        if (!config_path.empty()) {
            cfg = wvjoint::cli::load_config(config_path);
        }
        if (!out_path.empty()) {
            cfg.output_path = out_path;
        }
        if (fast) {
            cfg.fast = true;
        }
        if (grid_n != 0) {
            cfg.grid_n = grid_n;
        }
        return wvjoint::cli::dispatch(command, cfg, std::cout, std::cerr);
    } catch (const wvjoint::Error &e) {
        std::cerr << "wvjoint: error: " << one_line(e.what()) << '\n';
    } catch (const std::exception &e) {
        std::cerr << "wvjoint: error: Internal: " << one_line(e.what()) << '\n';
    }
    return wvjoint::cli::kExitError;
}
