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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wvjoint/error.hpp"
#include "wvjoint_cli/commands.hpp"
#include "wvjoint_cli/config.hpp"
#include "wvjoint_cli/csv.hpp"

namespace wvjoint::cli {
namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no wvjoint::Error thrown";
    return ErrorCode::InvalidArgument;
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

const char *kSweep = R"(command: sweep
meter: continuous
sigma: 1.0
g_range: [1e-3, 5, 200, log]
pre: [[0.6, 0], [0, 0.8], 0, 0]
post: [0.5, 0.5, 0.5, 0.5]
a: [sigma_x, identity]
b: [identity, sigma_z]
)";

TEST(Config, ParsesSweep) {
    const RunConfig cfg = parse_config(kSweep);
    ASSERT_TRUE(cfg.command.has_value());
    EXPECT_EQ(*cfg.command, Command::Sweep);
    ASSERT_TRUE(cfg.g_range.has_value());
    const auto gs = cfg.g_range->samples();
    ASSERT_EQ(gs.size(), 200u);
    EXPECT_DOUBLE_EQ(gs.front(), 1e-3);
    EXPECT_NEAR(gs.back(), 5.0, 1e-12);
    EXPECT_EQ(cfg.pre->dim(), 4u);
    EXPECT_EQ((*cfg.pre)[1], Complex(0.0, 0.8));
    EXPECT_NO_THROW(require_for(cfg, Command::Sweep));
}

TEST(Config, ObservableSpellings) {
    const auto p = builtin_observable("proj(1 0)");
    EXPECT_EQ(p.matrix(), builtin_observable("proj(1, 0)").matrix());
    EXPECT_TRUE(p.is_idempotent());
    EXPECT_TRUE(builtin_observable("sigma_y").is_involutory());
    const RunConfig cfg = parse_config("a: {proj: [1, 1]}\nb: [[1, 0], [0, -1]]\n");
    EXPECT_TRUE(cfg.a->is_idempotent());
    EXPECT_TRUE(cfg.b->is_involutory());
}

TEST(Config, RejectsBadInput) {
    EXPECT_EQ(code_of([] { parse_config("pre: [1, 1]\n"); }), ErrorCode::ConfigValidation);
    EXPECT_EQ(code_of([] { parse_config("bogus: 1\n"); }), ErrorCode::ConfigValidation);
    EXPECT_EQ(code_of([] { parse_config("g: [1\n"); }), ErrorCode::ConfigParse);
    EXPECT_EQ(code_of([] { parse_config("a: [[1, 1], [0, 1]]\n"); }), ErrorCode::ConfigValidation);
    EXPECT_EQ(code_of([] { load_config("/nonexistent/wvjoint.yaml"); }), ErrorCode::Io);
    try {
        parse_config("sigma: 1\npre: [1, 1]\n");
        FAIL();
    } catch (const Error &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("pre"), std::string::npos) << msg;
        EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    }
}

TEST(Config, RequireForReportsMissingFields) {
    RunConfig cfg = parse_config("pre: [1, 0]\n");
    EXPECT_EQ(code_of([&] { require_for(cfg, Command::Moments); }), ErrorCode::ConfigValidation);
    const RunConfig hardy = parse_config("g: 1.0\n");
    EXPECT_EQ(code_of([&] { require_for(hardy, Command::Hardy); }), ErrorCode::ConfigValidation);
}

TEST(Csv, FormatsNumbers) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1e-300), "1e-300");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.33333333333333331");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("q\"x"), "\"q\"\"x\"");
}

TEST(Csv, TableRejectsBadRows) {
    SweepTable t{{"g", "v"}, {}};
    t.add({0.1, 1.0});
    EXPECT_THROW(t.add({0.1, 2.0}), Error);
    EXPECT_THROW(t.add({0.2}), Error);
    EXPECT_THROW(t.add({0.3, NAN}), Error);
}

TEST(Csv, HeaderOnlyTableWritesHeader) {
    const auto path = std::filesystem::temp_directory_path() / "wvjoint_header_only.csv";
    emit_csv(SweepTable{{"g", "x"}, {}}, path.string());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "g,x\n");
    std::filesystem::remove(path);
    EXPECT_EQ(code_of([] { emit_csv(SweepTable{{"g"}, {}}, "/nonexistent/dir/out.csv"); }), ErrorCode::Io);
}

TEST(Commands, SweepIsDeterministic) {
    const RunConfig cfg = parse_config(kSweep);
    std::ostringstream a, b, log;
    EXPECT_EQ(dispatch(Command::Sweep, cfg, a, log), kExitOk);
    EXPECT_EQ(dispatch(Command::Sweep, cfg, b, log), kExitOk);
    EXPECT_EQ(a.str(), b.str());
    const auto ls = lines(a.str());
    ASSERT_EQ(ls.size(), 201u);
    EXPECT_EQ(ls.front(), "g,x,y,xy,x_py,x2,px_py,w_norm");
}

TEST(Commands, WeakValueRows) {
    RunConfig cfg = parse_config(kSweep);
    cfg.command.reset();
    std::ostringstream out;
    run_weakvalue(cfg, out);
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[0], "quantity,re,im");
}

TEST(Commands, HardyDefaults) {
    RunConfig cfg;
    std::ostringstream log;
    const auto cont = run_hardy(cfg, log);
    EXPECT_EQ(cont.rows.size(), 200u);
    EXPECT_EQ(cont.header.size(), 9u);
    cfg.meter = hardy::MeterKind::Qubit;
    const auto disc = run_hardy(cfg, log);
    EXPECT_EQ(disc.rows.size(), 200u);
    EXPECT_NEAR(disc.rows.front()[0], std::acos(-1.0) / 201.0, 1e-15);
    // P4 changes sign between k = 100 and k = 101.
    EXPECT_LT(disc.rows[99][4], 0.0);
    EXPECT_GT(disc.rows[100][4], 0.0);
}

TEST(Commands, QubitSweep) {
    const RunConfig cfg = parse_config(R"(meter: qubit
g_range: [0.1, 3, 10, lin]
pre: [[0.6, 0], [0, 0.8], 0, 0]
post: [0.5, 0.5, 0.5, 0.5]
a: [proj(1 0), identity]
b: [identity, proj(0 1)]
meter_init: [1, 0, 0, 0]
sigma1: sigma_x
sigma2: sigma_y
)");
    std::ostringstream log;
    const auto t = run_sweep(cfg, log);
    EXPECT_EQ(t.header, (std::vector<std::string>{"g", "s1", "s2", "s12", "w_norm"}));
    EXPECT_EQ(t.rows.size(), 10u);
}

TEST(Commands, FastVerifySkipsGrid) {
    RunConfig cfg;
    cfg.fast = true;
    cfg.random_pairs = 4;
    const auto rep = run_verify(cfg);
    bool skipped = false;
    for (const auto &c : rep.checks) {
        if (c.group == "triple_engine" && c.status == verify::Status::Skipped) {
            skipped = true;
        }
    }
    EXPECT_TRUE(skipped);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(summarize(rep).rfind("verify: ", 0), 0u);
}

TEST(Commands, CoarseGridIsMarkedRelaxed) {
    verify::Options opt;
    opt.grid_n = 256;
    opt.random_pairs = 1;
    bool relaxed = false;
    for (const auto &c : verify::triple_engine(opt)) {
        if (c.detail.find("relaxed tolerance") != std::string::npos) {
            relaxed = true;
            EXPECT_DOUBLE_EQ(c.tolerance, 1e-5);
        }
    }
    EXPECT_TRUE(relaxed);
}

}  // namespace
}  // namespace wvjoint::cli
