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

#include "wvjoint_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "wvjoint/error.hpp"
#include "wvjoint/expm_oracle.hpp"
#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/grid_oracle.hpp"
#include "wvjoint/qubit_meter.hpp"
#include "wvjoint/series.hpp"
#include "wvjoint/weakvalue.hpp"

namespace wvjoint::cli {

namespace {

using RowFn = std::function<std::vector<double>(double)>;

bool degenerate(const Error &e) {
    return e.code() == ErrorCode::DegenerateNorm || e.code() == ErrorCode::VanishingNorm;
}

SweepTable sweep(std::vector<std::string> header, const std::vector<double> &gs, const RowFn &row,
                 std::ostream &log, const std::function<const char *(double)> &undefined = {}) {
    SweepTable t;
    t.header = std::move(header);
    std::size_t dropped = 0;
    const auto drop = [&](double g, const std::string &why) {
        ++dropped;
        log << "dropped g=" << format_number(g) << ": " << why << '\n';
    };
    for (double g : gs) {
        if (undefined) {
            if (const char *why = undefined(g)) {
                drop(g, why);
                continue;
            }
        }
        std::vector<double> r;
        try {
            r = row(g);
        } catch (const Error &e) {
            if (!degenerate(e)) {
                throw;
            }
            drop(g, e.what());
            continue;
        }
        r.insert(r.begin(), g);
        bool finite = true;
        for (double v : r) {
            finite = finite && std::isfinite(v);
        }
        if (!finite) {
            drop(g, "non-finite value");
            continue;
        }
        t.add(std::move(r));
    }
    if (static_cast<double>(dropped) > kMaxDroppedFraction * static_cast<double>(gs.size())) {
        throw Error(ErrorCode::DegenerateNorm, std::to_string(dropped) + " of " + std::to_string(gs.size()) +
                                                   " sweep points dropped (limit 1%)");
    }
    return t;
}

std::vector<double> continuous_row(const RunConfig &cfg, double g) {
    gaussian::MomentReport m;
    switch (cfg.engine) {
        case Engine::Gaussian:
            m = gaussian::moments(gaussian::postselect(*cfg.pre, *cfg.post, *cfg.a, *cfg.b, g, cfg.sigma));
            break;
        case Engine::Expm:
            m = expm_oracle::moments(*cfg.pre, *cfg.post, *cfg.a, *cfg.b, g, cfg.sigma);
            break;
        case Engine::Grid:
            m = grid::run(*cfg.pre, *cfg.post, *cfg.a, *cfg.b, g, cfg.sigma, cfg.grid_n, cfg.grid_extent);
            break;
    }
    return {m.x, m.y, m.xy, m.x_py, m.x2, m.px_py, m.w_norm};
}

std::vector<double> qubit_row(const RunConfig &cfg, double g) {
    const qubit::QubitMeterScenario s{*cfg.pre, *cfg.post, *cfg.a, *cfg.b, *cfg.meter_init, *cfg.sigma1, *cfg.sigma2, g};
    const auto xi = qubit::evolve_postselect_qubit(s);
    const hilbert::Operator id = hilbert::pauli::identity();
    const auto fi = [&](const hilbert::Operator &m) { return qubit::meter_expectation(xi.xi_f, s.meter_init, m); };
    const double w = xi.xi_f.amplitudes().squaredNorm() / xi.prob_weight;
    return {fi(hilbert::tensor(s.sigma1, id)), fi(hilbert::tensor(id, s.sigma2)), fi(hilbert::tensor(s.sigma1, s.sigma2)),
            w};
}

SweepTable pair_sweep(const RunConfig &cfg, const std::vector<double> &gs, std::ostream &log) {
    if (cfg.meter == hardy::MeterKind::Qubit) {
        return sweep({"g", "s1", "s2", "s12", "w_norm"}, gs, [&](double g) { return qubit_row(cfg, g); }, log);
    }
    return sweep({"g", "x", "y", "xy", "x_py", "x2", "px_py", "w_norm"}, gs,
                 [&](double g) { return continuous_row(cfg, g); }, log);
}

void write_output(const RunConfig &cfg, std::ostream &out, const std::function<void(std::ostream &)> &emit) {
    if (cfg.output_path.empty()) {
        emit(out);
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error(ErrorCode::Io, "cannot open '" + cfg.output_path + "' for writing");
    }
    emit(f);
    f.flush();
    if (!f) {
        throw Error(ErrorCode::Io, "write to '" + cfg.output_path + "' failed");
    }
}

}  // namespace

void run_weakvalue(const RunConfig &cfg, std::ostream &out) {
    require_for(cfg, Command::WeakValue);
    std::vector<std::vector<std::string>> rows;
    const auto add = [&](const std::string &name, Complex v) {
        rows.push_back({name, format_number(v.real()), format_number(v.imag())});
    };
    add("A_w", weakvalue::weak_value(*cfg.pre, *cfg.post, *cfg.a));
    if (cfg.b) {
        const auto wv = weakvalue::weak_value_set(*cfg.pre, *cfg.post, *cfg.a, *cfg.b);
        add("B_w", wv.b_w);
        add("AB_w", wv.ab_w);
    }
    add("overlap", hilbert::inner(*cfg.post, *cfg.pre));
    add("probability", weakvalue::postselect_probability(*cfg.pre, *cfg.post));
    write_csv(out, {"quantity", "re", "im"}, rows);
}

SweepTable run_moments(const RunConfig &cfg, std::ostream &log) {
    require_for(cfg, Command::Moments);
    return pair_sweep(cfg, {*cfg.g}, log);
}

SweepTable run_sweep(const RunConfig &cfg, std::ostream &log) {
    require_for(cfg, Command::Sweep);
    return pair_sweep(cfg, cfg.g_range->samples(), log);
}

SweepTable run_hardy(const RunConfig &cfg, std::ostream &log) {
    require_for(cfg, Command::Hardy);
    const bool qubit_meter = cfg.meter == hardy::MeterKind::Qubit;
    std::vector<double> gs;
    if (cfg.g_range) {
        gs = cfg.g_range->samples();
    } else if (qubit_meter) {
        for (int k = 1; k <= 200; ++k) {
            gs.push_back(std::numbers::pi * k / 201.0);
        }
    } else {
        gs = series::log_spaced(1e-3 * cfg.sigma, 5.0 * cfg.sigma, 200);
    }
    const auto s = hardy::build_scenario(cfg.meter, cfg.sigma);
    const auto undefined = [&](double g) -> const char * {
        if (!(g > 0.0)) {
            return "P is undefined at g <= 0";
        }
        if (qubit_meter && !(g < std::numbers::pi)) {
            return "P is undefined where sin g = 0";
        }
        return nullptr;
    };
    const auto row = [&](double g) {
        std::vector<double> exact, cf;
        for (int c = 1; c <= 4; ++c) {
            const auto p = hardy::evaluate(s, c, g);
            exact.push_back(p.exact);
            cf.push_back(p.closed_form);
        }
        exact.insert(exact.end(), cf.begin(), cf.end());
        return exact;
    };
    return sweep({"g", "P1", "P2", "P3", "P4", "P1_cf", "P2_cf", "P3_cf", "P4_cf"}, gs, row, log, undefined);
}

verify::Report run_verify(const RunConfig &cfg) {
    require_for(cfg, Command::Verify);
    verify::Options opt;
    opt.fast = cfg.fast;
    opt.grid_n = cfg.grid_n;
    opt.random_pairs = cfg.random_pairs;
    opt.seed = cfg.seed;
    return verify::run_all(opt);
}

void emit_report(std::ostream &out, const verify::Report &report) {
    std::vector<std::vector<std::string>> rows;
    for (const auto &c : report.checks) {
        rows.push_back({c.group, c.name, std::string(verify::status_name(c.status)), format_number(c.measured),
                        format_number(c.tolerance), c.detail});
    }
    write_csv(out, {"group", "check", "status", "measured", "tolerance", "detail"}, rows);
}

std::string summarize(const verify::Report &report) {
    int counts[4] = {0, 0, 0, 0};
    for (const auto &c : report.checks) {
        ++counts[static_cast<int>(c.status)];
    }
    std::ostringstream s;
    s << "verify: " << report.checks.size() << " checks, " << counts[0] << " pass, " << counts[2]
      << " known_discrepancy, " << counts[3] << " skipped, " << counts[1] << " fail";
    return s.str();
}

int dispatch(Command c, const RunConfig &cfg, std::ostream &out, std::ostream &log) {
    switch (c) {
        case Command::WeakValue:
            write_output(cfg, out, [&](std::ostream &o) { run_weakvalue(cfg, o); });
            return kExitOk;
        case Command::Moments: {
            const SweepTable t = run_moments(cfg, log);
            write_output(cfg, out, [&](std::ostream &o) { emit_csv(o, t); });
            return kExitOk;
        }
        case Command::Sweep: {
            const SweepTable t = run_sweep(cfg, log);
            write_output(cfg, out, [&](std::ostream &o) { emit_csv(o, t); });
            return kExitOk;
        }
        case Command::Hardy: {
            const SweepTable t = run_hardy(cfg, log);
            write_output(cfg, out, [&](std::ostream &o) { emit_csv(o, t); });
            return kExitOk;
        }
        case Command::Verify: {
            const verify::Report r = run_verify(cfg);
            write_output(cfg, out, [&](std::ostream &o) { emit_report(o, r); });
            log << summarize(r) << '\n';
            return r.ok() ? kExitOk : kExitCheckFailed;
        }
    }
    return kExitError;
}

}  // namespace wvjoint::cli
