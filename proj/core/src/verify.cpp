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

#include "wvjoint/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "wvjoint/closedform.hpp"
#include "wvjoint/error.hpp"
#include "wvjoint/expm_oracle.hpp"
#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/grid_oracle.hpp"
#include "wvjoint/hardy.hpp"
#include "wvjoint/qubit_meter.hpp"
#include "wvjoint/scenarios.hpp"
#include "wvjoint/series.hpp"
#include "wvjoint/weakvalue.hpp"

namespace wvjoint::verify {

namespace {

using gaussian::MomentReport;
using scenarios::PairKind;
using scenarios::PairScenario;

constexpr double kSigma = 1.0;
constexpr double kSweepG[] = {0.01, 0.1, 0.5, 1.0, 2.0, 3.0};
constexpr double kAnalyticTol = 1e-10;
// Series checks need g|w|/s small over the whole fit window, so they draw
// scenarios whose weak values stay of order one.
constexpr double kSeriesOverlap = 0.5;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Running maximum that also remembers where it happened. NaN wins.
struct MaxErr {
    double value = 0.0;
    std::string where;

    void add(double e, const std::string &at) {
        if (!(e <= value)) {
            value = e;
            where = at;
        }
    }
};

Check bounded(std::string group, std::string name, double measured, double tol, std::string detail) {
    const Status s = measured <= tol ? Status::Pass : Status::Fail;
    return Check{std::move(group), std::move(name), s, measured, tol, std::move(detail)};
}

// A transcription check: a mismatch is tolerated only when registered.
Check transcription(std::string group, std::string name, std::string_view id, const MaxErr &err, double tol) {
    Status s = Status::Pass;
    std::string detail = "max at " + err.where;
    if (!(err.value <= tol)) {
        if (closedform::is_known_discrepancy(id)) {
            s = Status::KnownDiscrepancy;
            detail = "registered discrepancy '" + std::string(id) + "'; max at " + err.where;
        } else {
            s = Status::Fail;
        }
    }
    return Check{std::move(group), std::move(name), s, err.value, tol, std::move(detail)};
}

Check skipped(std::string group, std::string name, std::string why) {
    return Check{std::move(group), std::move(name), Status::Skipped, 0.0, 0.0, std::move(why)};
}

double report_err(const MomentReport &a, const MomentReport &b, double sigma) {
    const double s2 = sigma * sigma;
    double e = 0.0;
    e = std::max(e, rel_err(a.x, b.x, sigma));
    e = std::max(e, rel_err(a.y, b.y, sigma));
    e = std::max(e, rel_err(a.xy, b.xy, s2));
    e = std::max(e, rel_err(a.x_py, b.x_py, 1.0));
    e = std::max(e, rel_err(a.x2, b.x2, s2));
    e = std::max(e, rel_err(a.px_py, b.px_py, 1.0 / s2));
    e = std::max(e, rel_err(a.w_norm, b.w_norm, 1.0));
    if (!std::isfinite(e)) {
        return INFINITY;
    }
    return e;
}

struct SweepCase {
    PairKind kind;
    PairScenario s;
};

// Alternating involutory/projector pairs on a 4-dimensional system.
std::vector<SweepCase> random_sweep(const Options &opt) {
    scenarios::Rng rng(opt.seed);
    std::vector<SweepCase> out;
    for (int i = 0; i < opt.random_pairs; ++i) {
        const PairKind kind = i % 2 == 0 ? PairKind::Involutory : PairKind::Projector;
        out.push_back(SweepCase{kind, scenarios::random_scenario(kind, 4, rng)});
    }
    return out;
}

std::string at(int i, double g) {
    return "pair " + std::to_string(i) + ", g=" + fmt(g);
}

closedform::ClosedFormInputs inputs(const PairScenario &s, double g) {
    return closedform::ClosedFormInputs{weakvalue::weak_value_set(s.pre, s.post, s.a, s.b), g, kSigma};
}

MomentReport engine(const PairScenario &s, double g) {
    return gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, g, kSigma));
}

}  // namespace

std::string_view status_name(Status s) noexcept {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::KnownDiscrepancy:
            return "known_discrepancy";
        case Status::Skipped:
            return "skipped";
    }
    return "?";
}

double grid_tolerance(int n) noexcept {
    return n >= 512 ? 1e-6 : 1e-5;
}

double rel_err(double a, double b, double floor) noexcept {
    const double d = std::abs(a - b);
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return d / scale;
}

bool Report::ok() const noexcept {
    return std::none_of(checks.begin(), checks.end(), [](const Check &c) { return c.status == Status::Fail; });
}

std::vector<Check> triple_engine(const Options &opt) {
    const std::string group = "triple_engine";
    const auto sweep = random_sweep(opt);
    MaxErr eo, eg, og;
    int points = 0;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const PairScenario &s = sweep[i].s;
        for (double g : kSweepG) {
            const std::string where = at(static_cast<int>(i), g);
            const MomentReport e = engine(s, g);
            const MomentReport o = expm_oracle::moments(s.pre, s.post, s.a, s.b, g, kSigma);
            eo.add(report_err(e, o, kSigma), where);
            if (!opt.fast) {
                const MomentReport gr = grid::run(s.pre, s.post, s.a, s.b, g, kSigma, opt.grid_n);
                eg.add(report_err(e, gr, kSigma), where);
                og.add(report_err(o, gr, kSigma), where);
            }
            ++points;
        }
    }
    const std::string n_points = std::to_string(points) + " points";
    std::vector<Check> out;
    out.push_back(bounded(group, "gaussian_vs_expm", eo.value, kAnalyticTol, n_points + "; max at " + eo.where));
    if (opt.fast) {
        out.push_back(skipped(group, "gaussian_vs_grid", "grid oracle skipped (--fast)"));
        out.push_back(skipped(group, "expm_vs_grid", "grid oracle skipped (--fast)"));
    } else {
        const double tol = grid_tolerance(opt.grid_n);
        const std::string grid = "n=" + std::to_string(opt.grid_n) + (tol > 1e-6 ? " (relaxed tolerance); " : "; ");
        out.push_back(bounded(group, "gaussian_vs_grid", eg.value, tol, grid + n_points + "; max at " + eg.where));
        out.push_back(bounded(group, "expm_vs_grid", og.value, tol, grid + n_points + "; max at " + og.where));
    }
    return out;
}

std::vector<Check> closed_forms(const Options &opt) {
    const std::string group = "closed_forms";
    const auto sweep = random_sweep(opt);
    namespace cf = closedform;

    MaxErr w1_err, xy_p, xy_r, xpy_p, xpy_r, x_p, x2_naive, x2_cons;
    MaxErr w3_err, wproj_err, xyj_p, xyj_r, xj_p, xj_r, xpyj_r, pxpyj_p, pxpyj_r;
    const auto guarded = [](MaxErr &m, const std::string &where, const std::function<double()> &f) {
        try {
            m.add(f(), where);
        } catch (const Error &e) {
            m.add(INFINITY, where + " (" + e.what() + ")");
        }
    };
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const PairScenario &s = sweep[i].s;
        for (double g : kSweepG) {
            const std::string where = at(static_cast<int>(i), g);
            const auto in = inputs(s, g);
            const MomentReport e = engine(s, g);
            if (sweep[i].kind == PairKind::Involutory) {
                guarded(w1_err, where, [&] { return rel_err(cf::w1(in) / 4.0, e.w_norm, 1.0); });
                guarded(xy_p, where, [&] { return rel_err(cf::cf_xy_inv(in), e.xy, 1.0); });
                guarded(xy_r, where, [&] { return rel_err(cf::reconciled::xy_inv(in), e.xy, 1.0); });
                guarded(xpy_p, where, [&] { return rel_err(cf::cf_xpy_inv(in), e.x_py, 1.0); });
                guarded(xpy_r, where, [&] { return rel_err(cf::reconciled::xpy_inv(in), e.x_py, 1.0); });
                guarded(x_p, where, [&] { return rel_err(cf::cf_x_inv(in), e.x, 1.0); });
                guarded(x2_naive, where, [&] { return rel_err(cf::cf_x2_inv(in).over_w1, e.x2, 1.0); });
                guarded(x2_cons, where, [&] { return rel_err(cf::cf_x2_inv(in).consistent, e.x2, 1.0); });
            } else {
                guarded(w3_err, where, [&] {
                    const Complex w = cf::w3(in);
                    return std::abs(w - e.w_norm) / std::max({std::abs(w), std::abs(e.w_norm), 1.0});
                });
                guarded(wproj_err, where, [&] { return rel_err(cf::reconciled::w_proj(in), e.w_norm, 1.0); });
                guarded(xyj_p, where, [&] { return rel_err(cf::cf_xy_proj(in), e.xy, 1.0); });
                guarded(xyj_r, where, [&] { return rel_err(cf::reconciled::xy_proj(in), e.xy, 1.0); });
                guarded(xj_p, where, [&] { return rel_err(cf::cf_x_proj(in), e.x, 1.0); });
                guarded(xj_r, where, [&] { return rel_err(cf::reconciled::x_proj(in), e.x, 1.0); });
                guarded(xpyj_r, where, [&] { return rel_err(cf::reconciled::xpy_proj(in), e.x_py, 1.0); });
                guarded(pxpyj_p, where, [&] { return rel_err(cf::cf_pxpy_proj(in), e.px_py, 1.0); });
                guarded(pxpyj_r, where, [&] { return rel_err(cf::reconciled::pxpy_proj(in), e.px_py, 1.0); });
            }
        }
    }

    std::vector<Check> out;
    out.push_back(transcription(group, "involutory W1 = 4W", "w1", w1_err, kAnalyticTol));
    out.push_back(transcription(group, "involutory <XY> as printed", "xy_inv", xy_p, kAnalyticTol));
    out.push_back(transcription(group, "involutory <XY> corrected", "", xy_r, kAnalyticTol));
    out.push_back(transcription(group, "involutory <XPy> as printed (W2)", "xpy_inv_w2", xpy_p, kAnalyticTol));
    out.push_back(transcription(group, "involutory <XPy> corrected", "", xpy_r, kAnalyticTol));
    out.push_back(transcription(group, "involutory <X> as printed", "", x_p, kAnalyticTol));
    out.push_back(transcription(group, "involutory <X^2> printed / W1", "x2_inv", x2_naive, kAnalyticTol));
    out.push_back(transcription(group, "involutory <X^2> exp(-g^2/s^2) printed / W1", "", x2_cons, kAnalyticTol));
    out.push_back(transcription(group, "projector W3 as printed", "w3", w3_err, kAnalyticTol));
    out.push_back(transcription(group, "projector W corrected", "", wproj_err, kAnalyticTol));
    out.push_back(transcription(group, "projector <XY> as printed", "xy_proj", xyj_p, kAnalyticTol));
    out.push_back(transcription(group, "projector <XY> corrected", "", xyj_r, kAnalyticTol));
    out.push_back(transcription(group, "projector <X> as printed", "x_proj", xj_p, kAnalyticTol));
    out.push_back(transcription(group, "projector <X> corrected", "", xj_r, kAnalyticTol));
    out.push_back(transcription(group, "projector <XPy> corrected", "", xpyj_r, kAnalyticTol));
    out.push_back(transcription(group, "projector <PxPy> as printed", "pxpy_proj", pxpyj_p, kAnalyticTol));
    out.push_back(transcription(group, "projector <PxPy> corrected", "", pxpyj_r, kAnalyticTol));

    // Qubit-meter closed forms against exact evolution.
    scenarios::Rng rng(opt.seed + 1);
    MaxErr q26, qw5, h35, hw6;
    for (int i = 0; i < 20; ++i) {
        const PairScenario s = scenarios::random_scenario(PairKind::Projector, 4, rng);
        const qubit::QubitMeterScenario q{s.pre,
                                          s.post,
                                          s.a,
                                          s.b,
                                          scenarios::random_ket(4, rng),
                                          scenarios::random_qubit_involution(rng),
                                          scenarios::random_qubit_involution(rng),
                                          std::uniform_real_distribution<double>(0.05, 3.0)(rng)};
        const std::string where = "qubit scenario " + std::to_string(i) + ", g=" + fmt(q.g);
        const auto wv = weakvalue::weak_value_set(s.pre, s.post, s.a, s.b);
        const auto mm = qubit::meter_moments(q.meter_init, q.sigma1, q.sigma2);
        const auto xi = qubit::evolve_postselect_qubit(q);
        const hilbert::Operator m = hilbert::tensor(q.sigma1, hilbert::pauli::identity()) *
                                    hilbert::tensor(hilbert::pauli::identity(), q.sigma2);
        const double exact = qubit::meter_expectation(xi.xi_f, q.meter_init, m);
        const double norm = xi.xi_f.amplitudes().squaredNorm() / xi.prob_weight;
        guarded(q26, where, [&] { return rel_err(qubit::cf_qubit_joint(wv, q.g, mm), exact, 1.0); });
        guarded(qw5, where, [&] { return rel_err(qubit::w5(wv, q.g, mm), norm, 1.0); });
    }
    const auto hs = hardy::build_scenario(hardy::MeterKind::Qubit);
    for (int c = 1; c <= 4; ++c) {
        for (double g : {0.1, 0.5, 1.0, 2.0, 3.0}) {
            const std::string where = "Hardy case " + std::to_string(c) + ", g=" + fmt(g);
            const auto wv = hardy::case_weak_values(hs, c);
            const double exact = hardy::discrete_meter_shift(hs, c, g);
            guarded(h35, where, [&] { return rel_err(qubit::cf_hardy_qubit(wv, g), exact, 1.0); });
            const auto [a, b] = hardy::case_pair(hs, c);
            const qubit::QubitMeterScenario q{hs.pre, hs.post, a, b, hilbert::Ket{1.0, 0.0, 0.0, 0.0},
                                              hilbert::pauli::x(), hilbert::pauli::x(), g};
            const auto xi = qubit::evolve_postselect_qubit(q);
            const double norm = xi.xi_f.amplitudes().squaredNorm() / xi.prob_weight;
            guarded(hw6, where, [&] { return rel_err(qubit::w6(wv, g), norm, 1.0); });
        }
    }
    out.push_back(transcription(group, "qubit meter <s1 s2> as printed", "qubit_joint_w5", q26, kAnalyticTol));
    out.push_back(transcription(group, "qubit meter W5 as printed", "qubit_joint_w5", qw5, kAnalyticTol));
    out.push_back(transcription(group, "Hardy qubit meter <M> as printed", "hardy_qubit_w6", h35, kAnalyticTol));
    out.push_back(transcription(group, "Hardy qubit meter W6", "hardy_qubit_w6", hw6, kAnalyticTol));
    return out;
}

std::vector<Check> resch_steinberg(const Options &opt) {
    const std::string group = "resch_steinberg";
    scenarios::Rng rng(opt.seed + 2);
    const std::vector<double> gs = series::log_spaced(1e-3, 1e-1, 9);
    double worst = 0.0;
    double worst_small = 0.0;
    std::string where;
    for (int i = 0; i < 5; ++i) {
        const PairScenario s = scenarios::random_scenario(PairKind::Involutory, 4, rng);
        std::vector<double> err;
        for (double g : gs) {
            const auto in = inputs(s, g);
            err.push_back(closedform::rs_second_order(in, engine(s, g).xy) - in.wv.ab_w.real());
        }
        const auto fit = series::fit_power_law(gs, err, 2.0);
        if (!(1.0 - fit.r_squared <= worst)) {
            worst = 1.0 - fit.r_squared;
            where = "scenario " + std::to_string(i) + ", C=" + fmt(fit.coeff);
        }
        worst_small = std::max(worst_small, std::abs(err.front()));
    }
    return {
        bounded(group, "error ~ C (g/s)^2 fit, 1 - R^2", worst, 1e-3, "5 scenarios, g/s in [1e-3, 1e-1]; worst " + where),
        bounded(group, "recovery error at g/s = 1e-3", worst_small, 1e-5, "|estimate - Re (AB)_w|"),
    };
}

std::vector<Check> third_order(const Options &opt) {
    const std::string group = "third_order";
    namespace cf = closedform;
    scenarios::Rng rng(opt.seed + 3);
    MaxErr lin, cubic, proj_lin, proj_cubic_p, proj_cubic_r, quartic_p, quartic_r;
    for (int i = 0; i < 5; ++i) {
        const std::string where = "scenario " + std::to_string(i);
        const PairScenario s = scenarios::random_scenario(PairKind::Involutory, 4, rng, false, kSeriesOverlap);
        const auto in = inputs(s, 1.0);
        const auto x = [&](double g) { return engine(s, g).x; };
        const auto fit = series::fit_parity_series(x, series::Parity::Odd, 3, 1e-3, 1e-2, 5);
        const auto want = cf::x_inv_series(in);
        lin.add(rel_err(fit[0], want.linear, 1.0), where);
        cubic.add(rel_err(fit[1], want.cubic, 1.0), where);

        const auto x2 = [&](double g) { return engine(s, g).x2; };
        const auto fit2 = series::fit_parity_series(x2, series::Parity::Even, 5, 1e-2, 1e-1, 9);
        quartic_r.add(rel_err(fit2[2], cf::reconciled::x2_inv_quartic(in), 1.0), where);
        const double printed = (cf::x2_fourth_order(in) - cf::x2_second_order(in)) / std::pow(in.g, 4);
        quartic_p.add(rel_err(fit2[2], printed, 1.0), where);

        const PairScenario p = scenarios::random_scenario(PairKind::Projector, 4, rng, false, kSeriesOverlap);
        const auto inp = inputs(p, 1.0);
        const auto xp = [&](double g) { return engine(p, g).x; };
        const auto fitp = series::fit_parity_series(xp, series::Parity::Odd, 3, 1e-3, 1e-2, 5);
        proj_lin.add(rel_err(fitp[0], cf::x_proj_series(inp).linear, 1.0), where);
        proj_cubic_p.add(rel_err(fitp[1], cf::x_proj_series(inp).cubic, 1.0), where);
        proj_cubic_r.add(rel_err(fitp[1], cf::reconciled::x_proj_series(inp).cubic, 1.0), where);
    }
    std::vector<Check> out;
    out.push_back(transcription(group, "involutory <X> g coefficient", "", lin, 1e-8));
    out.push_back(transcription(group, "involutory <X> g^3 coefficient", "", cubic, 1e-8));
    out.push_back(transcription(group, "involutory <X^2> g^4 coefficient as printed", "x2_fourth_order", quartic_p, 1e-6));
    out.push_back(transcription(group, "involutory <X^2> g^4 coefficient corrected", "", quartic_r, 1e-6));
    out.push_back(transcription(group, "projector <X> g coefficient", "", proj_lin, 1e-8));
    out.push_back(transcription(group, "projector <X> g^3 coefficient as printed", "x_proj_series", proj_cubic_p, 1e-8));
    out.push_back(transcription(group, "projector <X> g^3 coefficient corrected", "", proj_cubic_r, 1e-8));

    // Single-pointer inference with real weak values at g/s = 0.05, and its
    // O(g^2) convergence between 0.05 and 0.025.
    MaxErr ratio;
    for (int i = 0; i < 5; ++i) {
        PairScenario s = scenarios::random_scenario(PairKind::Involutory, 4, rng, true);
        while (std::abs(weakvalue::weak_value(s.pre, s.post, s.b)) < 0.3) {
            s = scenarios::random_scenario(PairKind::Involutory, 4, rng, true);
        }
        const std::string where = "real scenario " + std::to_string(i);
        const auto err_at = [&](double g) {
            const auto in = inputs(s, g);
            return cf::infer_joint_from_single(engine(s, g).x, in) - in.wv.ab_w.real();
        };
        const double e1 = err_at(0.05);
        const double e2 = err_at(0.025);
        ratio.add(std::abs(e1 / e2 - 4.0), where);
    }
    out.push_back(bounded(group, "single-pointer inference error ratio (0.05 vs 0.025) - 4", ratio.value, 0.1,
                          "O(g^2) convergence; max at " + ratio.where));
    return out;
}

std::vector<Check> hardy_table() {
    const std::string group = "hardy_table";
    const auto s = hardy::build_scenario(hardy::MeterKind::Continuous);
    const auto table = hardy::weak_value_table(s);
    constexpr double expected[] = {1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, -1.0};
    double worst = 0.0;
    std::string values;
    for (std::size_t i = 0; i < table.size(); ++i) {
        worst = std::max(worst, std::abs(table[i].value - expected[i]));
        values += (i ? " " : "") + table[i].name + "=" + fmt(table[i].value.real());
    }
    double joint_sum = 0.0;
    for (std::size_t i = 4; i < table.size(); ++i) {
        joint_sum += table[i].value.real();
    }
    const Complex overlap = hilbert::inner(s.post, s.pre);
    const double prob = weakvalue::postselect_probability(s.pre, s.post);
    return {
        bounded(group, "eight weak values", worst, 1e-14, values),
        bounded(group, "joint weak values sum to 1", std::abs(joint_sum - 1.0), 1e-14, ""),
        bounded(group, "overlap = -1/(2 sqrt 3)", std::abs(overlap + 1.0 / (2.0 * std::sqrt(3.0))), 1e-15, ""),
        bounded(group, "post-selection probability = 1/12", std::abs(prob - 1.0 / 12.0), 1e-15, ""),
    };
}

std::vector<Check> hardy_continuous() {
    const std::string group = "hardy_continuous";
    const auto s = hardy::build_scenario(hardy::MeterKind::Continuous, kSigma);
    const std::vector<double> gs = series::log_spaced(1e-3, 5.0, 200);
    double p1 = 0.0, p23 = 0.0, cf = 0.0;
    for (double g : gs) {
        const auto a = hardy::p_continuous(s, 1, g);
        const auto b = hardy::p_continuous(s, 2, g);
        const auto c = hardy::p_continuous(s, 3, g);
        const auto d = hardy::p_continuous(s, 4, g);
        p1 = std::max(p1, std::abs(a.exact));
        p23 = std::max(p23, std::abs(b.exact - c.exact));
        for (const auto &p : {a, b, c, d}) {
            cf = std::max(cf, std::abs(p.exact - p.closed_form));
        }
    }
    double lim = 0.0, plateau = 0.0;
    for (int c = 1; c <= 4; ++c) {
        lim = std::max(lim, std::abs(hardy::p_continuous(s, c, 1e-2).exact - hardy::weak_limit(c)));
        if (c > 1) {
            plateau = std::max(plateau, std::abs(hardy::p_continuous(s, c, 5.0).exact - 1.0 / 3.0));
        }
    }
    const double root = hardy::p4_zero_crossing(s, 1.0, 2.0);
    return {
        bounded(group, "P1 identically 0", p1, 1e-12, "200 log-spaced g/s in [1e-3, 5]"),
        bounded(group, "P2 = P3", p23, 1e-12, "200 log-spaced g/s in [1e-3, 5]"),
        bounded(group, "weak limit (0,1,1,-1) at g/s = 1e-2", lim, 1e-4, ""),
        bounded(group, "P4 zero crossing at g/s = 1.6651", std::abs(root - 1.6651), 5e-4, "root " + fmt(root)),
        bounded(group, "plateau 1/3 at g/s = 5", plateau, 1e-3, "cases 2-4"),
        bounded(group, "closed forms vs exact engine", cf, 1e-9, "all cases, 200 points"),
    };
}

std::vector<Check> hardy_discrete() {
    const std::string group = "hardy_discrete";
    const auto s = hardy::build_scenario(hardy::MeterKind::Qubit);
    double p1 = 0.0, p23 = 0.0, rec = 0.0;
    MaxErr printed;
    constexpr int n = 200;
    for (int k = 1; k <= n; ++k) {
        const double g = std::numbers::pi * k / (n + 1);
        const auto a = hardy::p_discrete(s, 1, g);
        const auto b = hardy::p_discrete(s, 2, g);
        const auto c = hardy::p_discrete(s, 3, g);
        const auto d = hardy::p_discrete(s, 4, g);
        p1 = std::max(p1, std::abs(a.exact));
        p23 = std::max(p23, std::abs(b.exact - c.exact));
        int case_id = 1;
        for (const auto &p : {a, b, c, d}) {
            rec = std::max(rec, std::abs(p.exact - p.reconciled));
            printed.add(std::abs(p.exact - p.closed_form), "case " + std::to_string(case_id++) + ", g=" + fmt(g));
        }
    }
    double lim = 0.0;
    for (int c = 1; c <= 4; ++c) {
        lim = std::max(lim, std::abs(hardy::p_discrete(s, c, 1e-2).exact - hardy::weak_limit(c)));
    }
    const double root = hardy::p4_zero_crossing(s, 1.0, 2.0);
    const double p2 = hardy::p_discrete(s, 2, 1.0).exact;
    const double p4 = hardy::p_discrete(s, 4, 1.0).exact;
    MaxErr spot2, spot4;
    spot2.add(std::abs(p2 - 1.05185), "exact P2(1) = " + fmt(p2));
    spot4.add(std::abs(p4 + 1.10371), "exact P4(1) = " + fmt(p4));
    return {
        bounded(group, "P1 identically 0", p1, 1e-12, "g_k = pi k/201, k = 1..200"),
        bounded(group, "P2 = P3", p23, 1e-12, "g_k = pi k/201, k = 1..200"),
        bounded(group, "weak limit (0,1,1,-1) at g = 1e-2", lim, 1e-4, ""),
        bounded(group, "P4 zero crossing at g = pi/2", std::abs(root - std::numbers::pi / 2), 1e-6,
                "root " + fmt(root)),
        transcription(group, "closed forms as printed vs exact engine", "hardy_discrete_curves", printed, 1e-9),
        bounded(group, "corrected closed forms vs exact engine", rec, 1e-9, "all cases, 200 points"),
        transcription(group, "spot value P2(1) = 1.05185", "hardy_discrete_curves", spot2, 1e-4),
        transcription(group, "spot value P4(1) = -1.10371", "hardy_discrete_curves", spot4, 1e-4),
    };
}

std::vector<Check> qubit_engine(const Options &opt) {
    const std::string group = "qubit_engine";
    scenarios::Rng rng(opt.seed + 4);
    std::uniform_real_distribution<double> gdist(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    MaxErr agree, unitary, norm, period;
    for (int i = 0; i < 100; ++i) {
        const PairScenario s = scenarios::random_scenario(PairKind::Projector, 4, rng);
        const qubit::QubitMeterScenario q{s.pre,
                                          s.post,
                                          s.a,
                                          s.b,
                                          scenarios::random_ket(4, rng),
                                          scenarios::random_qubit_involution(rng),
                                          scenarios::random_qubit_involution(rng),
                                          gdist(rng)};
        const std::string where = "scenario " + std::to_string(i) + ", g=" + fmt(q.g);
        const auto full = qubit::evolve_full(q);
        const auto viaeta = qubit::evolve_eta(q);
        agree.add((full.xi_f.amplitudes() - viaeta.xi_f.amplitudes()).cwiseAbs().maxCoeff(), where);

        const hilbert::Operator h =
            hilbert::tensor(q.pa, hilbert::tensor(q.sigma1, hilbert::pauli::identity())) +
            hilbert::tensor(q.pb, hilbert::tensor(hilbert::pauli::identity(), q.sigma2));
        const hilbert::Operator u = hilbert::expm_hermitian(h, Complex(0.0, -q.g));
        const ComplexMatrix defect = u.matrix().adjoint() * u.matrix() - ComplexMatrix::Identity(16, 16);
        unitary.add(hilbert::max_abs(defect), where);
        const hilbert::Ket total = u * hilbert::tensor(q.pre, q.meter_init);
        norm.add(std::abs(total.norm() - 1.0), where);

        const hilbert::Operator m = hilbert::tensor(q.sigma1, q.sigma2);
        qubit::QubitMeterScenario shifted = q;
        shifted.g = q.g + 2.0 * std::numbers::pi;
        const double e0 = qubit::meter_expectation(full.xi_f, q.meter_init, m);
        const double e1 = qubit::meter_expectation(qubit::evolve_full(shifted).xi_f, q.meter_init, m);
        period.add(std::abs(e0 - e1), where);
    }
    return {
        bounded(group, "eta construction vs full exponential", agree.value, 1e-12, "100 scenarios; max at " + agree.where),
        bounded(group, "unitarity |U^dag U - I|_max", unitary.value, 1e-12, "max at " + unitary.where),
        bounded(group, "total-state norm preserved", norm.value, 1e-12, "max at " + norm.where),
        bounded(group, "2 pi periodicity of <s1 s2>_fi", period.value, 1e-10, "max at " + period.where),
    };
}

std::vector<Check> sigma_xz_adjudication() {
    const std::string group = "sigma_xz_example";
    const double theta = std::numbers::pi / 6.0;
    const PairScenario s = scenarios::sigma_xz_example(theta);
    const auto wv = weakvalue::weak_value_set(s.pre, s.post, s.a, s.b);
    const double t = std::tan(theta);
    const double wv_err = std::max({std::abs(wv.a_w - Complex(0.0, -t)), std::abs(wv.b_w - 1.0),
                                    std::abs(wv.ab_w - Complex(0.0, -t))});

    double x_max = 0.0, xpy_max = 0.0, engines = 0.0, claim = 0.0;
    for (double g : {0.01, 0.05, 0.1, 0.5, 1.0}) {
        const MomentReport e = engine(s, g);
        const MomentReport o = expm_oracle::moments(s.pre, s.post, s.a, s.b, g, kSigma);
        engines = std::max(engines, report_err(e, o, kSigma));
        x_max = std::max(x_max, std::abs(e.x));
        xpy_max = std::max(xpy_max, std::abs(e.x_py));
        const double inferred = 4.0 * kSigma * kSigma * e.x / (g * g * g);
        claim = std::max(claim, std::abs(inferred - wv.ab_w));
    }
    MaxErr claim_err;
    claim_err.add(claim, "4 s^2 <X>_fi / g^3 = 0 = Re (AB)_w at every g, while (AB)_w = -i tan(theta) = " +
                             fmt(-t) + "i; the single-pointer route cannot return an imaginary joint value");
    return {
        bounded(group, "weak values A_w = (AB)_w = -i tan(theta), B_w = 1", wv_err, 1e-12,
                "theta = pi/6, standard conjugate bra"),
        bounded(group, "exact engine vs expm oracle", engines, kAnalyticTol, "g in {0.01, 0.05, 0.1, 0.5, 1}"),
        bounded(group, "<X>_fi vanishes identically", x_max, 1e-14, "g in {0.01, 0.05, 0.1, 0.5, 1}"),
        bounded(group, "<XPy>_fi vanishes identically", xpy_max, 1e-14, "g in {0.01, 0.05, 0.1, 0.5, 1}"),
        transcription(group, "joint weak value from single pointer", "single_pointer_joint", claim_err, 1e-6),
    };
}

Report run_all(const Options &opt) {
    Report r;
    const auto append = [&](std::vector<Check> v) {
        for (Check &c : v) {
            r.checks.push_back(std::move(c));
        }
    };
    append(triple_engine(opt));
    append(closed_forms(opt));
    append(resch_steinberg(opt));
    append(third_order(opt));
    append(hardy_table());
    append(hardy_continuous());
    append(hardy_discrete());
    append(qubit_engine(opt));
    append(sigma_xz_adjudication());
    return r;
}

}  // namespace wvjoint::verify
