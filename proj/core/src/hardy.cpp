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

#include "wvjoint/hardy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wvjoint/error.hpp"
#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/qubit_meter.hpp"
#include "wvjoint/series.hpp"

namespace wvjoint::hardy {

namespace {

void require_case(int case_id) {
    if (case_id < 1 || case_id > 4) {
        throw Error(ErrorCode::InvalidArgument, "Hardy case must be 1..4, got " + std::to_string(case_id));
    }
}

hilbert::Operator discrete_observable() {
    const double h = 1.0 / std::numbers::sqrt2;
    const hilbert::Operator left = Complex(h) * (hilbert::pauli::x() - hilbert::pauli::y());
    const hilbert::Operator right = Complex(h) * (hilbert::pauli::x() + hilbert::pauli::y());
    return hilbert::tensor(left, right);
}

// Closed forms in u = g²/σ² for the continuous meter.
double continuous_closed_form(int case_id, double u) {
    const double e4 = std::exp(u / 4.0);
    const double e2 = std::exp(u / 2.0);
    const double den = 2.0 - 4.0 * e4 + 3.0 * e2;
    switch (case_id) {
        case 1:
            return 0.0;
        case 2:
        case 3:
            return (1.0 - e4 + e2) / den;
        default:
            return (e2 - 2.0 * e4) / den;
    }
}

double discrete_closed_form(int case_id, double g, double den_cos2g, double den_const) {
    const double c1 = std::cos(g);
    const double c2 = std::cos(2.0 * g);
    const double den = 8.0 * c1 - den_cos2g * c2 - den_const;
    switch (case_id) {
        case 1:
            return 0.0;
        case 2:
        case 3:
            return (2.0 * c1 - c2 - 3.0) / den;
        default:
            return (4.0 * c1 - c2 - 1.0) / den;
    }
}

}  // namespace

HardyScenario build_scenario(MeterKind meter, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be positive and finite");
    }
    const double t = 1.0 / std::sqrt(3.0);
    const hilbert::Ket pre{0.0, t, t, t};
    const hilbert::Ket post{0.5, -0.5, -0.5, 0.5};
    const hilbert::Ket o{1.0, 0.0};
    const hilbert::Ket no{0.0, 1.0};
    const hilbert::Operator id = hilbert::pauli::identity();
    return HardyScenario{pre,
                         post,
                         hilbert::tensor(hilbert::projector(o), id),
                         hilbert::tensor(hilbert::projector(no), id),
                         hilbert::tensor(id, hilbert::projector(o)),
                         hilbert::tensor(id, hilbert::projector(no)),
                         meter,
                         sigma};
}

std::pair<hilbert::Operator, hilbert::Operator> case_pair(const HardyScenario &s, int case_id) {
    require_case(case_id);
    switch (case_id) {
        case 1:
            return {s.p_oa, s.p_ob};
        case 2:
            return {s.p_oa, s.p_nob};
        case 3:
            return {s.p_noa, s.p_ob};
        default:
            return {s.p_noa, s.p_nob};
    }
}

weakvalue::WeakValueSet case_weak_values(const HardyScenario &s, int case_id) {
    const auto [a, b] = case_pair(s, case_id);
    return weakvalue::weak_value_set(s.pre, s.post, a, b);
}

std::vector<NamedWeakValue> weak_value_table(const HardyScenario &s) {
    const auto wv = [&](const hilbert::Operator &op) { return weakvalue::weak_value(s.pre, s.post, op); };
    return {
        {"P_OA", wv(s.p_oa)},
        {"P_OB", wv(s.p_ob)},
        {"P_NOA", wv(s.p_noa)},
        {"P_NOB", wv(s.p_nob)},
        {"P_OA*P_OB", wv(s.p_oa * s.p_ob)},
        {"P_OA*P_NOB", wv(s.p_oa * s.p_nob)},
        {"P_NOA*P_OB", wv(s.p_noa * s.p_ob)},
        {"P_NOA*P_NOB", wv(s.p_noa * s.p_nob)},
    };
}

HardyPoint p_continuous(const HardyScenario &s, int case_id, double g) {
    require_case(case_id);
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw Error(ErrorCode::InvalidArgument, "p_continuous needs finite g > 0");
    }
    const auto [a, b] = case_pair(s, case_id);
    const double width = s.sigma / std::numbers::sqrt2;
    const auto m = gaussian::moments(gaussian::postselect_projector(s.pre, s.post, a, b, g, width));
    const double s4 = std::pow(s.sigma, 4);
    HardyPoint p;
    p.exact = (m.xy - s4 * m.px_py) / (g * g);
    const double u = (g / s.sigma) * (g / s.sigma);
    p.closed_form = continuous_closed_form(case_id, u);
    p.reconciled = p.closed_form;
    return p;
}

double discrete_meter_shift(const HardyScenario &s, int case_id, double g) {
    const auto [a, b] = case_pair(s, case_id);
    const qubit::QubitMeterScenario q{s.pre,
                                      s.post,
                                      a,
                                      b,
                                      hilbert::Ket{1.0, 0.0, 0.0, 0.0},
                                      hilbert::pauli::x(),
                                      hilbert::pauli::x(),
                                      g};
    const auto out = qubit::evolve_postselect_qubit(q);
    return qubit::meter_expectation(out.xi_f, q.meter_init, discrete_observable());
}

HardyPoint p_discrete(const HardyScenario &s, int case_id, double g) {
    require_case(case_id);
    if (!(g > 0.0) || !(g < std::numbers::pi)) {
        throw Error(ErrorCode::InvalidArgument, "p_discrete needs 0 < g < pi");
    }
    const double sn = std::sin(g);
    HardyPoint p;
    p.exact = discrete_meter_shift(s, case_id, g) / (-2.0 * sn * sn);
    p.closed_form = discrete_closed_form(case_id, g, 3.0, 7.0);
    p.reconciled = discrete_closed_form(case_id, g, 2.0, 8.0);
    return p;
}

HardyPoint evaluate(const HardyScenario &s, int case_id, double g) {
    return s.meter == MeterKind::Continuous ? p_continuous(s, case_id, g) : p_discrete(s, case_id, g);
}

HardyCurve curve(const HardyScenario &s, int case_id, const std::vector<double> &gs) {
    HardyCurve c{case_id, {}};
    c.samples.reserve(gs.size());
    for (double g : gs) {
        c.samples.emplace_back(g, evaluate(s, case_id, g).exact);
    }
    return c;
}

double weak_limit(int case_id) {
    require_case(case_id);
    constexpr double kLimits[] = {0.0, 1.0, 1.0, -1.0};
    return kLimits[case_id - 1];
}

WeakLimitReport weak_limit_check(const HardyCurve &curve, double sigma, double g_cut, double tol) {
    WeakLimitReport rep;
    rep.expected = weak_limit(curve.case_id);
    std::vector<double> xs;
    std::vector<double> dev;
    rep.g_smallest = INFINITY;
    for (const auto &[g, p] : curve.samples) {
        const double scaled = g / sigma;
        if (scaled <= 10.0 * g_cut) {
            xs.push_back(scaled);
            dev.push_back(p - rep.expected);
        }
        if (g < rep.g_smallest) {
            rep.g_smallest = g;
            rep.at_smallest = p;
        }
    }
    if (!(rep.g_smallest / sigma <= g_cut)) {
        throw Error(ErrorCode::InvalidArgument, "weak_limit_check needs a sample at or below the cut");
    }
    if (xs.size() >= 2) {
        const auto fit = series::fit_power_law(xs, dev, 2.0);
        rep.c_fit = fit.coeff;
        rep.r_squared = fit.r_squared;
    }
    rep.pass = std::abs(rep.at_smallest - rep.expected) <= tol;
    return rep;
}

double p4_zero_crossing(const HardyScenario &s, double lo, double hi, double tol) {
    const auto f = [&](double g) { return evaluate(s, 4, g).exact; };
    double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo * fhi < 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "P4 does not change sign on the bracket");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace wvjoint::hardy
