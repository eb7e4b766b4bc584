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

#ifndef WVJOINT_HARDY_HPP
#define WVJOINT_HARDY_HPP

#include <string>
#include <utility>
#include <vector>

#include "wvjoint/hilbert.hpp"
#include "wvjoint/weakvalue.hpp"

/// Overlapping-interferometer (Hardy) scenario on two path qubits, basis
/// |O⟩ = (1,0), |NO⟩ = (0,1), particle A first.
///
/// Cases: 1 = (P_OA, P_OB), 2 = (P_OA, P_NOB), 3 = (P_NOA, P_OB),
/// 4 = (P_NOA, P_NOB).
namespace wvjoint::hardy {

enum class MeterKind { Continuous, Qubit };

struct HardyScenario {
    hilbert::Ket pre;   // (|O,NO⟩ + |NO,O⟩ + |NO,NO⟩)/√3
    hilbert::Ket post;  // (|O⟩ − |NO⟩)⊗(|O⟩ − |NO⟩)/2
    hilbert::Operator p_oa;
    hilbert::Operator p_noa;
    hilbert::Operator p_ob;
    hilbert::Operator p_nob;
    MeterKind meter = MeterKind::Continuous;
    double sigma = 1.0;  // continuous meter width, pointer ∝ exp(−r²/2σ²)
};

HardyScenario build_scenario(MeterKind meter, double sigma = 1.0);

/// Projector pair of a case. Throws InvalidArgument outside 1..4.
std::pair<hilbert::Operator, hilbert::Operator> case_pair(const HardyScenario &s, int case_id);

/// Weak values of the pair of a case.
weakvalue::WeakValueSet case_weak_values(const HardyScenario &s, int case_id);

struct NamedWeakValue {
    std::string name;
    Complex value;
};

/// P_OA, P_OB, P_NOA, P_NOB, then the four joint products in case order.
std::vector<NamedWeakValue> weak_value_table(const HardyScenario &s);

struct HardyPoint {
    double exact = 0.0;        // from the exact engine
    double closed_form = 0.0;  // reference closed form, verbatim
    double reconciled = 0.0;   // corrected closed form
};

/// ⟨XY⟩_fi − σ⁴⟨PₓP_y⟩_fi over g². The engine runs at half-width σ/√2 so
/// the pointer is ∝ exp(−r²/2σ²). Throws InvalidArgument for g ≤ 0.
HardyPoint p_continuous(const HardyScenario &s, int case_id, double g);

/// Exact ⟨M⟩_fi of the qubit meter divided by −2 sin²g, with
/// M = ((σx − σy)/√2) ⊗ ((σx + σy)/√2), couplings σx, σx and ξ_i = |00⟩.
/// Throws InvalidArgument unless 0 < g < π.
HardyPoint p_discrete(const HardyScenario &s, int case_id, double g);

/// Exact ⟨M⟩_fi of the qubit meter (no rescaling).
double discrete_meter_shift(const HardyScenario &s, int case_id, double g);

HardyPoint evaluate(const HardyScenario &s, int case_id, double g);

struct HardyCurve {
    int case_id = 0;
    std::vector<std::pair<double, double>> samples;  // (g, exact P)
};

HardyCurve curve(const HardyScenario &s, int case_id, const std::vector<double> &gs);

struct WeakLimitReport {
    double expected = 0.0;
    double at_smallest = 0.0;  // P at the smallest sampled g
    double g_smallest = 0.0;
    double c_fit = 0.0;        // deviation ≈ C·g²
    double r_squared = 0.0;
    bool pass = false;
};

/// Fits P − expected ≈ C·g² over samples with g (or g/σ) ≤ g_cut and
/// checks |P − expected| ≤ tol at the smallest sample.
WeakLimitReport weak_limit_check(const HardyCurve &curve, double sigma, double g_cut = 1e-2, double tol = 1e-4);

/// Expected weak-coupling limits (0, 1, 1, −1).
double weak_limit(int case_id);

/// Sign change of the exact P₄ by bisection on [lo, hi].
double p4_zero_crossing(const HardyScenario &s, double lo, double hi, double tol = 1e-12);

}  // namespace wvjoint::hardy

#endif
