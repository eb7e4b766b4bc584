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

#ifndef WVJOINT_QUBIT_METER_HPP
#define WVJOINT_QUBIT_METER_HPP

#include "wvjoint/hilbert.hpp"
#include "wvjoint/weakvalue.hpp"

/// Two-qubit pointer coupled to a projector pair through
/// H = Pa ⊗ (σ₁ ⊗ I) + Pb ⊗ (I ⊗ σ₂), system first, meter second.
namespace wvjoint::qubit {

inline constexpr double kMinNorm = 1e-14;

struct QubitMeterScenario {
    hilbert::Ket pre;
    hilbert::Ket post;
    hilbert::Operator pa;
    hilbert::Operator pb;
    hilbert::Ket meter_init;
    hilbert::Operator sigma1;  // single-qubit coupling on meter qubit 1
    hilbert::Operator sigma2;  // single-qubit coupling on meter qubit 2
    double g = 0.0;
};

/// Checks projector, involution, commutation and normalization invariants.
void validate(const QubitMeterScenario &s);

struct PostselectedMeter {
    hilbert::Ket xi_f;       // ⟨χ_f|χ_i⟩ η |ξ_i⟩, unnormalized
    double prob_weight = 0;  // |⟨χ_f|χ_i⟩|²
};

/// Full matrix exponential on system ⊗ meter, then projection on ⟨χ_f|.
PostselectedMeter evolve_full(const QubitMeterScenario &s);

/// η built from the weak values:
/// η = 1 − Pa_w(r + iσ₁ s) − Pb_w(r + iσ₂ s) + (PaPb)_w(r + iσ₁ s)(r + iσ₂ s),
/// r = 1 − cos g, s = sin g.
hilbert::Operator eta(const weakvalue::WeakValueSet &wv, const hilbert::Operator &sigma1,
                      const hilbert::Operator &sigma2, double g);

PostselectedMeter evolve_eta(const QubitMeterScenario &s);

/// Runs both constructions and throws InvalidArgument if they differ by more
/// than tol (max-abs over amplitudes). Returns the full-exponential result.
PostselectedMeter evolve_postselect_qubit(const QubitMeterScenario &s, double tol = 1e-12);

/// ⟨ξ_f|m|ξ_f⟩/⟨ξ_f|ξ_f⟩ − ⟨ξ_i|m|ξ_i⟩. Throws VanishingNorm, NonHermitian.
double meter_expectation(const hilbert::Ket &xi_f, const hilbert::Ket &xi_i, const hilbert::Operator &m);

struct MeterMoments {
    double s1 = 0.0;   // ⟨σ₁ ⊗ I⟩
    double s2 = 0.0;   // ⟨I ⊗ σ₂⟩
    double s12 = 0.0;  // ⟨σ₁ ⊗ σ₂⟩
};

MeterMoments meter_moments(const hilbert::Ket &xi, const hilbert::Operator &sigma1, const hilbert::Operator &sigma2);

/// ⟨σ₁ ⊗ σ₂⟩ closed form for the general qubit meter, verbatim.
double cf_qubit_joint(const weakvalue::WeakValueSet &wv, double g, const MeterMoments &mm);
/// Its normalization W₅, verbatim.
double w5(const weakvalue::WeakValueSet &wv, double g, const MeterMoments &mm);

/// Hardy discrete-meter closed form for ⟨M⟩_fi with
/// M = ((σx − σy)/√2) ⊗ ((σx + σy)/√2), verbatim, and its W₆.
double cf_hardy_qubit(const weakvalue::WeakValueSet &wv, double g);
double w6(const weakvalue::WeakValueSet &wv, double g);

namespace reconciled {

/// ⟨σ₁ ⊗ σ₂⟩ on η|ξ_i⟩ normalized, minus its value on |ξ_i⟩.
double qubit_joint(const weakvalue::WeakValueSet &wv, double g, const hilbert::Ket &meter_init,
                   const hilbert::Operator &sigma1, const hilbert::Operator &sigma2);

}  // namespace reconciled

}  // namespace wvjoint::qubit

#endif
