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

#ifndef WVJOINT_GAUSSIAN_METER_HPP
#define WVJOINT_GAUSSIAN_METER_HPP

#include <string_view>
#include <vector>

#include "wvjoint/hilbert.hpp"
#include "wvjoint/weakvalue.hpp"

/// Exact continuous-pointer engine.
///
/// The pointer starts in the centred 2-D Gaussian
///     ψ(x, y) = (2πσ²)^{-1/2} exp(−(x² + y²) / 4σ²)
/// and is coupled through exp(−ig(A⊗Pₓ + B⊗P_y)). For commuting A, B each
/// joint eigenbranch (λ, μ) rigidly shifts the pointer by (gλ, gμ), so the
/// post-selected pointer is a finite superposition of shifted Gaussians and
/// every polynomial moment reduces to pairwise Gaussian kernels.
namespace wvjoint::gaussian {

struct Shift {
    double x = 0.0;
    double y = 0.0;
};

struct Term {
    Complex coeff;
    Shift shift;
};

/// Shifts closer than this (in both coordinates) are merged into one term.
inline constexpr double kShiftMergeTol = 1e-12;
/// Terms whose merged coefficient falls below this are dropped.
inline constexpr double kZeroCoeffTol = 1e-14;
/// Norms W below this are rejected as destructive interference.
inline constexpr double kMinNorm = 1e-14;

/// Post-selected pointer ψ_f = ⟨χ_f|χ_i⟩ Σ c_j G(· − s_j). Coefficients are
/// stored relative to ⟨χ_f|χ_i⟩, whose squared modulus is kept separately
/// in prob_weight, so ⟨ψ_f|ψ_f⟩ / prob_weight = Σ c_j* c_k ⟨G_j|G_k⟩.
class GaussianSuperposition {
   public:
    GaussianSuperposition(double sigma, std::vector<Term> terms, double prob_weight);

    double sigma() const noexcept {
        return sigma_;
    }
    const std::vector<Term> &terms() const noexcept {
        return terms_;
    }
    double prob_weight() const noexcept {
        return prob_weight_;
    }

   private:
    double sigma_;
    std::vector<Term> terms_;
    double prob_weight_;
};

enum class Monomial { One, X, Y, XY, X2, XPy, PxPy, Px, Py, Py2 };

/// Parses "1", "X", "Y", "XY", "X2", "XPy", "PxPy", "Px", "Py", "Py2".
/// Throws UnsupportedMonomial.
Monomial monomial_from_name(std::string_view name);
std::string_view monomial_name(Monomial m) noexcept;

/// Pointer displacements ⟨·⟩_f − ⟨·⟩_i and the norm W.
struct MomentReport {
    double x = 0.0;
    double y = 0.0;
    double xy = 0.0;
    double x_py = 0.0;
    double x2 = 0.0;
    double px_py = 0.0;
    double w_norm = 0.0;
};

/// A² = B² = I. Four branches at (±g, ±g) with amplitudes
/// ¼[1 + λa_w + μb_w + λμ(ab)_w]. Throws NotInvolutory, NonCommuting,
/// OrthogonalPostselection, InvalidArgument (sigma ≤ 0).
GaussianSuperposition postselect_involutory(const hilbert::Ket &pre, const hilbert::Ket &post,
                                            const hilbert::Operator &a, const hilbert::Operator &b, double g,
                                            double sigma);

/// Pa² = Pa, Pb² = Pb. Branches at {0, g}² with amplitudes
/// 1 − pa_w − pb_w + pab_w, pa_w − pab_w, pb_w − pab_w, pab_w.
GaussianSuperposition postselect_projector(const hilbert::Ket &pre, const hilbert::Ket &post,
                                           const hilbert::Operator &pa, const hilbert::Operator &pb, double g,
                                           double sigma);

/// Same superpositions built from an already computed weak-value set.
GaussianSuperposition superposition_involutory(const weakvalue::WeakValueSet &wv, double g, double sigma);
GaussianSuperposition superposition_projector(const weakvalue::WeakValueSet &wv, double g, double sigma);

/// Dispatches on classify(): involutory pairs first, then projector pairs.
/// Mixed pairs are rejected with InvalidArgument.
GaussianSuperposition postselect(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                                 const hilbert::Operator &b, double g, double sigma);

/// Σ_jk c_j* c_k ⟨G_{s_j}| m |G_{s_k}⟩ (relative to prob_weight).
Complex overlap_moment(const GaussianSuperposition &sup, Monomial m);

/// Throws DegenerateNorm when W < kMinNorm.
MomentReport moments(const GaussianSuperposition &sup);

/// Relative pointer amplitude Σ c_j G(x − s_jx, y − s_jy) in position space.
Complex amplitude(const GaussianSuperposition &sup, double x, double y);
/// Same amplitude in momentum space: Σ c_j e^{−i k·s_j} ψ̃(kx, ky).
Complex momentum_amplitude(const GaussianSuperposition &sup, double kx, double ky);

/// Initial pointer wavefunction ψ(x, y) and its Fourier transform
/// ψ̃(k) = (2σ²/π)^{1/2} exp(−σ²(kx² + ky²)).
double initial_pointer(double x, double y, double sigma);
double initial_pointer_momentum(double kx, double ky, double sigma);

/// One-axis Gaussian kernels ⟨G_a| op |G_b⟩ for G_a(x) = (2πσ²)^{-1/4}
/// exp(−(x − a)² / 4σ²).
namespace kernel {
Complex overlap(double a, double b, double sigma);
Complex position(double a, double b, double sigma);
Complex position_sq(double a, double b, double sigma);
Complex momentum(double a, double b, double sigma);
Complex momentum_sq(double a, double b, double sigma);
}  // namespace kernel

}  // namespace wvjoint::gaussian

#endif
