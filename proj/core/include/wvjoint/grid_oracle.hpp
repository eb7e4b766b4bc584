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

#ifndef WVJOINT_GRID_ORACLE_HPP
#define WVJOINT_GRID_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/hilbert.hpp"

/// Brute-force system ⊗ pointer simulation on an n×n grid over [−L, L)².
/// Shifts and momentum operators are applied spectrally with FFTW.
namespace wvjoint::grid {

inline constexpr int kDefaultN = 512;
inline constexpr double kDefaultExtentSigmas = 40.0;
inline constexpr double kMinNorm = 1e-14;

/// One n×n field per system basis state, row-major with x as the slow index.
struct GridState {
    int n = 0;
    double extent = 0.0;  // L
    double sigma = 0.0;
    std::vector<std::vector<Complex>> fields;

    double dx() const noexcept {
        return 2.0 * extent / n;
    }
    double coordinate(int i) const noexcept {
        return -extent + i * dx();
    }
    std::size_t system_dim() const noexcept {
        return fields.size();
    }
};

/// Sampled Gaussian pointer times the pre-selected amplitudes, normalized on
/// the grid. n must be a power of two ≥ 256 and extent ≥ 10σ + 5|g_max|.
/// Throws InvalidArgument, NotNormalized, ExtentTooSmall.
GridState init_grid(double sigma, int n, double extent, const hilbert::Ket &pre, double g_max = 0.0);

/// Rigid spectral shift of every joint eigenbranch (λ, μ) by (gλ, gμ).
/// Throws NonCommuting, DimensionMismatch, ExtentTooSmall, and ClippingRisk
/// when a shift exceeds extent/4.
GridState apply_coupling(const GridState &gs, const hilbert::Operator &a, const hilbert::Operator &b, double g);

struct PostselectedGrid {
    GridState pointer;  // single field, unnormalized
    double prob = 0.0;  // its squared norm
};

/// Contracts the system index with ⟨post|. Throws VanishingNorm.
PostselectedGrid postselect_grid(const GridState &gs, const hilbert::Ket &post);

/// Moments of a single-field state. w_norm is the squared norm divided by
/// postselect_prob, matching gaussian::moments when the latter is |⟨χ_f|χ_i⟩|².
gaussian::MomentReport grid_moments(const GridState &gs, double postselect_prob = 1.0);

/// Squared norm in position and spectral domains (for Parseval checks).
double position_norm(const GridState &gs);
double spectral_norm(const GridState &gs);

/// init → couple → post-select → moments.
gaussian::MomentReport run(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                           const hilbert::Operator &b, double g, double sigma, int n = kDefaultN,
                           double extent = 0.0);

}  // namespace wvjoint::grid

#endif
