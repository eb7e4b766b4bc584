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

#ifndef WVJOINT_EXPM_ORACLE_HPP
#define WVJOINT_EXPM_ORACLE_HPP

#include <vector>

#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/hilbert.hpp"

/// Continuous-pointer moments without weak values or the shifted-Gaussian
/// kernel table. In momentum space the post-selected pointer is
///   f(k) = ⟨χ_f| exp(−ig(k_x A + k_y B)) |χ_i⟩ ψ̃(k) / ⟨χ_f|χ_i⟩,
/// X acts as i∂/∂k_x, and every moment is a 2-D Gauss–Hermite sum.
namespace wvjoint::expm_oracle {

struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;  // for the weight e^{−t²}
};

/// Golub–Welsch rule with n nodes.
GaussHermite gauss_hermite(int n);

/// f(k) above, using hilbert::expm_hermitian for the evolution.
Complex momentum_amplitude(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                           const hilbert::Operator &b, double g, double sigma, double kx, double ky);

/// MomentReport with the same conventions as gaussian::moments.
/// Throws NonCommuting, OrthogonalPostselection, DegenerateNorm.
gaussian::MomentReport moments(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                               const hilbert::Operator &b, double g, double sigma, int nodes = 64);

}  // namespace wvjoint::expm_oracle

#endif
