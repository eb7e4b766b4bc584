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

#ifndef WVJOINT_SCENARIOS_HPP
#define WVJOINT_SCENARIOS_HPP

#include <cstdint>
#include <random>

#include "wvjoint/hilbert.hpp"

/// Seeded random test scenarios and the fixed σx⊗σz example.
namespace wvjoint::scenarios {

using Rng = std::mt19937_64;

enum class PairKind { Involutory, Projector };

struct PairScenario {
    hilbert::Ket pre;
    hilbert::Ket post;
    hilbert::Operator a;
    hilbert::Operator b;
};

/// Normalized ket with i.i.d. Gaussian real and imaginary parts.
hilbert::Ket random_ket(std::size_t dim, Rng &rng, bool real = false);

/// Unitary (orthogonal when real) from the QR factor of a Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng &rng, bool real = false);

/// Commuting pair diagonal in a shared random basis, eigenvalues ±1
/// (Involutory) or 0/1 (Projector). Each operator gets both eigenvalues.
std::pair<hilbert::Operator, hilbert::Operator> random_pair(PairKind kind, std::size_t dim, Rng &rng,
                                                            bool real = false);

/// Random pre/post with |⟨post|pre⟩| ≥ min_overlap and a random pair.
PairScenario random_scenario(PairKind kind, std::size_t dim, Rng &rng, bool real = false,
                             double min_overlap = 0.1);

/// Single-qubit n·σ for a random unit vector n.
hilbert::Operator random_qubit_involution(Rng &rng);

/// pre = |+z,+z⟩, post = (cos θ|+z⟩ + i sin θ|−z⟩)⊗|+z⟩, A = σx⊗I, B = I⊗σz.
PairScenario sigma_xz_example(double theta);

}  // namespace wvjoint::scenarios

#endif
