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

#ifndef WVJOINT_WEAKVALUE_HPP
#define WVJOINT_WEAKVALUE_HPP

#include "wvjoint/hilbert.hpp"

namespace wvjoint::weakvalue {

/// Post-selections with |⟨post|pre⟩| at or below this are rejected.
inline constexpr double kMinOverlap = 1e-12;

struct WeakValueSet {
    Complex a_w;
    Complex b_w;
    Complex ab_w;
    Complex overlap;  // ⟨post|pre⟩
    double postselect_prob = 0.0;
};

/// ⟨post|obs|pre⟩ / ⟨post|pre⟩. Throws OrthogonalPostselection.
Complex weak_value(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &obs);

/// Single and joint weak values of a commuting pair; the joint value is the
/// weak value of the product a·b. Throws NonCommuting, OrthogonalPostselection.
WeakValueSet weak_value_set(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                            const hilbert::Operator &b);

/// |⟨post|pre⟩|² for normalized states. Throws NotNormalized.
double postselect_probability(const hilbert::Ket &pre, const hilbert::Ket &post);

}  // namespace wvjoint::weakvalue

#endif
