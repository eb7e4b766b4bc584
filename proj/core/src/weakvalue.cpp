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

#include "wvjoint/weakvalue.hpp"

#include <algorithm>
#include <cmath>

#include "wvjoint/error.hpp"

namespace wvjoint::weakvalue {

namespace {

Complex checked_overlap(const hilbert::Ket &pre, const hilbert::Ket &post) {
    const Complex overlap = hilbert::inner(post, pre);
    if (std::abs(overlap) <= kMinOverlap) {
        throw Error(ErrorCode::OrthogonalPostselection, "|<post|pre>| <= 1e-12");
    }
    return overlap;
}

}  // namespace

Complex weak_value(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &obs) {
    const Complex overlap = checked_overlap(pre, post);
    return hilbert::inner(post, obs * pre) / overlap;
}

WeakValueSet weak_value_set(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                            const hilbert::Operator &b) {
    if (!hilbert::check_commute(a, b)) {
        throw Error(ErrorCode::NonCommuting, "weak_value_set requires [a, b] = 0");
    }
    const Complex overlap = checked_overlap(pre, post);
    WeakValueSet out;
    out.overlap = overlap;
    out.postselect_prob = std::norm(overlap) / (pre.amplitudes().squaredNorm() * post.amplitudes().squaredNorm());
    out.a_w = hilbert::inner(post, a * pre) / overlap;
    out.b_w = hilbert::inner(post, b * pre) / overlap;
    out.ab_w = hilbert::inner(post, (a * b) * pre) / overlap;
    return out;
}

double postselect_probability(const hilbert::Ket &pre, const hilbert::Ket &post) {
    if (!pre.is_normalized() || !post.is_normalized()) {
        throw Error(ErrorCode::NotNormalized, "postselect_probability needs normalized states");
    }
    return std::min(1.0, std::norm(hilbert::inner(post, pre)));
}

}  // namespace wvjoint::weakvalue
