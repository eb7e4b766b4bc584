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

#ifndef WVJOINT_TESTS_SUPPORT_HPP
#define WVJOINT_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include "wvjoint/hilbert.hpp"

namespace wvjoint::testing {

// Fixed 4-dim scenario shared by the frozen-value tests. The reference
// moments were computed by an independent position-grid simulation
// (1024² points, FFT derivatives).
inline hilbert::Ket fixed_pre() {
    return hilbert::Ket{1.0, Complex(0.5, 0.5), -0.3, Complex(0.0, 0.2)}.normalized();
}
inline hilbert::Ket fixed_post() {
    return hilbert::Ket{0.6, Complex(0.2, -0.4), 0.5, Complex(-0.1, 0.3)}.normalized();
}
inline hilbert::Operator fixed_a_inv() {
    return hilbert::tensor(hilbert::pauli::x(), hilbert::pauli::identity());
}
inline hilbert::Operator fixed_b_inv() {
    return hilbert::tensor(hilbert::pauli::identity(), hilbert::pauli::y());
}
inline hilbert::Operator fixed_a_proj() {
    return hilbert::tensor(hilbert::projector(hilbert::Ket{1.0, 1.0}), hilbert::pauli::identity());
}
inline hilbert::Operator fixed_b_proj() {
    return hilbert::tensor(hilbert::pauli::identity(), hilbert::projector(hilbert::Ket{1.0, Complex(0.0, 1.0)}));
}

inline void expect_matrix_near(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    ASSERT_EQ(a.rows(), b.rows());
    ASSERT_EQ(a.cols(), b.cols());
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), tol);
}

inline void expect_complex_near(Complex a, Complex b, double tol) {
    EXPECT_NEAR(a.real(), b.real(), tol);
    EXPECT_NEAR(a.imag(), b.imag(), tol);
}

}  // namespace wvjoint::testing

#endif
