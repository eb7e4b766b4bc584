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

#include <cmath>

#include "support.hpp"
#include "wvjoint/error.hpp"
#include "wvjoint/scenarios.hpp"
#include "wvjoint/series.hpp"
#include "wvjoint/weakvalue.hpp"

namespace wvjoint {
namespace {

TEST(Series, RecoversOddPolynomial) {
    const auto f = [](double g) { return 0.7 * g - 2.5 * g * g * g + 4.0 * std::pow(g, 5); };
    const auto c = series::fit_parity_series(f, series::Parity::Odd, 3, 1e-2, 1e-1, 7);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_NEAR(c[0], 0.7, 1e-10);
    EXPECT_NEAR(c[1], -2.5, 1e-8);
    EXPECT_NEAR(c[2], 4.0, 1e-5);
}

TEST(Series, RecoversEvenPolynomial) {
    const auto f = [](double g) { return 1.5 + 0.25 * g * g - 3.0 * std::pow(g, 4); };
    const auto c = series::fit_parity_series(f, series::Parity::Even, 3, 1e-2, 1e-1, 7);
    EXPECT_NEAR(c[0], 1.5, 1e-12);
    EXPECT_NEAR(c[1], 0.25, 1e-9);
    EXPECT_NEAR(c[2], -3.0, 1e-6);
}

TEST(Series, PowerLawFit) {
    std::vector<double> x{0.1, 0.2, 0.4, 0.8};
    std::vector<double> y;
    for (double v : x) {
        y.push_back(-1.75 * v * v);
    }
    const auto fit = series::fit_power_law(x, y, 2.0);
    EXPECT_NEAR(fit.coeff, -1.75, 1e-13);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(Series, Spacings) {
    const auto l = series::log_spaced(1e-3, 5.0, 200);
    ASSERT_EQ(l.size(), 200u);
    EXPECT_DOUBLE_EQ(l.front(), 1e-3);
    EXPECT_NEAR(l.back(), 5.0, 1e-14);
    EXPECT_NEAR(l[1] / l[0], l[100] / l[99], 1e-12);
    const auto s = series::linear_spaced(0.0, 1.0, 11);
    EXPECT_NEAR(s[3], 0.3, 1e-15);
    EXPECT_THROW(series::log_spaced(0.0, 1.0, 5), Error);
}

TEST(Scenarios, UnitaryAndPairs) {
    scenarios::Rng rng(11);
    const ComplexMatrix u = scenarios::random_unitary(4, rng);
    testing::expect_matrix_near(u.adjoint() * u, ComplexMatrix::Identity(4, 4), 1e-13);
    for (auto kind : {scenarios::PairKind::Involutory, scenarios::PairKind::Projector}) {
        const auto [a, b] = scenarios::random_pair(kind, 4, rng);
        EXPECT_TRUE(hilbert::check_commute(a, b));
        const auto ca = hilbert::classify(a);
        EXPECT_EQ(ca.involutory, kind == scenarios::PairKind::Involutory);
        EXPECT_EQ(ca.idempotent, kind == scenarios::PairKind::Projector);
    }
    EXPECT_THROW(scenarios::random_pair(scenarios::PairKind::Projector, 1, rng), Error);
}

TEST(Scenarios, OverlapFloorAndDeterminism) {
    scenarios::Rng r1(5);
    scenarios::Rng r2(5);
    for (int i = 0; i < 20; ++i) {
        const auto s = scenarios::random_scenario(scenarios::PairKind::Projector, 4, r1, false, 0.4);
        const auto t = scenarios::random_scenario(scenarios::PairKind::Projector, 4, r2, false, 0.4);
        EXPECT_GE(std::abs(hilbert::inner(s.post, s.pre)), 0.4);
        EXPECT_EQ(s.pre.amplitudes(), t.pre.amplitudes());
        EXPECT_EQ(s.a.matrix(), t.a.matrix());
    }
}

TEST(Scenarios, RealScenariosAreReal) {
    scenarios::Rng rng(6);
    const auto s = scenarios::random_scenario(scenarios::PairKind::Involutory, 4, rng, true);
    EXPECT_EQ(s.pre.amplitudes().imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(s.a.matrix().imag().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Scenarios, QubitInvolution) {
    scenarios::Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        const auto s = scenarios::random_qubit_involution(rng);
        EXPECT_TRUE(s.is_hermitian());
        EXPECT_TRUE(s.is_involutory());
    }
}

TEST(Scenarios, SigmaXzWeakValues) {
    const double theta = 0.4;
    const auto s = scenarios::sigma_xz_example(theta);
    const auto wv = weakvalue::weak_value_set(s.pre, s.post, s.a, s.b);
    testing::expect_complex_near(wv.a_w, Complex(0.0, -std::tan(theta)), 1e-14);
    testing::expect_complex_near(wv.b_w, 1.0, 1e-14);
    testing::expect_complex_near(wv.ab_w, Complex(0.0, -std::tan(theta)), 1e-14);
}

}  // namespace
}  // namespace wvjoint
