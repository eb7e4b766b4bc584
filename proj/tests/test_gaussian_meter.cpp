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
#include <numbers>

#include "support.hpp"
#include "wvjoint/closedform.hpp"
#include "wvjoint/error.hpp"
#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/hardy.hpp"
#include "wvjoint/scenarios.hpp"
#include "wvjoint/series.hpp"
#include "wvjoint/weakvalue.hpp"

namespace wvjoint {
namespace {

using gaussian::Monomial;
using hilbert::Ket;
using hilbert::Operator;
namespace pauli = hilbert::pauli;
using testing::expect_complex_near;

const Complex kI(0.0, 1.0);

void expect_report_near(const gaussian::MomentReport &m, const double (&want)[7], double tol) {
    EXPECT_NEAR(m.x, want[0], tol);
    EXPECT_NEAR(m.y, want[1], tol);
    EXPECT_NEAR(m.xy, want[2], tol);
    EXPECT_NEAR(m.x_py, want[3], tol);
    EXPECT_NEAR(m.x2, want[4], tol);
    EXPECT_NEAR(m.px_py, want[5], tol);
    EXPECT_NEAR(m.w_norm, want[6], tol);
}

// Reference values: independent position-grid simulation (see support.hpp).
TEST(GaussianMeter, FrozenInvolutoryMoments) {
    const auto pre = testing::fixed_pre();
    const auto post = testing::fixed_post();
    const auto a = testing::fixed_a_inv();
    const auto b = testing::fixed_b_inv();
    expect_report_near(gaussian::moments(gaussian::postselect(pre, post, a, b, 0.7, 1.0)),
                       {0.25348843551056727, -0.044682160121751295, 0.211131024249707, -0.1862038683072419,
                        0.4819846686877902, -0.03894992633471213, 0.8930266862260772},
                       1e-10);
    expect_report_near(gaussian::moments(gaussian::postselect(pre, post, a, b, 1.3, 0.8)),
                       {0.23933567713140186, 0.4673244341581279, 0.6647726433461871, -0.31255577273298485,
                        1.894805037638032, -0.03485484911600329, 0.9782142321300099},
                       1e-10);
}

TEST(GaussianMeter, FrozenProjectorMoments) {
    const auto pre = testing::fixed_pre();
    const auto post = testing::fixed_post();
    const auto a = testing::fixed_a_proj();
    const auto b = testing::fixed_b_proj();
    expect_report_near(gaussian::moments(gaussian::postselect(pre, post, a, b, 0.7, 1.0)),
                       {0.4835726936634196, 0.28376143228283884, 0.1950481179299068, -0.05283052013194965,
                        0.31930862126038506, -0.013049293434966858, 0.9623372825219441},
                       1e-10);
    expect_report_near(gaussian::moments(gaussian::postselect(pre, post, a, b, 1.3, 0.8)),
                       {0.8763551048203277, 0.6452507827082131, 0.7517695804713043, -0.23973092784270336,
                        1.152619603414474, -0.07037170735815626, 0.877699305160249},
                       1e-10);
}

TEST(GaussianMeter, JointEigenstateLeavesSingleShiftedTerm) {
    const Ket up{1.0, 0.0};
    const Ket k = hilbert::tensor(up, up);
    const Operator z1 = hilbert::tensor(pauli::z(), pauli::identity());
    const Operator z2 = hilbert::tensor(pauli::identity(), pauli::z());
    const auto sup = gaussian::postselect_involutory(k, k, z1, z2, 0.4, 1.0);
    ASSERT_EQ(sup.terms().size(), 1u);
    expect_complex_near(sup.terms()[0].coeff, 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(sup.terms()[0].shift.x, 0.4);
    EXPECT_DOUBLE_EQ(sup.terms()[0].shift.y, 0.4);

    const auto pr = gaussian::postselect_projector(k, k, hilbert::tensor(hilbert::projector(up), pauli::identity()),
                                                   hilbert::tensor(pauli::identity(), hilbert::projector(up)), 0.4,
                                                   1.0);
    ASSERT_EQ(pr.terms().size(), 1u);
    EXPECT_DOUBLE_EQ(pr.terms()[0].shift.x, 0.4);
    EXPECT_DOUBLE_EQ(pr.terms()[0].shift.y, 0.4);
}

TEST(GaussianMeter, ZeroCouplingReturnsInitialPointer) {
    const auto sup = gaussian::postselect(testing::fixed_pre(), testing::fixed_post(), testing::fixed_a_inv(),
                                          testing::fixed_b_inv(), 0.0, 1.0);
    ASSERT_EQ(sup.terms().size(), 1u);
    expect_complex_near(sup.terms()[0].coeff, 1.0, 1e-14);
    const auto m = gaussian::moments(sup);
    expect_report_near(m, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}, 1e-14);
}

TEST(GaussianMeter, HardyBranchCoefficients) {
    const auto h = hardy::build_scenario(hardy::MeterKind::Continuous);
    const auto one = gaussian::postselect_projector(h.pre, h.post, h.p_oa, h.p_ob, 1.0, 1.0);
    for (const auto &t : one.terms()) {
        EXPECT_FALSE(t.shift.x == 1.0 && t.shift.y == 1.0) << "c(g,g) must vanish";
    }
    // pa_w = pb_w = 0, pab_w = −1: c(0,0) = 1 − 0 − 0 − 1 vanishes, leaving
    // +1 at (g,0) and (0,g) and −1 at (g,g).
    const auto four = gaussian::postselect_projector(h.pre, h.post, h.p_noa, h.p_nob, 1.0, 1.0);
    ASSERT_EQ(four.terms().size(), 3u);
    for (const auto &t : four.terms()) {
        EXPECT_FALSE(t.shift.x == 0.0 && t.shift.y == 0.0);
        const double sign = (t.shift.x == t.shift.y) ? -1.0 : 1.0;
        expect_complex_near(t.coeff, sign, 1e-14);
    }
}

// Σ c·G(x − s) times the overlap must equal the system-contracted
// matrix exponential applied to the initial pointer, pointwise.
TEST(GaussianMeterProperty, ReconstructionAgainstMatrixExponential) {
    scenarios::Rng rng(11);
    std::uniform_real_distribution<double> gdist(-3.0, 3.0);
    const double sigma = 0.9;
    for (auto kind : {scenarios::PairKind::Involutory, scenarios::PairKind::Projector}) {
        const auto s = scenarios::random_scenario(kind, 4, rng);
        const Complex ov = hilbert::inner(s.post, s.pre);
        for (int i = 0; i < 20; ++i) {
            const double g = gdist(rng);
            const auto sup = gaussian::postselect(s.pre, s.post, s.a, s.b, g, sigma);
            // In momentum space the coupling is exp(−ig(kx A + ky B)); transform
            // back at each sample point with explicit shifted Gaussians per
            // joint eigenvector.
            for (double x : {-2.0, -0.3, 0.0, 0.8, 2.5}) {
                for (double y : {-1.7, 0.2, 1.1}) {
                    Complex want = 0.0;
                    for (const auto &e : hilbert::joint_eigenbasis(s.a, s.b)) {
                        const Ket v(e.vector);
                        want += hilbert::inner(s.post, v) * hilbert::inner(v, s.pre) *
                                gaussian::initial_pointer(x - g * e.lambda, y - g * e.mu, sigma);
                    }
                    const Complex got = ov * gaussian::amplitude(sup, x, y);
                    EXPECT_LE(std::abs(got - want), 1e-9);
                }
            }
            // Matrix-exponential check of the contracted evolution at a few k.
            for (double kx : {-0.9, 0.4}) {
                for (double ky : {-0.2, 1.3}) {
                    const Operator u = hilbert::expm_hermitian(Complex(kx) * s.a + Complex(ky) * s.b, -kI * g);
                    const Complex want = hilbert::inner(s.post, u * s.pre) *
                                         gaussian::initial_pointer_momentum(kx, ky, sigma);
                    const Complex got = ov * gaussian::momentum_amplitude(sup, kx, ky);
                    EXPECT_LE(std::abs(got - want), 1e-9);
                }
            }
        }
    }
}

TEST(GaussianMeterProperty, NormMatchesClosedForms) {
    scenarios::Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        const auto s = scenarios::random_scenario(scenarios::PairKind::Involutory, 4, rng);
        const double g = 0.25 * (i + 1) / 5.0;
        const closedform::ClosedFormInputs in{weakvalue::weak_value_set(s.pre, s.post, s.a, s.b), g, 1.0};
        const double w = gaussian::overlap_moment(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0),
                                                  Monomial::One)
                             .real();
        EXPECT_LE(std::abs(closedform::w1(in) / 4.0 - w), 1e-10 * w);
    }
    for (int i = 0; i < 20; ++i) {
        const auto s = scenarios::random_scenario(scenarios::PairKind::Projector, 4, rng);
        const double g = 0.25 * (i + 1) / 5.0;
        const closedform::ClosedFormInputs in{weakvalue::weak_value_set(s.pre, s.post, s.a, s.b), g, 1.0};
        const double w = gaussian::overlap_moment(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0),
                                                  Monomial::One)
                             .real();
        EXPECT_LE(std::abs(closedform::reconciled::w_proj(in) - w), 1e-10 * w);
    }
}

TEST(GaussianMeterProperty, MomentsAreReal) {
    scenarios::Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        const auto kind = i % 2 ? scenarios::PairKind::Involutory : scenarios::PairKind::Projector;
        const auto s = scenarios::random_scenario(kind, 4, rng);
        const auto sup = gaussian::postselect(s.pre, s.post, s.a, s.b, 0.8, 1.0);
        const double w = gaussian::overlap_moment(sup, Monomial::One).real();
        for (Monomial m : {Monomial::One, Monomial::X, Monomial::Y, Monomial::XY, Monomial::X2, Monomial::PxPy,
                           Monomial::Py2}) {
            EXPECT_LE(std::abs(gaussian::overlap_moment(sup, m).imag()), 1e-10 * w) << gaussian::monomial_name(m);
        }
    }
}

TEST(GaussianMeterProperty, DependsOnCouplingOnlyThroughRatio) {
    scenarios::Rng rng(14);
    for (int i = 0; i < 10; ++i) {
        const auto kind = i % 2 ? scenarios::PairKind::Involutory : scenarios::PairKind::Projector;
        const auto s = scenarios::random_scenario(kind, 4, rng);
        const double ratio = 0.3 + 0.2 * i;
        const auto m1 = gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, ratio, 1.0));
        for (double sigma : {0.25, 3.0}) {
            const auto m = gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, ratio * sigma, sigma));
            const double s2 = sigma * sigma;
            EXPECT_NEAR(m.x / sigma, m1.x, 1e-12);
            EXPECT_NEAR(m.y / sigma, m1.y, 1e-12);
            EXPECT_NEAR(m.xy / s2, m1.xy, 1e-12);
            EXPECT_NEAR(m.x_py, m1.x_py, 1e-12);
            EXPECT_NEAR(m.x2 / s2, m1.x2, 1e-12);
            EXPECT_NEAR(m.px_py * s2, m1.px_py, 1e-12);
            EXPECT_NEAR(m.w_norm, m1.w_norm, 1e-12);
        }
    }
}

TEST(GaussianMeterProperty, DisplacementsVanishAtLeastLinearly) {
    scenarios::Rng rng(15);
    for (int i = 0; i < 10; ++i) {
        const auto kind = i % 2 ? scenarios::PairKind::Involutory : scenarios::PairKind::Projector;
        const auto s = scenarios::random_scenario(kind, 4, rng, false, 0.3);
        for (double g : {1e-3, 1e-4, 1e-5}) {
            const auto m = gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0));
            for (double v : {m.x, m.y, m.xy, m.x_py, m.x2, m.px_py}) {
                EXPECT_LE(std::abs(v), 50.0 * g);
            }
        }
    }
}

TEST(GaussianMeter, SigmaXZExampleSeriesHasNoLinearTerm) {
    const auto s = scenarios::sigma_xz_example(std::numbers::pi / 6.0);
    const auto x = [&](double g) {
        return gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0)).x;
    };
    const auto fit = series::fit_parity_series(x, series::Parity::Odd, 2, 0.05, 0.2, 3);
    EXPECT_NEAR(fit[0], 0.0, 1e-12);
    EXPECT_NEAR(x(0.1), 0.0, 1e-12);
}

TEST(OverlapMoment, SingleTermExamples) {
    const gaussian::GaussianSuperposition centered(1.0, {{1.0, {0.0, 0.0}}}, 1.0);
    EXPECT_NEAR(gaussian::overlap_moment(centered, Monomial::X).real(), 0.0, 1e-15);
    const gaussian::GaussianSuperposition shifted(1.0, {{1.0, {0.6, 0.0}}}, 1.0);
    EXPECT_NEAR(gaussian::overlap_moment(shifted, Monomial::X).real(), 0.6, 1e-15);
}

TEST(OverlapMoment, TwoEqualTermsMeanIsMidpoint) {
    const double g = 0.9;
    const double sigma = 0.7;
    const gaussian::GaussianSuperposition sup(sigma, {{0.5, {0.0, 0.0}}, {0.5, {g, 0.0}}}, 1.0);
    const Complex w = gaussian::overlap_moment(sup, Monomial::One);
    const Complex x = gaussian::overlap_moment(sup, Monomial::X);
    const double e = std::exp(-g * g / (8.0 * sigma * sigma));
    EXPECT_NEAR(w.real(), 0.5 * (1.0 + e), 1e-15);
    EXPECT_NEAR((x / w).real(), g / 2.0, 1e-15);
}

// Kernel table against trapezoid quadrature on [−40σ, 40σ], 10⁵ points.
TEST(Kernel, MatchesQuadrature) {
    const double sigma = 0.8;
    const int n = 100000;
    const double lo = -40.0 * sigma;
    const double h = 80.0 * sigma / (n - 1);
    const auto G = [&](double x, double c) {
        return std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25) *
               std::exp(-(x - c) * (x - c) / (4.0 * sigma * sigma));
    };
    for (auto [a, b] : {std::pair{0.0, 0.0}, {0.3, -0.5}, {-1.2, 0.7}, {2.0, 2.0}}) {
        double ov = 0, pos = 0, pos2 = 0, mom_im = 0, mom2 = 0;
        for (int i = 0; i < n; ++i) {
            const double x = lo + i * h;
            const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
            const double ga = G(x, a);
            const double gb = G(x, b);
            const double d1 = -(x - b) / (2.0 * sigma * sigma) * gb;
            const double d2 = ((x - b) * (x - b) / (4.0 * std::pow(sigma, 4)) - 1.0 / (2.0 * sigma * sigma)) * gb;
            ov += w * ga * gb;
            pos += w * ga * x * gb;
            pos2 += w * ga * x * x * gb;
            mom_im += w * ga * d1;  // ⟨a|p|b⟩ = −i ∫ G_a G_b'
            mom2 += -w * ga * d2;
        }
        expect_complex_near(gaussian::kernel::overlap(a, b, sigma), ov, 1e-8);
        expect_complex_near(gaussian::kernel::position(a, b, sigma), pos, 1e-8);
        expect_complex_near(gaussian::kernel::position_sq(a, b, sigma), pos2, 1e-8);
        expect_complex_near(gaussian::kernel::momentum(a, b, sigma), Complex(0.0, -mom_im), 1e-8);
        expect_complex_near(gaussian::kernel::momentum_sq(a, b, sigma), mom2, 1e-8);
    }
}

TEST(GaussianMeter, Errors) {
    const auto pre = testing::fixed_pre();
    const auto post = testing::fixed_post();
    EXPECT_THROW(gaussian::postselect(pre, post, testing::fixed_a_inv(), testing::fixed_b_inv(), 0.5, 0.0), Error);
    EXPECT_THROW(gaussian::postselect_involutory(pre, post, testing::fixed_a_proj(), testing::fixed_b_proj(), 0.5, 1.0),
                 Error);
    EXPECT_THROW(gaussian::postselect_projector(pre, post, testing::fixed_a_inv(), testing::fixed_b_inv(), 0.5, 1.0),
                 Error);
    const Operator x1 = hilbert::tensor(pauli::x(), pauli::identity());
    const Operator z1 = hilbert::tensor(pauli::z(), pauli::identity());
    EXPECT_THROW(gaussian::postselect(pre, post, x1, z1, 0.5, 1.0), Error);
    EXPECT_THROW(gaussian::monomial_from_name("X3"), Error);
    EXPECT_EQ(gaussian::monomial_from_name("PxPy"), Monomial::PxPy);
}

}  // namespace
}  // namespace wvjoint
