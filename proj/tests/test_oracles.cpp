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
#include "wvjoint/error.hpp"
#include "wvjoint/expm_oracle.hpp"
#include "wvjoint/gaussian_meter.hpp"
#include "wvjoint/grid_oracle.hpp"
#include "wvjoint/hardy.hpp"
#include "wvjoint/scenarios.hpp"
#include "wvjoint/weakvalue.hpp"

namespace wvjoint {
namespace {

using gaussian::MomentReport;
using hilbert::Ket;
namespace pauli = hilbert::pauli;

double max_diff(const MomentReport &a, const MomentReport &b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.xy - b.xy), std::abs(a.x_py - b.x_py),
                     std::abs(a.x2 - b.x2), std::abs(a.px_py - b.px_py), std::abs(a.w_norm - b.w_norm)});
}

TEST(GaussHermite, IntegratesPolynomialsExactly) {
    const auto q = expm_oracle::gauss_hermite(20);
    ASSERT_EQ(q.nodes.size(), 20u);
    double m0 = 0, m2 = 0, m4 = 0, m3 = 0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double t = q.nodes[i];
        m0 += q.weights[i];
        m2 += q.weights[i] * t * t;
        m3 += q.weights[i] * t * t * t;
        m4 += q.weights[i] * std::pow(t, 4);
    }
    const double sp = std::sqrt(std::numbers::pi);
    EXPECT_NEAR(m0, sp, 1e-13);
    EXPECT_NEAR(m2, sp / 2.0, 1e-13);
    EXPECT_NEAR(m3, 0.0, 1e-13);
    EXPECT_NEAR(m4, 3.0 * sp / 4.0, 1e-13);
}

TEST(ExpmOracle, FrozenFixedScenario) {
    const auto m = expm_oracle::moments(testing::fixed_pre(), testing::fixed_post(), testing::fixed_a_inv(),
                                        testing::fixed_b_inv(), 0.7, 1.0);
    EXPECT_NEAR(m.x, 0.25348843551056727, 1e-10);
    EXPECT_NEAR(m.xy, 0.211131024249707, 1e-10);
    EXPECT_NEAR(m.x_py, -0.1862038683072419, 1e-10);
    EXPECT_NEAR(m.x2, 0.4819846686877902, 1e-10);
    EXPECT_NEAR(m.px_py, -0.03894992633471213, 1e-10);
    EXPECT_NEAR(m.w_norm, 0.8930266862260772, 1e-10);
}

TEST(ExpmOracle, AgreesWithGaussianEngine) {
    scenarios::Rng rng(401);
    for (int i = 0; i < 10; ++i) {
        const auto kind = i % 2 ? scenarios::PairKind::Involutory : scenarios::PairKind::Projector;
        const auto s = scenarios::random_scenario(kind, 4, rng);
        for (double g : {0.01, 1.0, 3.0}) {
            const auto e = gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0));
            const auto o = expm_oracle::moments(s.pre, s.post, s.a, s.b, g, 1.0);
            EXPECT_LE(max_diff(e, o), 1e-10);
        }
    }
}

TEST(GridOracle, InitialStateNormAndMoments) {
    const Ket pre{1.0, 0.0};
    const auto gs = grid::init_grid(1.0, 512, 40.0, pre);
    EXPECT_NEAR(grid::position_norm(gs), 1.0, 1e-10);
    const auto post = grid::postselect_grid(gs, pre);
    EXPECT_NEAR(post.prob, 1.0, 1e-10);
    const auto m = grid::grid_moments(post.pointer, post.prob);
    EXPECT_NEAR(m.x, 0.0, 1e-8);
    EXPECT_NEAR(m.x2, 0.0, 1e-8);  // ⟨X²⟩ − σ²
    EXPECT_NEAR(m.x_py, 0.0, 1e-12);
}

TEST(GridOracle, RejectsBadInputs) {
    EXPECT_THROW(grid::init_grid(1.0, 512, 40.0, Ket{1.0, 1.0}), Error);
    EXPECT_THROW(grid::init_grid(1.0, 500, 40.0, Ket{1.0, 0.0}), Error);
    try {
        grid::init_grid(1.0, 512, 5.0, Ket{1.0, 0.0});
        FAIL() << "expected ExtentTooSmall";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ExtentTooSmall);
    }
    const auto gs = grid::init_grid(1.0, 256, 40.0, Ket{1.0, 0.0});
    EXPECT_THROW(grid::postselect_grid(gs, Ket{0.0, 1.0}), Error);
}

TEST(GridOracle, ZeroCouplingIsIdentity) {
    const Ket pre = Ket{0.6, Complex(0.0, 0.8)};
    const auto gs = grid::init_grid(1.0, 256, 40.0, pre);
    const auto out = grid::apply_coupling(gs, pauli::z(), pauli::z(), 0.0);
    for (std::size_t c = 0; c < gs.fields.size(); ++c) {
        double d = 0.0;
        for (std::size_t i = 0; i < gs.fields[c].size(); ++i) {
            d = std::max(d, std::abs(gs.fields[c][i] - out.fields[c][i]));
        }
        EXPECT_LE(d, 1e-14);
    }
}

TEST(GridOracle, EigenbranchMovesToShift) {
    const Ket up{1.0, 0.0};
    const Ket k = hilbert::tensor(up, up);
    const auto z1 = hilbert::tensor(pauli::z(), pauli::identity());
    const auto z2 = hilbert::tensor(pauli::identity(), pauli::z());
    const auto m = grid::run(k, k, z1, z2, 0.8, 1.0, 256);
    EXPECT_NEAR(m.x, 0.8, 1e-8);
    EXPECT_NEAR(m.y, 0.8, 1e-8);
    EXPECT_NEAR(m.xy, 0.64, 1e-8);
}

TEST(GridOracle, ParsevalAfterCoupling) {
    const auto h = hardy::build_scenario(hardy::MeterKind::Continuous);
    const auto gs = grid::apply_coupling(grid::init_grid(1.0, 256, 40.0, h.pre, 1.0), h.p_noa, h.p_nob, 1.0);
    EXPECT_NEAR(grid::position_norm(gs), grid::spectral_norm(gs), 1e-10);
    EXPECT_NEAR(grid::position_norm(gs), 1.0, 1e-10);
}

TEST(GridOracle, HardyProjectorMomentsMatchEngine) {
    const auto h = hardy::build_scenario(hardy::MeterKind::Continuous);
    for (int c : {2, 4}) {
        const auto [a, b] = hardy::case_pair(h, c);
        const auto e = gaussian::moments(gaussian::postselect(h.pre, h.post, a, b, 1.0, 1.0));
        const auto g = grid::run(h.pre, h.post, a, b, 1.0, 1.0, 512);
        EXPECT_LE(max_diff(e, g), 1e-6);
    }
}

TEST(GridOracle, ProbabilityApproachesPostselectionProbability) {
    const auto h = hardy::build_scenario(hardy::MeterKind::Continuous);
    const auto gs = grid::apply_coupling(grid::init_grid(1.0, 256, 40.0, h.pre, 1e-3), h.p_oa, h.p_ob, 1e-3);
    EXPECT_NEAR(grid::postselect_grid(gs, h.post).prob, 1.0 / 12.0, 1e-5);
}

TEST(GridOracle, RealFieldHasNoMixedMomentCorrelation) {
    // Real pre/post/observables with g = 0: the pointer is real.
    const auto gs = grid::init_grid(1.0, 256, 40.0, Ket{0.6, 0.8});
    const auto m = grid::grid_moments(grid::postselect_grid(gs, Ket{1.0, 0.0}).pointer, 0.36);
    EXPECT_NEAR(m.x_py, 0.0, 1e-14);
}

TEST(GridOracleProperty, ErrorShrinksAsResolutionDoubles) {
    scenarios::Rng rng(402);
    for (int i = 0; i < 3; ++i) {
        const auto kind = i % 2 ? scenarios::PairKind::Involutory : scenarios::PairKind::Projector;
        const auto s = scenarios::random_scenario(kind, 4, rng);
        const double g = 1.5;
        const auto e = gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0));
        // A wide extent keeps the coarse grids under-resolved so the trend is visible.
        const double extent = 400.0;
        double prev = INFINITY;
        for (int n : {256, 512, 1024}) {
            const double d = max_diff(e, grid::run(s.pre, s.post, s.a, s.b, g, 1.0, n, extent));
            EXPECT_LT(d, prev) << "n=" << n;
            prev = d;
        }
    }
}

TEST(GridOracleProperty, TripleAgreementAtProductionResolution) {
    scenarios::Rng rng(403);
    for (int i = 0; i < 4; ++i) {
        const auto kind = i % 2 ? scenarios::PairKind::Involutory : scenarios::PairKind::Projector;
        const auto s = scenarios::random_scenario(kind, 4, rng);
        for (double g : {0.1, 2.0}) {
            const auto e = gaussian::moments(gaussian::postselect(s.pre, s.post, s.a, s.b, g, 1.0));
            const auto o = expm_oracle::moments(s.pre, s.post, s.a, s.b, g, 1.0);
            const auto r = grid::run(s.pre, s.post, s.a, s.b, g, 1.0, 512);
            EXPECT_LE(max_diff(e, r), 1e-6);
            EXPECT_LE(max_diff(o, r), 1e-6);
        }
    }
}

}  // namespace
}  // namespace wvjoint
