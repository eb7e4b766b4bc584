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

#include "wvjoint/expm_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "wvjoint/error.hpp"
#include "wvjoint/weakvalue.hpp"

namespace wvjoint::expm_oracle {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_inputs(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                    const hilbert::Operator &b, double g, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(g)) {
        throw Error(ErrorCode::InvalidArgument, "need finite g and sigma > 0");
    }
    if (pre.dim() != a.dim() || post.dim() != a.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "states and observables differ in dimension");
    }
    if (!hilbert::check_commute(a, b)) {
        throw Error(ErrorCode::NonCommuting, "expm oracle requires [a, b] = 0");
    }
}

Complex checked_overlap(const hilbert::Ket &pre, const hilbert::Ket &post) {
    const Complex overlap = hilbert::inner(post, pre);
    if (std::abs(overlap) <= weakvalue::kMinOverlap) {
        throw Error(ErrorCode::OrthogonalPostselection, "|<post|pre>| <= 1e-12");
    }
    return overlap;
}

}  // namespace

GaussHermite gauss_hermite(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "gauss_hermite needs n >= 1");
    }
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double beta = std::sqrt(0.5 * i);
        jacobi(i, i - 1) = beta;
        jacobi(i - 1, i) = beta;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    GaussHermite rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    for (int i = 0; i < n; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        rule.weights[static_cast<std::size_t>(i)] = sqrt_pi * v0 * v0;
    }
    return rule;
}

Complex momentum_amplitude(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                           const hilbert::Operator &b, double g, double sigma, double kx, double ky) {
    require_inputs(pre, post, a, b, g, sigma);
    const Complex overlap = checked_overlap(pre, post);
    const hilbert::Operator h = Complex(kx) * a + Complex(ky) * b;
    const hilbert::Operator u = hilbert::expm_hermitian(h, -kI * g);
    return hilbert::inner(post, u * pre) / overlap * gaussian::initial_pointer_momentum(kx, ky, sigma);
}

gaussian::MomentReport moments(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                               const hilbert::Operator &b, double g, double sigma, int nodes) {
    require_inputs(pre, post, a, b, g, sigma);
    const Complex overlap = checked_overlap(pre, post);
    const GaussHermite rule = gauss_hermite(nodes);
    const auto n = static_cast<std::size_t>(nodes);
    const double to_k = 1.0 / (std::sqrt(2.0) * sigma);
    const double s2 = sigma * sigma;

    // Row factors ⟨χ_f|(·)U_x(k_x) and column factors U_y(k_y)(·)|χ_i⟩; U
    // factorizes because a and b commute.
    const ComplexMatrix aa = a.matrix() * a.matrix();
    std::vector<Eigen::RowVectorXcd> row0(n), row_a(n), row_aa(n);
    std::vector<ComplexVector> col0(n), col_b(n);
    std::vector<double> ks(n);
    const Eigen::RowVectorXcd bra = post.amplitudes().adjoint() / overlap;
    for (std::size_t i = 0; i < n; ++i) {
        const double k = rule.nodes[i] * to_k;
        ks[i] = k;
        const ComplexMatrix ux = hilbert::expm_hermitian(a, -kI * g * k).matrix();
        const ComplexMatrix uy = hilbert::expm_hermitian(b, -kI * g * k).matrix();
        row0[i] = bra * ux;
        row_a[i] = bra * a.matrix() * ux;
        row_aa[i] = bra * aa * ux;
        col0[i] = uy * pre.amplitudes();
        col_b[i] = b.matrix() * col0[i];
    }

    double w = 0.0, mx = 0.0, my = 0.0, mxy = 0.0, mx2 = 0.0, mxpy = 0.0, mpxpy = 0.0;
    const double g2 = g * g;
    for (std::size_t i = 0; i < n; ++i) {
        const double kx = ks[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double ky = ks[j];
            const double wt = rule.weights[i] * rule.weights[j] / std::numbers::pi;
            const Complex f = (row0[i] * col0[j])(0);
            const Complex ua = (row_a[i] * col0[j])(0);
            const Complex ub = (row0[i] * col_b[j])(0);
            const Complex uab = (row_a[i] * col_b[j])(0);
            const Complex uaa = (row_aa[i] * col0[j])(0);

            const Complex dx = -kI * g * ua - 2.0 * s2 * kx * f;
            const Complex dy = -kI * g * ub - 2.0 * s2 * ky * f;
            const Complex dxy = -g2 * uab + 2.0 * kI * s2 * g * (ky * ua + kx * ub) + 4.0 * s2 * s2 * kx * ky * f;
            const Complex dxx = -g2 * uaa + 4.0 * kI * s2 * g * kx * ua + (4.0 * s2 * s2 * kx * kx - 2.0 * s2) * f;

            const Complex fc = std::conj(f);
            w += wt * std::norm(f);
            mx += wt * (fc * kI * dx).real();
            my += wt * (fc * kI * dy).real();
            mxy += wt * (-fc * dxy).real();
            mx2 += wt * (-fc * dxx).real();
            mxpy += wt * (fc * kI * ky * dx).real();
            mpxpy += wt * kx * ky * std::norm(f);
        }
    }
    if (!(w >= gaussian::kMinNorm)) {
        throw Error(ErrorCode::DegenerateNorm, "post-selected pointer norm W = " + std::to_string(w));
    }
    gaussian::MomentReport r;
    r.x = mx / w;
    r.y = my / w;
    r.xy = mxy / w;
    r.x_py = mxpy / w;
    r.x2 = mx2 / w - s2;
    r.px_py = mpxpy / w;
    r.w_norm = w;
    return r;
}

}  // namespace wvjoint::expm_oracle
