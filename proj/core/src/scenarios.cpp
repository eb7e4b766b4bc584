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

#include "wvjoint/scenarios.hpp"

#include <cmath>

#include <Eigen/QR>

#include "wvjoint/error.hpp"

namespace wvjoint::scenarios {

namespace {

Complex draw(std::normal_distribution<double> &n, Rng &rng, bool real) {
    const double re = n(rng);
    const double im = real ? 0.0 : n(rng);
    return {re, im};
}

}  // namespace

hilbert::Ket random_ket(std::size_t dim, Rng &rng, bool real) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = draw(n, rng, real);
    }
    return hilbert::Ket(v).normalized();
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng, bool real) {
    std::normal_distribution<double> n(0.0, 1.0);
    const auto d = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            m(i, j) = draw(n, rng, real);
        }
    }
    const Eigen::HouseholderQR<ComplexMatrix> qr(m);
    return qr.householderQ() * ComplexMatrix::Identity(d, d);
}

std::pair<hilbert::Operator, hilbert::Operator> random_pair(PairKind kind, std::size_t dim, Rng &rng, bool real) {
    if (dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "random_pair needs dim >= 2");
    }
    const ComplexMatrix u = random_unitary(dim, rng, real);
    const double hi = 1.0;
    const double lo = kind == PairKind::Involutory ? -1.0 : 0.0;
    std::bernoulli_distribution coin(0.5);
    const auto d = static_cast<Eigen::Index>(dim);
    const auto diagonal = [&]() {
        Eigen::VectorXd e(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            e(i) = coin(rng) ? hi : lo;
        }
        // Force both eigenvalues to appear.
        e(0) = hi;
        e(d - 1) = lo;
        std::uniform_int_distribution<Eigen::Index> pick(0, d - 1);
        std::swap(e(0), e(pick(rng)));
        return e;
    };
    const Eigen::VectorXd da = diagonal();
    const Eigen::VectorXd db = diagonal();
    const ComplexMatrix ma = u * da.cast<Complex>().asDiagonal() * u.adjoint();
    const ComplexMatrix mb = u * db.cast<Complex>().asDiagonal() * u.adjoint();
    // Symmetrize away rounding so the structural checks see exact Hermiticity.
    return {hilbert::Operator(0.5 * (ma + ma.adjoint())), hilbert::Operator(0.5 * (mb + mb.adjoint()))};
}

PairScenario random_scenario(PairKind kind, std::size_t dim, Rng &rng, bool real, double min_overlap) {
    for (;;) {
        hilbert::Ket pre = random_ket(dim, rng, real);
        hilbert::Ket post = random_ket(dim, rng, real);
        if (std::abs(hilbert::inner(post, pre)) < min_overlap) {
            continue;
        }
        auto [a, b] = random_pair(kind, dim, rng, real);
        return PairScenario{std::move(pre), std::move(post), std::move(a), std::move(b)};
    }
}

hilbert::Operator random_qubit_involution(Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double v[3];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double &c : v) {
            c = n(rng);
            norm += c * c;
        }
    } while (norm < 1e-6);
    norm = std::sqrt(norm);
    return Complex(v[0] / norm) * hilbert::pauli::x() + Complex(v[1] / norm) * hilbert::pauli::y() +
           Complex(v[2] / norm) * hilbert::pauli::z();
}

PairScenario sigma_xz_example(double theta) {
    const hilbert::Ket up{1.0, 0.0};
    const hilbert::Ket tilted{std::cos(theta), Complex(0.0, std::sin(theta))};
    const hilbert::Operator id = hilbert::pauli::identity();
    return PairScenario{hilbert::tensor(up, up), hilbert::tensor(tilted, up),
                        hilbert::tensor(hilbert::pauli::x(), id), hilbert::tensor(id, hilbert::pauli::z())};
}

}  // namespace wvjoint::scenarios
