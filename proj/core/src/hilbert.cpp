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

#include "wvjoint/hilbert.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "wvjoint/error.hpp"

namespace wvjoint::hilbert {

namespace {

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Complex v = m.data()[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

void require_hermitian(const Operator &h, const char *what) {
    if (!h.is_hermitian(kStructuralTol)) {
        throw Error(ErrorCode::NonHermitian, std::string(what) + ": operator is not Hermitian");
    }
}

}  // namespace

Ket::Ket(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw Error(ErrorCode::InvalidArgument, "ket must have positive dimension");
    }
    if (!all_finite(amplitudes_)) {
        throw Error(ErrorCode::InvalidArgument, "ket has non-finite amplitudes");
    }
    normalized_ = std::abs(amplitudes_.squaredNorm() - 1.0) < kNormalizationTol;
}

Ket::Ket(std::initializer_list<Complex> amplitudes)
    : Ket(ComplexVector(Eigen::Map<const ComplexVector>(amplitudes.begin(),
                                                        static_cast<Eigen::Index>(amplitudes.size())))) {
}

Ket Ket::normalized() const {
    const double n = amplitudes_.norm();
    if (n == 0.0) {
        throw Error(ErrorCode::VanishingNorm, "cannot normalize the zero ket");
    }
    return Ket(ComplexVector(amplitudes_ / n));
}

Complex inner(const Ket &bra, const Ket &ket) {
    require_same_dim(bra.dim(), ket.dim(), "inner");
    return bra.amplitudes().dot(ket.amplitudes());
}

Operator::Operator(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "operator must be a non-empty square matrix");
    }
    if (!all_finite(entries_)) {
        throw Error(ErrorCode::InvalidArgument, "operator has non-finite entries");
    }
}

Operator Operator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(ComplexMatrix::Identity(n, n));
}

bool Operator::is_hermitian(double tol) const {
    return max_abs(entries_ - entries_.adjoint()) < tol;
}

bool Operator::is_involutory(double tol) const {
    const ComplexMatrix sq = entries_ * entries_;
    return max_abs(sq - ComplexMatrix::Identity(entries_.rows(), entries_.cols())) < tol;
}

bool Operator::is_idempotent(double tol) const {
    return max_abs(entries_ * entries_ - entries_) < tol;
}

Operator Operator::adjoint() const {
    return Operator(entries_.adjoint());
}

Operator Operator::operator*(const Operator &rhs) const {
    require_same_dim(dim(), rhs.dim(), "operator product");
    return Operator(entries_ * rhs.entries_);
}

Operator Operator::operator+(const Operator &rhs) const {
    require_same_dim(dim(), rhs.dim(), "operator sum");
    return Operator(entries_ + rhs.entries_);
}

Operator Operator::operator-(const Operator &rhs) const {
    require_same_dim(dim(), rhs.dim(), "operator difference");
    return Operator(entries_ - rhs.entries_);
}

Ket Operator::operator*(const Ket &ket) const {
    require_same_dim(dim(), ket.dim(), "operator action");
    return Ket(ComplexVector(entries_ * ket.amplitudes()));
}

Operator operator*(Complex scale, const Operator &op) {
    return Operator(scale * op.entries_);
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Operator tensor(const Operator &a, const Operator &b) {
    const ComplexMatrix &x = a.matrix();
    const ComplexMatrix &y = b.matrix();
    ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return Operator(std::move(out));
}

Ket tensor(const Ket &a, const Ket &b) {
    const ComplexVector &x = a.amplitudes();
    const ComplexVector &y = b.amplitudes();
    ComplexVector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return Ket(std::move(out));
}

Operator outer(const Ket &ket, const Ket &bra) {
    return Operator(ket.amplitudes() * bra.amplitudes().adjoint());
}

Operator projector(const Ket &k) {
    const double n2 = k.amplitudes().squaredNorm();
    if (n2 == 0.0) {
        throw Error(ErrorCode::VanishingNorm, "projector onto the zero ket");
    }
    return Operator(k.amplitudes() * k.amplitudes().adjoint() / n2);
}

Operator expm_hermitian(const Operator &h, Complex scale) {
    require_hermitian(h, "expm_hermitian");
    // Symmetrize away sub-tolerance anti-Hermitian noise before solving.
    const ComplexMatrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    const Eigen::VectorXd &values = solver.eigenvalues();
    ComplexVector phases(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        phases(i) = std::exp(scale * values(i));
    }
    const ComplexMatrix &vectors = solver.eigenvectors();
    return Operator(vectors * phases.asDiagonal() * vectors.adjoint());
}

bool check_commute(const Operator &a, const Operator &b) {
    require_same_dim(a.dim(), b.dim(), "check_commute");
    const ComplexMatrix &x = a.matrix();
    const ComplexMatrix &y = b.matrix();
    return max_abs(x * y - y * x) < kStructuralTol;
}

Classification classify(const Operator &a) {
    require_hermitian(a, "classify");
    return Classification{a.is_involutory(kStructuralTol), a.is_idempotent(kStructuralTol)};
}

std::vector<JointEigenvector> joint_eigenbasis(const Operator &a, const Operator &b) {
    require_same_dim(a.dim(), b.dim(), "joint_eigenbasis");
    require_hermitian(a, "joint_eigenbasis");
    require_hermitian(b, "joint_eigenbasis");
    if (!check_commute(a, b)) {
        throw Error(ErrorCode::NonCommuting, "joint_eigenbasis requires [a, b] = 0");
    }
    const ComplexMatrix sa = 0.5 * (a.matrix() + a.matrix().adjoint());
    const ComplexMatrix sb = 0.5 * (b.matrix() + b.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> outer_solver(sa);
    const Eigen::VectorXd &la = outer_solver.eigenvalues();
    const ComplexMatrix &va = outer_solver.eigenvectors();

    std::vector<JointEigenvector> out;
    out.reserve(a.dim());
    // Eigenvalues come sorted; diagonalize b inside each degenerate block of a.
    Eigen::Index start = 0;
    while (start < la.size()) {
        Eigen::Index stop = start + 1;
        while (stop < la.size() && std::abs(la(stop) - la(start)) < 1e-8) {
            ++stop;
        }
        const ComplexMatrix block = va.middleCols(start, stop - start);
        const ComplexMatrix reduced = block.adjoint() * sb * block;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> inner_solver(0.5 * (reduced + reduced.adjoint()));
        const ComplexMatrix vectors = block * inner_solver.eigenvectors();
        for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
            const ComplexVector v = vectors.col(k);
            const double lambda = v.dot(sa * v).real();
            const double mu = v.dot(sb * v).real();
            out.push_back(JointEigenvector{lambda, mu, v});
        }
        start = stop;
    }
    return out;
}

namespace pauli {

Operator identity() {
    return Operator::identity(2);
}

Operator x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return Operator(std::move(m));
}

Operator y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return Operator(std::move(m));
}

Operator z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return Operator(std::move(m));
}

}  // namespace pauli

}  // namespace wvjoint::hilbert
