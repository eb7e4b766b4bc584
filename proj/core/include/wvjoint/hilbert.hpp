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

#ifndef WVJOINT_HILBERT_HPP
#define WVJOINT_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace wvjoint {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense finite-dimensional state and operator algebra.
///
/// Subsystem ordering: in every tensor product the left factor is the first
/// subsystem (particle A / pointer x), so basis index = i_first * dim_second +
/// i_second. All other modules inherit this convention.
namespace hilbert {

inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kNormalizationTol = 1e-12;

/// State vector. Immutable after construction.
class Ket {
   public:
    explicit Ket(ComplexVector amplitudes);
    Ket(std::initializer_list<Complex> amplitudes);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    Complex operator[](std::size_t i) const {
        return amplitudes_(static_cast<Eigen::Index>(i));
    }
    /// True when the squared norm is 1 within kNormalizationTol.
    bool is_normalized() const noexcept {
        return normalized_;
    }
    double norm() const noexcept {
        return amplitudes_.norm();
    }
    /// Rescaled copy; throws VanishingNorm for the zero vector.
    Ket normalized() const;

   private:
    ComplexVector amplitudes_;
    bool normalized_;
};

/// ⟨bra|ket⟩ (conjugate-linear in the first argument).
Complex inner(const Ket &bra, const Ket &ket);

/// Square complex matrix acting on a Ket space. Immutable after construction.
class Operator {
   public:
    explicit Operator(ComplexMatrix entries);

    static Operator identity(std::size_t dim);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    const ComplexMatrix &matrix() const noexcept {
        return entries_;
    }

    bool is_hermitian(double tol = kNormalizationTol) const;
    bool is_involutory(double tol = kNormalizationTol) const;
    bool is_idempotent(double tol = kNormalizationTol) const;

    Operator adjoint() const;
    Operator operator*(const Operator &rhs) const;
    Operator operator+(const Operator &rhs) const;
    Operator operator-(const Operator &rhs) const;
    Ket operator*(const Ket &ket) const;
    friend Operator operator*(Complex scale, const Operator &op);

   private:
    ComplexMatrix entries_;
};

/// Largest absolute entry.
double max_abs(const ComplexMatrix &m);

Operator tensor(const Operator &a, const Operator &b);
Ket tensor(const Ket &a, const Ket &b);

/// |ket⟩⟨bra|
Operator outer(const Ket &ket, const Ket &bra);
/// |k⟩⟨k| / ⟨k|k⟩
Operator projector(const Ket &k);

/// exp(scale * h) for Hermitian h via eigendecomposition.
Operator expm_hermitian(const Operator &h, Complex scale);

/// ‖AB − BA‖_max < kStructuralTol. Throws DimensionMismatch.
bool check_commute(const Operator &a, const Operator &b);

struct Classification {
    bool involutory = false;
    bool idempotent = false;

    bool neither() const noexcept {
        return !involutory && !idempotent;
    }
};

/// Structural test at kStructuralTol. The identity is both involutory and
/// idempotent. Throws NonHermitian.
Classification classify(const Operator &a);

/// One simultaneous eigenvector of a commuting Hermitian pair.
struct JointEigenvector {
    double lambda;  // eigenvalue of a
    double mu;      // eigenvalue of b
    ComplexVector vector;
};

/// Orthonormal simultaneous eigenbasis of commuting Hermitian a, b.
/// Throws NonHermitian, DimensionMismatch or NonCommuting.
std::vector<JointEigenvector> joint_eigenbasis(const Operator &a, const Operator &b);

namespace pauli {
Operator identity();
Operator x();
Operator y();
Operator z();
}  // namespace pauli

}  // namespace hilbert
}  // namespace wvjoint

#endif
