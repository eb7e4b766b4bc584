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

#include "wvjoint/gaussian_meter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wvjoint/error.hpp"

namespace wvjoint::gaussian {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be positive and finite");
    }
}

void require_coupling(double g) {
    if (!std::isfinite(g)) {
        throw Error(ErrorCode::InvalidArgument, "coupling g must be finite");
    }
}

using AxisKernel = Complex (*)(double, double, double);

// Factorized x/y kernels of each monomial.
struct Factorization {
    AxisKernel x;
    AxisKernel y;
};

Factorization factorize(Monomial m) {
    using namespace kernel;
    switch (m) {
        case Monomial::One:
            return {overlap, overlap};
        case Monomial::X:
            return {position, overlap};
        case Monomial::Y:
            return {overlap, position};
        case Monomial::XY:
            return {position, position};
        case Monomial::X2:
            return {position_sq, overlap};
        case Monomial::XPy:
            return {position, momentum};
        case Monomial::PxPy:
            return {momentum, momentum};
        case Monomial::Px:
            return {momentum, overlap};
        case Monomial::Py:
            return {overlap, momentum};
        case Monomial::Py2:
            return {overlap, momentum_sq};
    }
    throw Error(ErrorCode::UnsupportedMonomial, "unknown monomial");
}

}  // namespace

GaussianSuperposition::GaussianSuperposition(double sigma, std::vector<Term> terms, double prob_weight)
    : sigma_(sigma), prob_weight_(prob_weight) {
    require_sigma(sigma);
    if (!(prob_weight >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "prob_weight must be non-negative");
    }
    for (const Term &t : terms) {
        bool merged = false;
        for (Term &u : terms_) {
            if (std::abs(u.shift.x - t.shift.x) < kShiftMergeTol && std::abs(u.shift.y - t.shift.y) < kShiftMergeTol) {
                u.coeff += t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) {
            terms_.push_back(t);
        }
    }
    std::erase_if(terms_, [](const Term &t) { return std::abs(t.coeff) < kZeroCoeffTol; });
    if (terms_.empty()) {
        throw Error(ErrorCode::DegenerateNorm, "superposition has no surviving terms");
    }
}

Monomial monomial_from_name(std::string_view name) {
    for (Monomial m : {Monomial::One, Monomial::X, Monomial::Y, Monomial::XY, Monomial::X2, Monomial::XPy,
                       Monomial::PxPy, Monomial::Px, Monomial::Py, Monomial::Py2}) {
        if (monomial_name(m) == name) {
            return m;
        }
    }
    throw Error(ErrorCode::UnsupportedMonomial, "unsupported monomial '" + std::string(name) + "'");
}

std::string_view monomial_name(Monomial m) noexcept {
    switch (m) {
        case Monomial::One:
            return "1";
        case Monomial::X:
            return "X";
        case Monomial::Y:
            return "Y";
        case Monomial::XY:
            return "XY";
        case Monomial::X2:
            return "X2";
        case Monomial::XPy:
            return "XPy";
        case Monomial::PxPy:
            return "PxPy";
        case Monomial::Px:
            return "Px";
        case Monomial::Py:
            return "Py";
        case Monomial::Py2:
            return "Py2";
    }
    return "?";
}

GaussianSuperposition superposition_involutory(const weakvalue::WeakValueSet &wv, double g, double sigma) {
    require_sigma(sigma);
    require_coupling(g);
    std::vector<Term> terms;
    for (double lambda : {1.0, -1.0}) {
        for (double mu : {1.0, -1.0}) {
            const Complex c = 0.25 * (1.0 + lambda * wv.a_w + mu * wv.b_w + lambda * mu * wv.ab_w);
            terms.push_back(Term{c, Shift{lambda * g, mu * g}});
        }
    }
    return GaussianSuperposition(sigma, std::move(terms), wv.postselect_prob);
}

GaussianSuperposition superposition_projector(const weakvalue::WeakValueSet &wv, double g, double sigma) {
    require_sigma(sigma);
    require_coupling(g);
    std::vector<Term> terms{
        Term{1.0 - wv.a_w - wv.b_w + wv.ab_w, Shift{0.0, 0.0}},
        Term{wv.a_w - wv.ab_w, Shift{g, 0.0}},
        Term{wv.b_w - wv.ab_w, Shift{0.0, g}},
        Term{wv.ab_w, Shift{g, g}},
    };
    return GaussianSuperposition(sigma, std::move(terms), wv.postselect_prob);
}

GaussianSuperposition postselect_involutory(const hilbert::Ket &pre, const hilbert::Ket &post,
                                            const hilbert::Operator &a, const hilbert::Operator &b, double g,
                                            double sigma) {
    const auto ca = hilbert::classify(a);
    const auto cb = hilbert::classify(b);
    if (!ca.involutory || !cb.involutory) {
        throw Error(ErrorCode::NotInvolutory, "postselect_involutory requires A^2 = B^2 = I");
    }
    return superposition_involutory(weakvalue::weak_value_set(pre, post, a, b), g, sigma);
}

GaussianSuperposition postselect_projector(const hilbert::Ket &pre, const hilbert::Ket &post,
                                           const hilbert::Operator &pa, const hilbert::Operator &pb, double g,
                                           double sigma) {
    const auto ca = hilbert::classify(pa);
    const auto cb = hilbert::classify(pb);
    if (!ca.idempotent || !cb.idempotent) {
        throw Error(ErrorCode::NotIdempotent, "postselect_projector requires Pa^2 = Pa and Pb^2 = Pb");
    }
    return superposition_projector(weakvalue::weak_value_set(pre, post, pa, pb), g, sigma);
}

GaussianSuperposition postselect(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                                 const hilbert::Operator &b, double g, double sigma) {
    const auto ca = hilbert::classify(a);
    const auto cb = hilbert::classify(b);
    if (ca.involutory && cb.involutory) {
        return postselect_involutory(pre, post, a, b, g, sigma);
    }
    if (ca.idempotent && cb.idempotent) {
        return postselect_projector(pre, post, a, b, g, sigma);
    }
    throw Error(ErrorCode::InvalidArgument, "observables must both be involutory or both be projectors");
}

Complex overlap_moment(const GaussianSuperposition &sup, Monomial m) {
    const Factorization f = factorize(m);
    const double sigma = sup.sigma();
    Complex total = 0.0;
    for (const Term &j : sup.terms()) {
        for (const Term &k : sup.terms()) {
            total += std::conj(j.coeff) * k.coeff * f.x(j.shift.x, k.shift.x, sigma) * f.y(j.shift.y, k.shift.y, sigma);
        }
    }
    return total;
}

MomentReport moments(const GaussianSuperposition &sup) {
    const double w = overlap_moment(sup, Monomial::One).real();
    if (!(w >= kMinNorm)) {
        throw Error(ErrorCode::DegenerateNorm, "post-selected pointer norm W = " + std::to_string(w));
    }
    const auto mean = [&](Monomial m) { return overlap_moment(sup, m).real() / w; };
    const double s2 = sup.sigma() * sup.sigma();
    MomentReport r;
    r.x = mean(Monomial::X);
    r.y = mean(Monomial::Y);
    r.xy = mean(Monomial::XY);
    r.x_py = mean(Monomial::XPy);
    r.x2 = mean(Monomial::X2) - s2;
    r.px_py = mean(Monomial::PxPy);
    r.w_norm = w;
    return r;
}

double initial_pointer(double x, double y, double sigma) {
    const double s2 = sigma * sigma;
    return std::exp(-(x * x + y * y) / (4.0 * s2)) / std::sqrt(2.0 * std::numbers::pi * s2);
}

double initial_pointer_momentum(double kx, double ky, double sigma) {
    const double s2 = sigma * sigma;
    return std::sqrt(2.0 * s2 / std::numbers::pi) * std::exp(-s2 * (kx * kx + ky * ky));
}

Complex amplitude(const GaussianSuperposition &sup, double x, double y) {
    Complex total = 0.0;
    for (const Term &t : sup.terms()) {
        total += t.coeff * initial_pointer(x - t.shift.x, y - t.shift.y, sup.sigma());
    }
    return total;
}

Complex momentum_amplitude(const GaussianSuperposition &sup, double kx, double ky) {
    Complex phase_sum = 0.0;
    for (const Term &t : sup.terms()) {
        phase_sum += t.coeff * std::exp(-kI * (kx * t.shift.x + ky * t.shift.y));
    }
    return phase_sum * initial_pointer_momentum(kx, ky, sup.sigma());
}

namespace kernel {

Complex overlap(double a, double b, double sigma) {
    const double d = a - b;
    return std::exp(-d * d / (8.0 * sigma * sigma));
}

Complex position(double a, double b, double sigma) {
    return 0.5 * (a + b) * overlap(a, b, sigma);
}

Complex position_sq(double a, double b, double sigma) {
    const double mid = 0.5 * (a + b);
    return (sigma * sigma + mid * mid) * overlap(a, b, sigma);
}

Complex momentum(double a, double b, double sigma) {
    return kI * (a - b) / (4.0 * sigma * sigma) * overlap(a, b, sigma);
}

Complex momentum_sq(double a, double b, double sigma) {
    const double s2 = sigma * sigma;
    const double d = a - b;
    return (1.0 / (4.0 * s2) - d * d / (16.0 * s2 * s2)) * overlap(a, b, sigma);
}

}  // namespace kernel

}  // namespace wvjoint::gaussian
