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

#include "wvjoint/qubit_meter.hpp"

#include <cmath>
#include <string>

#include "wvjoint/error.hpp"

namespace wvjoint::qubit {

namespace {

constexpr Complex kI{0.0, 1.0};

hilbert::Operator meter_left(const hilbert::Operator &sigma1) {
    return hilbert::tensor(sigma1, hilbert::pauli::identity());
}

hilbert::Operator meter_right(const hilbert::Operator &sigma2) {
    return hilbert::tensor(hilbert::pauli::identity(), sigma2);
}

double checked(double w, const char *what) {
    if (!(std::abs(w) >= kMinNorm)) {
        throw Error(ErrorCode::DegenerateNorm, std::string(what) + " vanishes");
    }
    return w;
}

}  // namespace

void validate(const QubitMeterScenario &s) {
    if (s.pre.dim() != s.post.dim() || s.pa.dim() != s.pre.dim() || s.pb.dim() != s.pre.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "pre, post, pa and pb must share the system dimension");
    }
    if (s.meter_init.dim() != 4 || s.sigma1.dim() != 2 || s.sigma2.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "meter is two qubits with single-qubit couplings");
    }
    if (!s.pre.is_normalized() || !s.post.is_normalized() || !s.meter_init.is_normalized()) {
        throw Error(ErrorCode::NotNormalized, "pre, post and meter_init must be normalized");
    }
    if (!hilbert::classify(s.pa).idempotent || !hilbert::classify(s.pb).idempotent) {
        throw Error(ErrorCode::NotIdempotent, "qubit meter couples projectors");
    }
    if (!hilbert::classify(s.sigma1).involutory || !hilbert::classify(s.sigma2).involutory) {
        throw Error(ErrorCode::NotInvolutory, "meter couplings must square to identity");
    }
    if (!hilbert::check_commute(s.pa, s.pb)) {
        throw Error(ErrorCode::NonCommuting, "pa and pb must commute");
    }
    if (!std::isfinite(s.g)) {
        throw Error(ErrorCode::InvalidArgument, "coupling g must be finite");
    }
}

PostselectedMeter evolve_full(const QubitMeterScenario &s) {
    validate(s);
    const hilbert::Operator h =
        hilbert::tensor(s.pa, meter_left(s.sigma1)) + hilbert::tensor(s.pb, meter_right(s.sigma2));
    const hilbert::Operator u = hilbert::expm_hermitian(h, -kI * s.g);
    const ComplexVector total = (u * hilbert::tensor(s.pre, s.meter_init)).amplitudes();

    const ComplexVector &post = s.post.amplitudes();
    ComplexVector xi = ComplexVector::Zero(4);
    for (Eigen::Index sys = 0; sys < post.size(); ++sys) {
        xi += std::conj(post(sys)) * total.segment(sys * 4, 4);
    }
    const Complex overlap = hilbert::inner(s.post, s.pre);
    if (std::abs(overlap) <= weakvalue::kMinOverlap) {
        throw Error(ErrorCode::OrthogonalPostselection, "|<post|pre>| <= 1e-12");
    }
    return PostselectedMeter{hilbert::Ket(xi), std::norm(overlap)};
}

hilbert::Operator eta(const weakvalue::WeakValueSet &wv, const hilbert::Operator &sigma1,
                      const hilbert::Operator &sigma2, double g) {
    const double r = 1.0 - std::cos(g);
    const double sn = std::sin(g);
    const hilbert::Operator id = hilbert::Operator::identity(4);
    const hilbert::Operator x1 = Complex(r) * id + (kI * sn) * meter_left(sigma1);
    const hilbert::Operator x2 = Complex(r) * id + (kI * sn) * meter_right(sigma2);
    return id - wv.a_w * x1 - wv.b_w * x2 + wv.ab_w * (x1 * x2);
}

PostselectedMeter evolve_eta(const QubitMeterScenario &s) {
    validate(s);
    const auto wv = weakvalue::weak_value_set(s.pre, s.post, s.pa, s.pb);
    const hilbert::Operator e = eta(wv, s.sigma1, s.sigma2, s.g);
    ComplexVector xi = wv.overlap * (e * s.meter_init).amplitudes();
    return PostselectedMeter{hilbert::Ket(std::move(xi)), wv.postselect_prob};
}

PostselectedMeter evolve_postselect_qubit(const QubitMeterScenario &s, double tol) {
    PostselectedMeter full = evolve_full(s);
    const PostselectedMeter viaeta = evolve_eta(s);
    const double diff = (full.xi_f.amplitudes() - viaeta.xi_f.amplitudes()).cwiseAbs().maxCoeff();
    if (!(diff <= tol)) {
        throw Error(ErrorCode::InvalidArgument,
                    "qubit meter constructions disagree by " + std::to_string(diff));
    }
    return full;
}

double meter_expectation(const hilbert::Ket &xi_f, const hilbert::Ket &xi_i, const hilbert::Operator &m) {
    if (!m.is_hermitian(hilbert::kStructuralTol)) {
        throw Error(ErrorCode::NonHermitian, "meter observable must be Hermitian");
    }
    if (xi_f.dim() != m.dim() || xi_i.dim() != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "meter state and observable dimensions differ");
    }
    const double nf = xi_f.amplitudes().squaredNorm();
    const double ni = xi_i.amplitudes().squaredNorm();
    if (!(nf > kMinNorm) || !(ni > kMinNorm)) {
        throw Error(ErrorCode::VanishingNorm, "meter state has zero norm");
    }
    const double ef = hilbert::inner(xi_f, m * xi_f).real() / nf;
    const double ei = hilbert::inner(xi_i, m * xi_i).real() / ni;
    return ef - ei;
}

MeterMoments meter_moments(const hilbert::Ket &xi, const hilbert::Operator &sigma1, const hilbert::Operator &sigma2) {
    const double n = xi.amplitudes().squaredNorm();
    if (!(n > kMinNorm)) {
        throw Error(ErrorCode::VanishingNorm, "meter state has zero norm");
    }
    const hilbert::Operator s1 = meter_left(sigma1);
    const hilbert::Operator s2 = meter_right(sigma2);
    MeterMoments mm;
    mm.s1 = hilbert::inner(xi, s1 * xi).real() / n;
    mm.s2 = hilbert::inner(xi, s2 * xi).real() / n;
    mm.s12 = hilbert::inner(xi, (s1 * s2) * xi).real() / n;
    return mm;
}

// In the transcriptions below p = Pa_w, q = Pb_w, c = (PaPb)_w.

double w5(const weakvalue::WeakValueSet &wv, double g, const MeterMoments &mm) {
    const Complex p = wv.a_w, q = wv.b_w, c = wv.ab_w;
    const double r = 1.0 - std::cos(g);
    const double s = std::sin(g);
    const double c2g = std::cos(2.0 * g);
    const double base = std::norm(1.0 - (p + q) * r + c * r * r) + std::norm(p) + std::norm(q) +
                        2.0 * r * r * std::norm(c) - 2.0 * ((p + q) * c).real() * r;
    const Complex im1 = q * std::conj(c) + 2.0 * p + 2.0 * r * p * std::conj(q) + r * (c + r * q * std::conj(c)) +
                        std::conj(q) * c * c2g;
    const Complex im2 = std::conj(p) * c + 2.0 * q + 2.0 * r * std::conj(p) * q + r * (c + r * std::conj(p) * q) +
                        std::conj(p) * c * c2g;
    const double re12 = 2.0 * (p * std::conj(q) + c).real() * s * s;
    return base - im1.imag() * mm.s1 - im2.imag() * mm.s2 + re12 * mm.s12;
}

double cf_qubit_joint(const weakvalue::WeakValueSet &wv, double g, const MeterMoments &mm) {
    const Complex p = wv.a_w, q = wv.b_w, c = wv.ab_w;
    const double r = 1.0 - std::cos(g);
    const double s = std::sin(g);
    const double c2g = std::cos(2.0 * g);
    const double lead = 2.0 * (p * std::conj(q) + c).real() * s * s;
    const Complex im1 = std::conj(p) * c + 2.0 * q + 2.0 * r * std::conj(p) * q + r * (c + r * std::conj(p) * q) +
                        std::conj(p) * c * c2g;
    const Complex im2 = q * std::conj(c) + 2.0 * p + 2.0 * r * p * std::conj(q) + r * std::conj(c + r * q * c) +
                        std::conj(q) * c * c2g;
    const double bracket = std::norm(1.0 - (p + q) * r + c * r * r) + std::norm(p) + std::norm(q) +
                           2.0 * r * r * std::norm(c) - 2.0 * ((p + q) * c).real() * r;
    const double num = lead - im1.imag() * mm.s1 - im2.imag() * mm.s2 + bracket * mm.s12;
    return num / checked(w5(wv, g, mm), "W5");
}

double w6(const weakvalue::WeakValueSet &wv, double g) {
    const Complex p = wv.a_w, q = wv.b_w, c = wv.ab_w;
    const double cg = std::cos(g);
    const double s2 = std::sin(g) * std::sin(g);
    return std::norm(1.0 - p - q + c + cg * (p + q - 2.0 * c + c * cg)) + std::norm(p - c + c * cg) * s2 +
           std::norm(q - c + c * cg) * s2 + std::norm(c) * s2 * s2;
}

double cf_hardy_qubit(const weakvalue::WeakValueSet &wv, double g) {
    const Complex p = wv.a_w, q = wv.b_w, c = wv.ab_w;
    const double cg = std::cos(g);
    const double s2 = std::sin(g) * std::sin(g);
    const Complex cc = std::conj(c);
    const double t1 = (2.0 * p * std::conj(q) - p * cc - q * cc).imag();
    const double t2 = (c - p * cc - q * cc).real();
    const double t3 = (p * cc + std::conj(q) * cc).real() + (p * cc + p * cc).imag() + 2.0 * std::norm(c);
    const double t4 = std::norm(c) * std::cos(2.0 * g);
    return -2.0 * (t1 + t2 + t3 * cg + t4) * s2 / checked(w6(wv, g), "W6");
}

namespace reconciled {

double qubit_joint(const weakvalue::WeakValueSet &wv, double g, const hilbert::Ket &meter_init,
                   const hilbert::Operator &sigma1, const hilbert::Operator &sigma2) {
    const hilbert::Ket xi = eta(wv, sigma1, sigma2, g) * meter_init;
    return meter_expectation(xi, meter_init, meter_left(sigma1) * meter_right(sigma2));
}

}  // namespace reconciled

}  // namespace wvjoint::qubit
