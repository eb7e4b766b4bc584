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

#include "wvjoint/closedform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "wvjoint/error.hpp"

namespace wvjoint::closedform {

namespace {

// Shorthand used by every formula below: v = g²/σ².
struct Terms {
    Complex a;
    Complex b;
    Complex ab;
    double g;
    double s2;
    double v;
};

Terms unpack(const ClosedFormInputs &in) {
    validate(in);
    const double s2 = in.sigma * in.sigma;
    return Terms{in.wv.a_w, in.wv.b_w, in.wv.ab_w, in.g, s2, in.g * in.g / s2};
}

double abs2(Complex z) {
    return std::norm(z);
}

double checked_norm(double w, const char *what) {
    if (!(w > kMinNorm)) {
        throw Error(ErrorCode::DegenerateNorm, std::string(what) + " = " + std::to_string(w));
    }
    return w;
}

Complex checked_norm(Complex w, const char *what) {
    if (!(std::abs(w) > kMinNorm)) {
        throw Error(ErrorCode::DegenerateNorm, std::string(what) + " vanishes");
    }
    return w;
}

// Exact projector-pair numerators over the branch overlap e = e^{−g²/8σ²}.
struct ProjectorParts {
    double e;
    double pp;   // |Pa_w|²
    double qq;   // |Pb_w|²
    double cc;   // |(PaPb)_w|²
    double rpq;  // Re Pa_w* Pb_w
    double rpc;  // Re Pa_w* (PaPb)_w
    double rqc;  // Re Pb_w* (PaPb)_w
    double ipq;  // Im Pa_w* Pb_w
    double ipc;  // Im Pa_w* (PaPb)_w
    Complex p;
    Complex q;
    Complex c;
};

ProjectorParts projector_parts(const Terms &t) {
    ProjectorParts r;
    r.e = std::exp(-t.v / 8.0);
    r.p = t.a;
    r.q = t.b;
    r.c = t.ab;
    r.pp = abs2(t.a);
    r.qq = abs2(t.b);
    r.cc = abs2(t.ab);
    const Complex pq = std::conj(t.a) * t.b;
    const Complex pc = std::conj(t.a) * t.ab;
    r.rpq = pq.real();
    r.ipq = pq.imag();
    r.rpc = pc.real();
    r.ipc = pc.imag();
    r.rqc = (std::conj(t.b) * t.ab).real();
    return r;
}

constexpr std::array<Discrepancy, 13> kDiscrepancies{{
    {"xy_inv", "<XY>_fi, involutory pair",
     "printed value is exactly half the exact displacement; exact is 2g^2(Re(AB)_w + Re A_w* B_w)/W1"},
    {"xpy_inv_w2", "<XP_y>_fi and W2, involutory pair",
     "printed W2 equals -(1/2)e^{g^2/s^2} W1, so the printed value carries a spurious factor -e^{-g^2/s^2}"},
    {"x2_inv", "<X^2>_fi, involutory pair",
     "printed expression is the unnormalized numerator times 4e^{g^2/s^2}; exact is e^{-g^2/s^2}(printed)/W1 - s^2"},
    {"x2_fourth_order", "<X^2>_f through g^4, involutory pair",
     "g^4 coefficient should be (1 - |A_w|^2(|A_w|^2+|B_w|^2) + |(AB)_w|^2)/8s^2"},
    {"w3", "W3, projector pair", "printed W3 is complex-valued and does not equal the pointer norm"},
    {"xy_proj", "<XY>_fi, projector pair",
     "printed expression is O(g^4) at small g and disagrees with exact evolution at all g"},
    {"x_proj", "<X>_fi, projector pair", "printed expression lacks the overall factor g; disagrees with exact evolution"},
    {"x_proj_series", "g^3 coefficient of <X>_fi, projector pair", "printed bracket has the wrong overall sign"},
    {"pxpy_proj", "<PxPy>_fi, projector pair",
     "correct numerator, but divided by the printed W3 instead of 2e^{g^2/4s^2}W"},
    {"single_pointer_joint", "joint weak value from 4s^2<X>_fi/g^3 (sigma_x (x) sigma_z example)",
     "weak values are imaginary there, <X>_fi vanishes identically and only Re(AB)_w = 0 is recovered"},
    {"qubit_joint_w5", "qubit-meter joint displacement and W5", "verbatim expression disagrees with exact evolution"},
    {"hardy_qubit_w6", "Hardy qubit-meter displacement", "verbatim expression disagrees with exact evolution"},
    {"hardy_discrete_curves", "Hardy qubit-meter joint weak probabilities",
     "denominator 8cos g - 3cos 2g - 7 should be 8cos g - 2cos 2g - 8 (exact norm 2cos^2 g - 4cos g + 3)"},
}};

}  // namespace

void validate(const ClosedFormInputs &in) {
    if (!(in.sigma > 0.0) || !std::isfinite(in.sigma)) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
    }
    if (!std::isfinite(in.g)) {
        throw Error(ErrorCode::InvalidArgument, "g must be finite");
    }
}

double w1(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double eh = std::exp(t.v / 2.0);
    const double c1 = (1.0 + eh) * (1.0 + eh);
    const double c2 = (1.0 - eh) * (1.0 - eh);
    const double c3 = 1.0 - std::exp(t.v);
    return std::exp(-t.v) * (c1 + abs2(t.ab) * c2 - (abs2(t.b) + abs2(t.a)) * c3);
}

double w2(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double h = t.v / 2.0;
    return (abs2(t.ab) - (abs2(t.ab) + 1.0) * std::cosh(h) - std::sinh(h) * (abs2(t.a) + abs2(t.b)) - 1.0) *
           std::exp(h);
}

double cf_xy_inv(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double w = checked_norm(w1(in), "W1");
    return t.g * t.g * (t.ab.real() + (std::conj(t.a) * t.b).real()) / w;
}

double rs_second_order(const ClosedFormInputs &in, double xy_fi) {
    const Terms t = unpack(in);
    if (t.g == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "second-order inversion needs g != 0");
    }
    return 2.0 / (t.g * t.g) * xy_fi - (std::conj(t.a) * t.b).real();
}

double cf_xpy_inv(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double w = w2(in);
    if (!(std::abs(w) > kMinNorm)) {
        throw Error(ErrorCode::DegenerateNorm, "W2 vanishes");
    }
    const double num = (std::conj(t.a) * t.b).imag() + t.ab.imag();
    return std::exp(-t.v / 2.0) * t.g * t.g * num / (2.0 * t.s2 * w);
}

double cf_x_inv(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double w = checked_norm(w1(in), "W1");
    const double cross = (t.b * std::conj(t.ab)).real();
    return 2.0 * t.g * ((t.a.real() - cross) * std::exp(-t.v / 2.0) + (t.a.real() + cross)) / w;
}

OddSeries x_inv_series(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    OddSeries s;
    s.linear = t.a.real();
    s.cubic = (t.a.real() * (1.0 - abs2(t.a) - abs2(t.b)) + (std::conj(t.b) * t.ab).real()) / (4.0 * t.s2);
    return s;
}

double infer_joint_from_single(double x_fi, const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    constexpr double kImagTol = 1e-12;
    if (std::abs(t.a.imag()) > kImagTol || std::abs(t.b.imag()) > kImagTol || std::abs(t.ab.imag()) > kImagTol) {
        throw Error(ErrorCode::InvalidArgument, "single-pointer inference assumes real weak values");
    }
    if (std::abs(t.b.real()) < kImagTol) {
        throw Error(ErrorCode::InvalidArgument, "single-pointer inference needs B_w != 0");
    }
    if (t.g == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "single-pointer inference needs g != 0");
    }
    const double a = t.a.real();
    const double b = t.b.real();
    const double g = t.g;
    return 4.0 * t.s2 * x_fi / (g * g * g * b) - 4.0 * t.s2 / (g * g) * (a / b) - a * (1.0 - a * a - b * b) / b;
}

X2Readings cf_x2_inv(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double aa = abs2(t.a);
    const double bb = abs2(t.b);
    const double cc = abs2(t.ab);
    const double g2 = t.g * t.g;
    X2Readings r;
    r.as_printed = std::exp(t.v) * (g2 + t.s2) * (aa + bb + cc + 1.0) +
                   std::exp(t.v / 2.0) * (g2 * (aa - bb - cc + 1.0) - 2.0 * t.s2 * (cc - 1.0)) +
                   t.s2 * (-aa - bb + cc + 1.0);
    const double w = checked_norm(w1(in), "W1");
    r.over_w1 = r.as_printed / w - t.s2;
    r.consistent = std::exp(-t.v) * r.as_printed / w - t.s2;
    return r;
}

double x2_second_order(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    return t.s2 + 0.5 * t.g * t.g * (abs2(t.a) + 1.0);
}

double x2_fourth_order(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double g4 = t.g * t.g * t.g * t.g;
    return x2_second_order(in) + (1.0 - abs2(t.a) * (1.0 - abs2(t.b)) + abs2(t.ab)) * g4 / (8.0 * t.s2);
}

Complex w3(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const Complex p = t.a;
    const Complex q = t.b;
    const Complex c = t.ab;
    const double e8 = std::exp(t.v / 8.0);
    const double e4 = std::exp(t.v / 4.0);
    return e4 + 2.0 * (p - p * std::conj(q) + abs2(c)) * e8 +
           2.0 * (abs2(q) + 3.0 * c + 2.0 * abs2(c) - 2.0 * q * std::conj(c)) * (1.0 - e8) * (1.0 - e8) +
           2.0 * q * (e8 - e4);
}

double cf_xy_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const Complex p = t.a;
    const Complex q = t.b;
    const Complex c = t.ab;
    const Complex w = checked_norm(w3(in), "W3");
    const double bracket = (std::conj(p) * q).real() + c.real() + 2.0 * abs2(c) * std::exp(-t.v / 4.0) -
                           2.0 * (std::conj(p) * c).real() + (q * c).real() - 2.0 * abs2(c);
    return (t.g * t.g / (2.0 * w) * bracket * (1.0 - std::exp(t.v / 8.0))).real();
}

double xy_proj_second_order(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    return 0.5 * t.g * t.g * ((t.a * std::conj(t.b)).real() + t.ab.real());
}

double cf_x_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const Complex p = t.a;
    const Complex q = t.b;
    const Complex c = t.ab;
    const Complex w = checked_norm(w3(in), "W3");
    const double e8 = std::exp(t.v / 8.0);
    const Complex inner = (std::conj(p) * q + c - 2.0 * std::conj(q) * c) * (1.0 - e8) +
                          2.0 * (abs2(c) - p * c) * (1.0 - 2.0 * e8) +
                          (abs2(std::conj(p)) - 2.0 * std::conj(p) * c + 2.0 * abs2(c)) * std::exp(t.v / 4.0);
    return (std::exp(-t.v / 4.0) / w * inner.real()).real();
}

OddSeries x_proj_series(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const Complex p = t.a;
    const Complex q = t.b;
    const Complex c = t.ab;
    const Complex bracket = p - p * p - 2.0 * abs2(p) + 2.0 * p * p * std::conj(p) - p * q +
                            2.0 * std::conj(p) * abs2(q) + c - 2.0 * std::conj(q) * c;
    return OddSeries{p.real(), bracket.real() / (8.0 * t.s2)};
}

double cf_pxpy_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const Complex w = checked_norm(w3(in), "W3");
    const double num = t.g * t.g * ((t.a * std::conj(t.b)).real() - t.ab.real());
    return (num / (4.0 * t.s2 * t.s2 * w)).real();
}

namespace reconciled {

double xy_inv(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double w = checked_norm(w1(in), "W1");
    return 2.0 * t.g * t.g * (t.ab.real() + (std::conj(t.a) * t.b).real()) / w;
}

double xpy_inv(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double w = checked_norm(w1(in), "W1");
    const double num = (std::conj(t.a) * t.b).imag() + t.ab.imag();
    return std::exp(-t.v / 2.0) * t.g * t.g * num / (t.s2 * w);
}

double x2_inv(const ClosedFormInputs &in) {
    return cf_x2_inv(in).consistent;
}

double x2_inv_quartic(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const double aa = abs2(t.a);
    return (1.0 - aa * (aa + abs2(t.b)) + abs2(t.ab)) / (8.0 * t.s2);
}

double w_proj(const ClosedFormInputs &in) {
    const ProjectorParts r = projector_parts(unpack(in));
    const double pr = r.p.real();
    const double qr = r.q.real();
    const double cr = r.c.real();
    const double base = 1.0 + 2.0 * r.pp + 2.0 * r.qq + 4.0 * r.cc + 2.0 * r.rpq - 4.0 * r.rpc - 4.0 * r.rqc -
                        2.0 * pr - 2.0 * qr + 2.0 * cr;
    const double first = -2.0 * r.pp - 2.0 * r.qq - 4.0 * r.rpq + 8.0 * r.rpc + 8.0 * r.rqc + 2.0 * pr + 2.0 * qr -
                         8.0 * r.cc - 4.0 * cr;
    const double second = 2.0 * r.rpq - 4.0 * r.rpc - 4.0 * r.rqc + 4.0 * r.cc + 2.0 * cr;
    return base + first * r.e + second * r.e * r.e;
}

double xy_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const ProjectorParts r = projector_parts(t);
    const double num = r.cc + (r.rpc + r.rqc - 2.0 * r.cc) * r.e +
                       (0.5 * r.rpq - r.rpc - r.rqc + r.cc + 0.5 * r.c.real()) * r.e * r.e;
    return t.g * t.g * num / checked_norm(w_proj(in), "W");
}

double x_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const ProjectorParts r = projector_parts(t);
    const double num = r.pp - 2.0 * r.rpc + 2.0 * r.cc +
                       (r.rpq - 2.0 * r.rpc - 2.0 * r.rqc + 2.0 * r.cc + r.c.real()) * r.e * r.e +
                       (-r.pp - r.rpq + 4.0 * r.rpc + r.p.real() + 2.0 * r.rqc - 4.0 * r.cc - r.c.real()) * r.e;
    return t.g * num / checked_norm(w_proj(in), "W");
}

double xpy_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const ProjectorParts r = projector_parts(t);
    const double num = 0.5 * r.ipc * r.e + (0.25 * r.ipq - 0.5 * r.ipc + 0.25 * r.c.imag()) * r.e * r.e;
    return t.g * t.g / t.s2 * num / checked_norm(w_proj(in), "W");
}

double pxpy_proj(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const ProjectorParts r = projector_parts(t);
    const double num = r.e * r.e * t.g * t.g * (r.rpq - r.c.real()) / (8.0 * t.s2 * t.s2);
    return num / checked_norm(w_proj(in), "W");
}

OddSeries x_proj_series(const ClosedFormInputs &in) {
    const Terms t = unpack(in);
    const Complex p = t.a;
    const Complex q = t.b;
    const Complex c = t.ab;
    const double pr = p.real();
    const double bracket = -2.0 * abs2(p) * pr + 2.0 * abs2(p) + (p * p).real() + (p * q).real() -
                           2.0 * abs2(q) * pr - pr + 2.0 * (std::conj(q) * c).real() - c.real();
    return OddSeries{pr, bracket / (8.0 * t.s2)};
}

}  // namespace reconciled

std::span<const Discrepancy> known_discrepancies() {
    return kDiscrepancies;
}

bool is_known_discrepancy(std::string_view id) {
    return std::any_of(kDiscrepancies.begin(), kDiscrepancies.end(), [&](const Discrepancy &d) { return d.id == id; });
}

}  // namespace wvjoint::closedform
