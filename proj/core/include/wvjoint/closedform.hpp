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

#ifndef WVJOINT_CLOSEDFORM_HPP
#define WVJOINT_CLOSEDFORM_HPP

#include <span>
#include <string_view>

#include "wvjoint/weakvalue.hpp"

/// Closed-form pointer displacements as functions of the weak values, g and σ
/// (continuous pointer of gaussian_meter.hpp).
///
/// Functions named cf_* and the W₁/W₂/W₃ helpers evaluate the reference
/// closed forms verbatim ("as printed"). Several of them disagree with exact
/// evolution; the functions in namespace `reconciled` are the corrected forms
/// (derived from the four-branch expansion), and known_discrepancies() lists
/// every mismatch with a short description.
///
/// For projector pairs the WeakValueSet fields are read as
/// a_w = (Pa)_w, b_w = (Pb)_w, ab_w = (Pa Pb)_w.
namespace wvjoint::closedform {

inline constexpr double kMinNorm = 1e-14;

struct ClosedFormInputs {
    weakvalue::WeakValueSet wv;
    double g = 0.0;
    double sigma = 1.0;
};

/// Throws InvalidArgument unless sigma > 0 and g finite.
void validate(const ClosedFormInputs &in);

struct OddSeries {
    double linear = 0.0;  // coefficient of g
    double cubic = 0.0;   // coefficient of g³
};

// ---- involutory pair (A² = B² = I) ------------------------------------------

double w1(const ClosedFormInputs &in);
double w2(const ClosedFormInputs &in);

/// ⟨XY⟩_fi as printed: g²(Re (AB)_w + Re A_w* B_w) / W₁.
double cf_xy_inv(const ClosedFormInputs &in);

/// Second-order inversion: Re (AB)_w ≈ (2/g²)⟨XY⟩_fi − Re A_w* B_w.
/// Throws InvalidArgument for g = 0.
double rs_second_order(const ClosedFormInputs &in, double xy_fi);

/// ⟨XP_y⟩_fi as printed, with W₂.
double cf_xpy_inv(const ClosedFormInputs &in);

/// ⟨X⟩_fi, exact for all g.
double cf_x_inv(const ClosedFormInputs &in);

/// g and g³ coefficients of ⟨X⟩_fi as printed (exact).
OddSeries x_inv_series(const ClosedFormInputs &in);

/// Re (AB)_w from a single-pointer displacement, truncated at g³; requires
/// real weak values and B_w ≠ 0. Throws InvalidArgument otherwise.
double infer_joint_from_single(double x_fi, const ClosedFormInputs &in);

struct X2Readings {
    double as_printed = 0.0;    // the printed expression, unnormalized
    double over_w1 = 0.0;       // as_printed / W₁ − σ²
    double consistent = 0.0;    // e^{−g²/σ²} as_printed / W₁ − σ² (matches exact)
};

X2Readings cf_x2_inv(const ClosedFormInputs &in);

/// ⟨X²⟩_f through g² (includes the initial σ²).
double x2_second_order(const ClosedFormInputs &in);
/// ⟨X²⟩_f through g⁴ as printed.
double x2_fourth_order(const ClosedFormInputs &in);

// ---- projector pair (Pa² = Pa, Pb² = Pb) ------------------------------------

/// Printed W₃; complex as printed.
Complex w3(const ClosedFormInputs &in);

/// Printed ⟨XY⟩_fi (real part of the printed complex expression).
double cf_xy_proj(const ClosedFormInputs &in);
/// Second-order form (g²/2)(Re Pa_w Pb_w* + Re (PaPb)_w).
double xy_proj_second_order(const ClosedFormInputs &in);
/// Printed ⟨X⟩_fi (real part).
double cf_x_proj(const ClosedFormInputs &in);
/// Printed g and g³ coefficients of ⟨X⟩_fi.
OddSeries x_proj_series(const ClosedFormInputs &in);
/// Printed ⟨PₓP_y⟩_fi (real part).
double cf_pxpy_proj(const ClosedFormInputs &in);

// ---- corrected forms ---------------------------------------------------------

namespace reconciled {

/// Involutory pair. W₁ itself is correct (it is 4W).
double xy_inv(const ClosedFormInputs &in);
double xpy_inv(const ClosedFormInputs &in);
double x2_inv(const ClosedFormInputs &in);
/// g⁴ coefficient of ⟨X²⟩_f.
double x2_inv_quartic(const ClosedFormInputs &in);

/// Projector pair; w_proj is the exact norm W.
double w_proj(const ClosedFormInputs &in);
double xy_proj(const ClosedFormInputs &in);
double x_proj(const ClosedFormInputs &in);
double xpy_proj(const ClosedFormInputs &in);
double pxpy_proj(const ClosedFormInputs &in);
OddSeries x_proj_series(const ClosedFormInputs &in);

}  // namespace reconciled

// ---- discrepancy registry ----------------------------------------------------

struct Discrepancy {
    std::string_view id;       // e.g. "xy_inv"
    std::string_view formula;  // what is affected
    std::string_view finding;  // one-line description of the mismatch
};

std::span<const Discrepancy> known_discrepancies();
bool is_known_discrepancy(std::string_view id);

}  // namespace wvjoint::closedform

#endif
