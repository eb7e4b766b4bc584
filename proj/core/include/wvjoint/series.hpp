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

#ifndef WVJOINT_SERIES_HPP
#define WVJOINT_SERIES_HPP

#include <functional>
#include <span>
#include <vector>

namespace wvjoint::series {

enum class Parity { Even, Odd };

/// Least-squares coefficients of f(g) ≈ Σ_k c_k g^{2k} (Even) or
/// Σ_k c_k g^{2k+1} (Odd), k < terms, from n log-spaced samples in
/// [g_lo, g_hi]. Odd fits are done on f(g)/g in the scaled variable
/// (g/g_hi)² to keep the design matrix well conditioned.
std::vector<double> fit_parity_series(const std::function<double(double)> &f, Parity parity, int terms,
                                      double g_lo, double g_hi, int n = 5);

struct PowerLawFit {
    double coeff = 0.0;
    double r_squared = 0.0;
};

/// Least-squares fit of y ≈ C·x^power through the origin, with the usual
/// coefficient of determination about the sample mean.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y, double power);

std::vector<double> log_spaced(double lo, double hi, int n);
std::vector<double> linear_spaced(double lo, double hi, int n);

}  // namespace wvjoint::series

#endif
