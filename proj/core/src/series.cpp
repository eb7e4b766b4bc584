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

#include "wvjoint/series.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "wvjoint/error.hpp"

namespace wvjoint::series {

std::vector<double> fit_parity_series(const std::function<double(double)> &f, Parity parity, int terms,
                                      double g_lo, double g_hi, int n) {
    if (terms < 1 || n < terms || !(g_lo > 0.0) || !(g_hi > g_lo)) {
        throw Error(ErrorCode::InvalidArgument, "fit_parity_series: need 0 < g_lo < g_hi and n >= terms >= 1");
    }
    const std::vector<double> gs = log_spaced(g_lo, g_hi, n);
    Eigen::MatrixXd design(n, terms);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        const double g = gs[static_cast<std::size_t>(i)];
        const double u = (g / g_hi) * (g / g_hi);
        double col = 1.0;
        for (int k = 0; k < terms; ++k) {
            design(i, k) = col;
            col *= u;
        }
        rhs(i) = parity == Parity::Odd ? f(g) / g : f(g);
    }
    const Eigen::VectorXd scaled = design.colPivHouseholderQr().solve(rhs);
    std::vector<double> coeffs(static_cast<std::size_t>(terms));
    double unscale = 1.0;
    for (int k = 0; k < terms; ++k) {
        coeffs[static_cast<std::size_t>(k)] = scaled(k) / unscale;
        unscale *= g_hi * g_hi;
    }
    return coeffs;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y, double power) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "fit_power_law: need two or more paired samples");
    }
    double sxy = 0.0;
    double sxx = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double b = std::pow(x[i], power);
        sxy += b * y[i];
        sxx += b * b;
        mean += y[i];
    }
    mean /= static_cast<double>(y.size());
    PowerLawFit fit;
    fit.coeff = sxy / sxx;
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - fit.coeff * std::pow(x[i], power);
        ss_res += r * r;
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
    return fit;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (n < 1 || !(lo > 0.0) || !(hi >= lo)) {
        throw Error(ErrorCode::InvalidArgument, "log_spaced: need 0 < lo <= hi and n >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    }
    out.back() = hi;
    return out;
}

std::vector<double> linear_spaced(double lo, double hi, int n) {
    if (n < 1 || !(hi >= lo)) {
        throw Error(ErrorCode::InvalidArgument, "linear_spaced: need lo <= hi and n >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return out;
}

}  // namespace wvjoint::series
