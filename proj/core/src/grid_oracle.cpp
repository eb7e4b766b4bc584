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

#include "wvjoint/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "wvjoint/error.hpp"

namespace wvjoint::grid {

namespace {

constexpr Complex kI{0.0, 1.0};

// In-place 2-D transform pair bound to its own buffer. Unnormalized, as FFTW.
class Fft2 {
   public:
    explicit Fft2(int n) : n_(n), buf_(static_cast<std::size_t>(n) * n) {
        auto *p = reinterpret_cast<fftw_complex *>(buf_.data());
        fwd_ = fftw_plan_dft_2d(n, n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_2d(n, n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft2() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    Fft2(const Fft2 &) = delete;
    Fft2 &operator=(const Fft2 &) = delete;

    std::vector<Complex> forward(const std::vector<Complex> &in) {
        std::copy(in.begin(), in.end(), buf_.begin());
        fftw_execute(fwd_);
        return buf_;
    }
    std::vector<Complex> backward(const std::vector<Complex> &in) {
        std::copy(in.begin(), in.end(), buf_.begin());
        fftw_execute(bwd_);
        const double scale = 1.0 / (static_cast<double>(n_) * n_);
        for (Complex &v : buf_) {
            v *= scale;
        }
        return buf_;
    }

   private:
    int n_;
    std::vector<Complex> buf_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

// Angular wavenumbers in FFT order. The Nyquist entry is zeroed when the
// result feeds an odd derivative.
std::vector<double> wavenumbers(int n, double extent, bool zero_nyquist) {
    std::vector<double> k(static_cast<std::size_t>(n));
    const double dk = std::numbers::pi / extent;
    for (int m = 0; m < n; ++m) {
        const int s = m < n / 2 ? m : m - n;
        k[static_cast<std::size_t>(m)] = s * dk;
    }
    if (zero_nyquist) {
        k[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return k;
}

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

void require_extent(double sigma, double extent, double g) {
    if (extent < 10.0 * sigma + 5.0 * std::abs(g)) {
        throw Error(ErrorCode::ExtentTooSmall,
                    "grid extent " + std::to_string(extent) + " below 10*sigma + 5*|g|");
    }
}

const std::vector<Complex> &single_field(const GridState &gs) {
    if (gs.fields.size() != 1) {
        throw Error(ErrorCode::DimensionMismatch, "expected a post-selected (pointer-only) grid state");
    }
    return gs.fields.front();
}

}  // namespace

GridState init_grid(double sigma, int n, double extent, const hilbert::Ket &pre, double g_max) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be positive and finite");
    }
    if (!is_power_of_two(n) || n < 256) {
        throw Error(ErrorCode::InvalidArgument, "grid n must be a power of two >= 256");
    }
    if (!pre.is_normalized()) {
        throw Error(ErrorCode::NotNormalized, "pre-selected state must be normalized");
    }
    require_extent(sigma, extent, g_max);

    GridState gs{n, extent, sigma, {}};
    const auto cells = static_cast<std::size_t>(n) * n;
    std::vector<double> pointer(cells);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = gaussian::initial_pointer(gs.coordinate(i), gs.coordinate(j), sigma);
            pointer[static_cast<std::size_t>(i) * n + j] = v;
            norm += v * v;
        }
    }
    const double scale = 1.0 / std::sqrt(norm * gs.dx() * gs.dx());
    gs.fields.resize(pre.dim());
    for (std::size_t s = 0; s < pre.dim(); ++s) {
        auto &f = gs.fields[s];
        f.resize(cells);
        for (std::size_t c = 0; c < cells; ++c) {
            f[c] = pre[s] * (pointer[c] * scale);
        }
    }
    return gs;
}

GridState apply_coupling(const GridState &gs, const hilbert::Operator &a, const hilbert::Operator &b, double g) {
    if (a.dim() != gs.system_dim() || b.dim() != gs.system_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "observables do not match the grid system dimension");
    }
    if (!std::isfinite(g)) {
        throw Error(ErrorCode::InvalidArgument, "coupling g must be finite");
    }
    const auto basis = hilbert::joint_eigenbasis(a, b);
    for (const auto &e : basis) {
        const double shift = std::max(std::abs(g * e.lambda), std::abs(g * e.mu));
        if (shift > gs.extent / 4.0) {
            throw Error(ErrorCode::ClippingRisk, "branch shift " + std::to_string(shift) + " exceeds extent/4");
        }
    }
    require_extent(gs.sigma, gs.extent, g);

    const int n = gs.n;
    const auto cells = static_cast<std::size_t>(n) * n;
    const std::size_t d = gs.system_dim();
    const std::vector<double> k = wavenumbers(n, gs.extent, false);

    Fft2 fft(n);
    std::vector<std::vector<Complex>> spec(d);
    for (std::size_t s = 0; s < d; ++s) {
        spec[s] = fft.forward(gs.fields[s]);
    }
    std::vector<std::vector<Complex>> out(d, std::vector<Complex>(cells, Complex(0.0)));
    std::vector<Complex> branch(cells);
    std::vector<Complex> px(static_cast<std::size_t>(n)), py(static_cast<std::size_t>(n));
    for (const auto &e : basis) {
        for (int m = 0; m < n; ++m) {
            px[static_cast<std::size_t>(m)] = std::exp(-kI * g * e.lambda * k[static_cast<std::size_t>(m)]);
            py[static_cast<std::size_t>(m)] = std::exp(-kI * g * e.mu * k[static_cast<std::size_t>(m)]);
        }
        std::fill(branch.begin(), branch.end(), Complex(0.0));
        for (std::size_t s = 0; s < d; ++s) {
            const Complex w = std::conj(e.vector(static_cast<Eigen::Index>(s)));
            if (w == Complex(0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < cells; ++c) {
                branch[c] += w * spec[s][c];
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                branch[static_cast<std::size_t>(i) * n + j] *= px[static_cast<std::size_t>(i)] *
                                                              py[static_cast<std::size_t>(j)];
            }
        }
        for (std::size_t s = 0; s < d; ++s) {
            const Complex v = e.vector(static_cast<Eigen::Index>(s));
            if (v == Complex(0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < cells; ++c) {
                out[s][c] += v * branch[c];
            }
        }
    }
    GridState next{n, gs.extent, gs.sigma, {}};
    next.fields.resize(d);
    for (std::size_t s = 0; s < d; ++s) {
        next.fields[s] = fft.backward(out[s]);
    }
    return next;
}

PostselectedGrid postselect_grid(const GridState &gs, const hilbert::Ket &post) {
    if (post.dim() != gs.system_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "post-selected state does not match the grid system dimension");
    }
    const auto cells = static_cast<std::size_t>(gs.n) * gs.n;
    std::vector<Complex> field(cells, Complex(0.0));
    for (std::size_t s = 0; s < gs.system_dim(); ++s) {
        const Complex w = std::conj(post[s]);
        for (std::size_t c = 0; c < cells; ++c) {
            field[c] += w * gs.fields[s][c];
        }
    }
    PostselectedGrid out{GridState{gs.n, gs.extent, gs.sigma, {std::move(field)}}, 0.0};
    out.prob = position_norm(out.pointer);
    if (!(out.prob > kMinNorm)) {
        throw Error(ErrorCode::VanishingNorm, "post-selected pointer has zero norm");
    }
    return out;
}

double position_norm(const GridState &gs) {
    double total = 0.0;
    for (const auto &f : gs.fields) {
        for (const Complex &v : f) {
            total += std::norm(v);
        }
    }
    return total * gs.dx() * gs.dx();
}

double spectral_norm(const GridState &gs) {
    Fft2 fft(gs.n);
    double total = 0.0;
    for (const auto &f : gs.fields) {
        for (const Complex &v : fft.forward(f)) {
            total += std::norm(v);
        }
    }
    return total * gs.dx() * gs.dx() / (static_cast<double>(gs.n) * gs.n);
}

gaussian::MomentReport grid_moments(const GridState &gs, double postselect_prob) {
    const std::vector<Complex> &f = single_field(gs);
    const int n = gs.n;
    const double cell = gs.dx() * gs.dx();

    double norm = 0.0, mx = 0.0, my = 0.0, mxy = 0.0, mx2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = gs.coordinate(i);
        for (int j = 0; j < n; ++j) {
            const double y = gs.coordinate(j);
            const double p = std::norm(f[static_cast<std::size_t>(i) * n + j]);
            norm += p;
            mx += x * p;
            my += y * p;
            mxy += x * y * p;
            mx2 += x * x * p;
        }
    }
    if (!(norm * cell > kMinNorm)) {
        throw Error(ErrorCode::VanishingNorm, "pointer field has zero norm");
    }

    Fft2 fft(n);
    const std::vector<double> k = wavenumbers(n, gs.extent, true);
    std::vector<Complex> spec = fft.forward(f);
    double spec_norm = 0.0, mpxpy = 0.0;
    std::vector<Complex> py_spec(spec.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t c = static_cast<std::size_t>(i) * n + j;
            const double p = std::norm(spec[c]);
            spec_norm += p;
            mpxpy += k[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(j)] * p;
            py_spec[c] = k[static_cast<std::size_t>(j)] * spec[c];
        }
    }
    const std::vector<Complex> py_f = fft.backward(py_spec);
    double mxpy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = gs.coordinate(i);
        for (int j = 0; j < n; ++j) {
            const std::size_t c = static_cast<std::size_t>(i) * n + j;
            mxpy += x * (std::conj(f[c]) * py_f[c]).real();
        }
    }

    gaussian::MomentReport r;
    r.x = mx / norm;
    r.y = my / norm;
    r.xy = mxy / norm;
    r.x2 = mx2 / norm - gs.sigma * gs.sigma;
    r.x_py = mxpy / norm;
    r.px_py = mpxpy / spec_norm;
    r.w_norm = norm * cell / postselect_prob;
    return r;
}

gaussian::MomentReport run(const hilbert::Ket &pre, const hilbert::Ket &post, const hilbert::Operator &a,
                           const hilbert::Operator &b, double g, double sigma, int n, double extent) {
    const double l = extent > 0.0 ? extent : kDefaultExtentSigmas * sigma;
    const GridState init = init_grid(sigma, n, l, pre, g);
    const PostselectedGrid ps = postselect_grid(apply_coupling(init, a, b, g), post);
    return grid_moments(ps.pointer, std::norm(hilbert::inner(post, pre)));
}

}  // namespace wvjoint::grid
