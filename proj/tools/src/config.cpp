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

#include "wvjoint_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "wvjoint/error.hpp"
#include "wvjoint/series.hpp"

namespace wvjoint::cli {

namespace {

std::string line_of(const YAML::Node &n) {
    const YAML::Mark m = n.Mark();
    if (m.line < 0) {
        return "";
    }
    return " (line " + std::to_string(m.line + 1) + ")";
}

[[noreturn]] void invalid(const std::string &key, const YAML::Node &n, const std::string &what) {
    throw Error(ErrorCode::ConfigValidation, key + ": " + what + line_of(n));
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::optional<double> to_number(std::string_view text) {
    const std::string s = trim(text);
    double v = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (!s.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || s.empty()) {
        return std::nullopt;
    }
    return v;
}

double real_scalar(const std::string &key, const YAML::Node &n) {
    if (!n.IsScalar()) {
        invalid(key, n, "expected a number");
    }
    const auto v = to_number(n.Scalar());
    if (!v || !std::isfinite(*v)) {
        invalid(key, n, "expected a finite number, got '" + n.Scalar() + "'");
    }
    return *v;
}

int int_scalar(const std::string &key, const YAML::Node &n) {
    const double v = real_scalar(key, n);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        invalid(key, n, "expected an integer");
    }
    return static_cast<int>(v);
}

bool bool_scalar(const std::string &key, const YAML::Node &n) {
    if (!n.IsScalar()) {
        invalid(key, n, "expected true or false");
    }
    const std::string &s = n.Scalar();
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    invalid(key, n, "expected true or false, got '" + s + "'");
}

std::string string_scalar(const std::string &key, const YAML::Node &n) {
    if (!n.IsScalar()) {
        invalid(key, n, "expected a string");
    }
    return n.Scalar();
}

Complex complex_entry(const std::string &key, const YAML::Node &n) {
    if (n.IsScalar()) {
        return {real_scalar(key, n), 0.0};
    }
    if (n.IsSequence() && n.size() == 2 && n[0].IsScalar() && n[1].IsScalar()) {
        return {real_scalar(key, n[0]), real_scalar(key, n[1])};
    }
    invalid(key, n, "complex numbers are written as a number or [re, im]");
}

hilbert::Ket raw_ket(const std::string &key, const YAML::Node &n) {
    if (!n.IsSequence() || n.size() == 0) {
        invalid(key, n, "expected a non-empty list of amplitudes");
    }
    ComplexVector v(static_cast<Eigen::Index>(n.size()));
    for (std::size_t i = 0; i < n.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_entry(key, n[i]);
    }
    return hilbert::Ket(v);
}

hilbert::Ket state(const std::string &key, const YAML::Node &n) {
    hilbert::Ket k = raw_ket(key, n);
    if (!k.is_normalized()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "state is not normalized (squared norm " << k.amplitudes().squaredNorm() << ")";
        invalid(key, n, msg.str());
    }
    return k;
}

hilbert::Operator projector_onto(const std::string &key, const YAML::Node &n, const hilbert::Ket &k) {
    if (!(k.norm() > 0.0)) {
        invalid(key, n, "proj() needs a nonzero ket");
    }
    return hilbert::projector(k);
}

hilbert::Operator factor(const std::string &key, const YAML::Node &n) {
    if (n.IsScalar()) {
        try {
            return builtin_observable(n.Scalar());
        } catch (const Error &e) {
            const std::string what = e.what();
            invalid(key, n, what.substr(what.find(": ") + 2));
        }
    }
    if (n.IsMap()) {
        if (n.size() != 1 || !n["proj"]) {
            invalid(key, n, "the only map form is {proj: <ket>}");
        }
        return projector_onto(key, n, raw_ket(key, n["proj"]));
    }
    invalid(key, n, "expected an observable name or {proj: <ket>}");
}

hilbert::Operator observable(const std::string &key, const YAML::Node &n) {
    hilbert::Operator op = hilbert::Operator::identity(1);
    if (n.IsSequence() && n.size() > 0 && n[0].IsSequence()) {
        const std::size_t d = n.size();
        ComplexMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < d; ++i) {
            if (!n[i].IsSequence() || n[i].size() != d) {
                invalid(key, n[i], "matrix rows must be lists of length " + std::to_string(d));
            }
            for (std::size_t j = 0; j < d; ++j) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = complex_entry(key, n[i][j]);
            }
        }
        op = hilbert::Operator(m);
    } else if (n.IsSequence() && n.size() > 0) {
        op = factor(key, n[0]);
        for (std::size_t i = 1; i < n.size(); ++i) {
            op = hilbert::tensor(op, factor(key, n[i]));
        }
    } else {
        op = factor(key, n);
    }
    if (!op.is_hermitian()) {
        invalid(key, n, "observable is not Hermitian");
    }
    return op;
}

GRange g_range(const std::string &key, const YAML::Node &n) {
    if (!n.IsSequence() || n.size() != 4) {
        invalid(key, n, "expected [lo, hi, n, log|lin]");
    }
    GRange r;
    r.lo = real_scalar(key, n[0]);
    r.hi = real_scalar(key, n[1]);
    r.n = int_scalar(key, n[2]);
    const std::string spacing = string_scalar(key, n[3]);
    if (spacing != "log" && spacing != "lin") {
        invalid(key, n[3], "spacing must be log or lin, got '" + spacing + "'");
    }
    r.log = spacing == "log";
    if (r.n < 2) {
        invalid(key, n[2], "needs at least 2 samples");
    }
    if (!(r.lo < r.hi)) {
        invalid(key, n, "needs lo < hi");
    }
    if (r.log && !(r.lo > 0.0)) {
        invalid(key, n, "log spacing needs lo > 0");
    }
    return r;
}

using Handler = std::function<void(const std::string &, const YAML::Node &)>;

void walk_map(const std::string &prefix, const YAML::Node &map, const std::map<std::string, Handler> &handlers) {
    if (!map.IsMap()) {
        invalid(prefix.empty() ? "config" : prefix, map, "expected a mapping");
    }
    std::set<std::string> seen;
    for (const auto &kv : map) {
        const std::string name = kv.first.as<std::string>();
        const std::string key = prefix.empty() ? name : prefix + "." + name;
        const auto it = handlers.find(name);
        if (it == handlers.end()) {
            invalid(key, kv.first, "unknown key");
        }
        if (!seen.insert(name).second) {
            invalid(key, kv.first, "duplicate key");
        }
        it->second(key, kv.second);
    }
}

Command command_from(const std::string &key, const YAML::Node &n) {
    const std::string s = string_scalar(key, n);
    for (Command c : {Command::WeakValue, Command::Moments, Command::Sweep, Command::Hardy, Command::Verify}) {
        if (s == command_name(c)) {
            return c;
        }
    }
    invalid(key, n, "unknown command '" + s + "'");
}

void check_dims(const RunConfig &cfg) {
    const auto fail = [](const std::string &key, const std::string &what) {
        throw Error(ErrorCode::ConfigValidation, key + ": " + what);
    };
    std::optional<std::size_t> dim;
    if (cfg.pre) {
        dim = cfg.pre->dim();
    }
    if (cfg.post) {
        if (dim && *dim != cfg.post->dim()) {
            fail("post", "dimension " + std::to_string(cfg.post->dim()) + " differs from pre (" +
                             std::to_string(*dim) + ")");
        }
        dim = cfg.post->dim();
    }
    for (const auto &[key, op] : {std::pair{"a", &cfg.a}, std::pair{"b", &cfg.b}}) {
        if (*op && dim && (*op)->dim() != *dim) {
            fail(key, "dimension " + std::to_string((*op)->dim()) + " differs from the system (" +
                          std::to_string(*dim) + ")");
        }
    }
    for (const auto &[key, op] : {std::pair{"sigma1", &cfg.sigma1}, std::pair{"sigma2", &cfg.sigma2}}) {
        if (*op && ((*op)->dim() != 2 || !(*op)->is_involutory())) {
            fail(key, "qubit meter couplings must be 2x2 with square identity");
        }
    }
    if (cfg.meter_init && cfg.meter_init->dim() != 4) {
        fail("meter_init", "the two-qubit meter state has 4 amplitudes");
    }
}

}  // namespace

std::string_view command_name(Command c) noexcept {
    switch (c) {
        case Command::WeakValue:
            return "weakvalue";
        case Command::Moments:
            return "moments";
        case Command::Sweep:
            return "sweep";
        case Command::Hardy:
            return "hardy";
        case Command::Verify:
            return "verify";
    }
    return "?";
}

std::vector<double> GRange::samples() const {
    return log ? series::log_spaced(lo, hi, n) : series::linear_spaced(lo, hi, n);
}

hilbert::Operator builtin_observable(std::string_view name) {
    const std::string s = trim(name);
    if (s == "sigma_x") {
        return hilbert::pauli::x();
    }
    if (s == "sigma_y") {
        return hilbert::pauli::y();
    }
    if (s == "sigma_z") {
        return hilbert::pauli::z();
    }
    if (s == "identity") {
        return hilbert::pauli::identity();
    }
    if (s.starts_with("proj(") && s.ends_with(")")) {
        // Commas or spaces separate amplitudes; spaces survive YAML flow lists.
        std::string body = s.substr(5, s.size() - 6);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::vector<Complex> amps;
        std::size_t pos = body.find_first_not_of(' ');
        while (pos != std::string::npos) {
            const std::size_t end = body.find(' ', pos);
            const auto v = to_number(std::string_view(body).substr(pos, end - pos));
            if (!v) {
                throw Error(ErrorCode::ConfigValidation, "proj() takes real amplitudes: '" + s + "'");
            }
            amps.emplace_back(*v);
            pos = end == std::string::npos ? end : body.find_first_not_of(' ', end);
        }
        ComplexVector v(static_cast<Eigen::Index>(amps.size()));
        for (std::size_t i = 0; i < amps.size(); ++i) {
            v(static_cast<Eigen::Index>(i)) = amps[i];
        }
        if (!(v.norm() > 0.0)) {
            throw Error(ErrorCode::ConfigValidation, "proj() needs a nonzero ket: '" + s + "'");
        }
        return hilbert::projector(hilbert::Ket(v));
    }
    throw Error(ErrorCode::ConfigValidation,
                "unknown observable '" + s + "' (sigma_x, sigma_y, sigma_z, identity, proj(...))");
}

RunConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException &e) {
        throw Error(ErrorCode::ConfigParse, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    RunConfig cfg;
    if (root.IsNull()) {
        return cfg;
    }
    const std::map<std::string, Handler> grid = {
        {"n",
         [&](const std::string &k, const YAML::Node &n) {
             cfg.grid_n = int_scalar(k, n);
             if (cfg.grid_n < 16) {
                 invalid(k, n, "grid needs at least 16 points per axis");
             }
         }},
        {"extent",
         [&](const std::string &k, const YAML::Node &n) {
             cfg.grid_extent = real_scalar(k, n);
             if (!(cfg.grid_extent > 0.0)) {
                 invalid(k, n, "extent must be positive");
             }
         }},
    };
    const std::map<std::string, Handler> verify = {
        {"fast", [&](const std::string &k, const YAML::Node &n) { cfg.fast = bool_scalar(k, n); }},
        {"random_pairs",
         [&](const std::string &k, const YAML::Node &n) {
             cfg.random_pairs = int_scalar(k, n);
             if (cfg.random_pairs < 1) {
                 invalid(k, n, "needs at least one pair");
             }
         }},
        {"seed",
         [&](const std::string &k, const YAML::Node &n) {
             const int s = int_scalar(k, n);
             if (s < 0) {
                 invalid(k, n, "seed must be non-negative");
             }
             cfg.seed = static_cast<std::uint64_t>(s);
         }},
    };
    const std::map<std::string, Handler> top = {
        {"command", [&](const std::string &k, const YAML::Node &n) { cfg.command = command_from(k, n); }},
        {"meter",
         [&](const std::string &k, const YAML::Node &n) {
             const std::string s = string_scalar(k, n);
             if (s == "continuous") {
                 cfg.meter = hardy::MeterKind::Continuous;
             } else if (s == "qubit" || s == "discrete") {
                 cfg.meter = hardy::MeterKind::Qubit;
             } else {
                 invalid(k, n, "meter must be continuous or qubit, got '" + s + "'");
             }
         }},
        {"sigma",
         [&](const std::string &k, const YAML::Node &n) {
             cfg.sigma = real_scalar(k, n);
             if (!(cfg.sigma > 0.0)) {
                 invalid(k, n, "sigma must be positive");
             }
         }},
        {"g", [&](const std::string &k, const YAML::Node &n) { cfg.g = real_scalar(k, n); }},
        {"g_range", [&](const std::string &k, const YAML::Node &n) { cfg.g_range = g_range(k, n); }},
        {"engine",
         [&](const std::string &k, const YAML::Node &n) {
             const std::string s = string_scalar(k, n);
             if (s == "gaussian") {
                 cfg.engine = Engine::Gaussian;
             } else if (s == "expm") {
                 cfg.engine = Engine::Expm;
             } else if (s == "grid") {
                 cfg.engine = Engine::Grid;
             } else {
                 invalid(k, n, "engine must be gaussian, expm or grid, got '" + s + "'");
             }
         }},
        {"grid", [&](const std::string &k, const YAML::Node &n) { walk_map(k, n, grid); }},
        {"pre", [&](const std::string &k, const YAML::Node &n) { cfg.pre = state(k, n); }},
        {"post", [&](const std::string &k, const YAML::Node &n) { cfg.post = state(k, n); }},
        {"a", [&](const std::string &k, const YAML::Node &n) { cfg.a = observable(k, n); }},
        {"b", [&](const std::string &k, const YAML::Node &n) { cfg.b = observable(k, n); }},
        {"meter_init", [&](const std::string &k, const YAML::Node &n) { cfg.meter_init = state(k, n); }},
        {"sigma1", [&](const std::string &k, const YAML::Node &n) { cfg.sigma1 = observable(k, n); }},
        {"sigma2", [&](const std::string &k, const YAML::Node &n) { cfg.sigma2 = observable(k, n); }},
        {"verify", [&](const std::string &k, const YAML::Node &n) { walk_map(k, n, verify); }},
        {"output", [&](const std::string &k, const YAML::Node &n) { cfg.output_path = string_scalar(k, n); }},
    };
    try {
        walk_map("", root, top);
    } catch (const YAML::Exception &e) {
        throw Error(ErrorCode::ConfigParse, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (cfg.g && cfg.g_range) {
        throw Error(ErrorCode::ConfigValidation, "g_range: give either g or g_range, not both");
    }
    check_dims(cfg);
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read config '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void require_for(const RunConfig &cfg, Command c) {
    const auto need = [&](bool present, const std::string &key) {
        if (!present) {
            throw Error(ErrorCode::ConfigValidation,
                        key + ": required by '" + std::string(command_name(c)) + "' but missing");
        }
    };
    if (cfg.command && *cfg.command != c) {
        throw Error(ErrorCode::ConfigValidation, "command: config is for '" +
                                                     std::string(command_name(*cfg.command)) + "', not '" +
                                                     std::string(command_name(c)) + "'");
    }
    switch (c) {
        case Command::WeakValue:
            need(cfg.pre.has_value(), "pre");
            need(cfg.post.has_value(), "post");
            need(cfg.a.has_value(), "a");
            return;
        case Command::Moments:
        case Command::Sweep:
            need(cfg.pre.has_value(), "pre");
            need(cfg.post.has_value(), "post");
            need(cfg.a.has_value(), "a");
            need(cfg.b.has_value(), "b");
            if (c == Command::Moments) {
                need(cfg.g.has_value(), "g");
            } else {
                need(cfg.g_range.has_value(), "g_range");
            }
            if (cfg.meter == hardy::MeterKind::Qubit) {
                need(cfg.meter_init.has_value(), "meter_init");
                need(cfg.sigma1.has_value(), "sigma1");
                need(cfg.sigma2.has_value(), "sigma2");
            }
            return;
        case Command::Hardy:
            if (cfg.g) {
                throw Error(ErrorCode::ConfigValidation, "g: hardy takes g_range, not a single g");
            }
            if (cfg.pre || cfg.post || cfg.a || cfg.b) {
                throw Error(ErrorCode::ConfigValidation, "pre: hardy uses its fixed states and projectors");
            }
            return;
        case Command::Verify:
            return;
    }
}

}  // namespace wvjoint::cli
