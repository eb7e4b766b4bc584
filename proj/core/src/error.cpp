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

#include "wvjoint/error.hpp"

namespace wvjoint {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NonHermitian:
            return "NonHermitian";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::NonCommuting:
            return "NonCommuting";
        case ErrorCode::NotInvolutory:
            return "NotInvolutory";
        case ErrorCode::NotIdempotent:
            return "NotIdempotent";
        case ErrorCode::OrthogonalPostselection:
            return "OrthogonalPostselection";
        case ErrorCode::DegenerateNorm:
            return "DegenerateNorm";
        case ErrorCode::UnsupportedMonomial:
            return "UnsupportedMonomial";
        case ErrorCode::ExtentTooSmall:
            return "ExtentTooSmall";
        case ErrorCode::ClippingRisk:
            return "ClippingRisk";
        case ErrorCode::VanishingNorm:
            return "VanishingNorm";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::ConfigParse:
            return "ConfigParse";
        case ErrorCode::ConfigValidation:
            return "ConfigValidation";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace wvjoint
