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

#ifndef WVJOINT_ERROR_HPP
#define WVJOINT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvjoint {

enum class ErrorCode {
    DimensionMismatch,
    NonHermitian,
    NotNormalized,
    NonCommuting,
    NotInvolutory,
    NotIdempotent,
    OrthogonalPostselection,
    DegenerateNorm,
    UnsupportedMonomial,
    ExtentTooSmall,
    ClippingRisk,
    VanishingNorm,
    InvalidArgument,
    ConfigParse,
    ConfigValidation,
    Io,
};

/// Stable machine-readable name, used as the CLI error prefix.
std::string_view error_code_name(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace wvjoint

#endif
