// Copyright 2026 The galwig Authors
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

#ifndef GALWIG_ERROR_H
#define GALWIG_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace galwig {

enum class ErrorCode {
    kNotPrime,
    kReducibleModulus,
    kDivisionByZero,
    kShapeMismatch,
    kNotRankOneProjector,
    kClosureFailure,
    kAcceptabilityFailure,
    kResidualExceeded,
    kNotNormalized,
    kWrongDimension,
    kUnknownScheme,
    kInvalidDirection,
    kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every library failure is reported through this type. `residual()` is
/// meaningful for the verification codes (projector, closure,
/// acceptability, residual-exceeded) and zero otherwise.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message, double residual = 0.0);

    ErrorCode code() const noexcept {
        return code_;
    }
    double residual() const noexcept {
        return residual_;
    }
    /// True for failures caused by a numerical check exceeding tolerance.
    bool is_verification_failure() const noexcept;

   private:
    ErrorCode code_;
    double residual_;
};

}  // namespace galwig

#endif
