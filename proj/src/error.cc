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

#include "galwig/error.h"

namespace galwig {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNotPrime:
            return "NotPrime";
        case ErrorCode::kReducibleModulus:
            return "ReducibleModulus";
        case ErrorCode::kDivisionByZero:
            return "DivisionByZero";
        case ErrorCode::kShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::kNotRankOneProjector:
            return "NotRankOneProjector";
        case ErrorCode::kClosureFailure:
            return "ClosureFailure";
        case ErrorCode::kAcceptabilityFailure:
            return "AcceptabilityFailure";
        case ErrorCode::kResidualExceeded:
            return "ResidualExceeded";
        case ErrorCode::kNotNormalized:
            return "NotNormalized";
        case ErrorCode::kWrongDimension:
            return "WrongDimension";
        case ErrorCode::kUnknownScheme:
            return "UnknownScheme";
        case ErrorCode::kInvalidDirection:
            return "InvalidDirection";
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message, double residual)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), residual_(residual) {
}

bool Error::is_verification_failure() const noexcept {
    return code_ == ErrorCode::kNotRankOneProjector || code_ == ErrorCode::kClosureFailure ||
           code_ == ErrorCode::kAcceptabilityFailure || code_ == ErrorCode::kResidualExceeded;
}

}  // namespace galwig
