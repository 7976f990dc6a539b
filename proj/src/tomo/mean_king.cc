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

#include "galwig/tomo/mean_king.h"

#include <cmath>
#include <string>

#include "galwig/error.h"

namespace galwig {

namespace {

void check_inputs(const WignerFamily &fam, int prep_direction, PhasePoint detector) {
    int d = fam.d();
    if (prep_direction < 0 || prep_direction > d) {
        throw Error(
            ErrorCode::kInvalidDirection,
            "direction " + std::to_string(prep_direction) + " outside [0, " + std::to_string(d) + "]");
    }
    if (detector.i1 < 0 || detector.i1 >= d || detector.i2 < 0 || detector.i2 >= d) {
        throw Error(ErrorCode::kInvalidArgument, "detector point outside the phase space");
    }
}

}  // namespace

Label mean_king_infer(const WignerFamily &fam, int prep_direction, PhasePoint detector) {
    check_inputs(fam, prep_direction, detector);
    const auto &f = fam.field();
    if (prep_direction == 0) {
        return detector.i1;
    }
    // Sloped line (a, s a + o) through (i1, i2) has offset o = i2 - s i1.
    return f.sub(detector.i2, f.mul(prep_direction - 1, detector.i1));
}

Label mean_king_oracle(const WignerFamily &fam, const MUBSet &mubs, int prep_direction, PhasePoint detector) {
    check_inputs(fam, prep_direction, detector);
    int d = fam.d();
    Label found = -1;
    for (Label i = 0; i < d; ++i) {
        auto rho = DensityMatrix::pure(mubs.bases.at(prep_direction)[i]).mat();
        double value = wigner_distribution(rho, fam).at(detector.i1, detector.i2);
        if (std::abs(value - 1.0 / d) < 1e-9) {
            if (found >= 0) {
                throw Error(ErrorCode::kResidualExceeded, "detector lies in the support of two states");
            }
            found = i;
        } else if (std::abs(value) > 1e-9) {
            throw Error(ErrorCode::kResidualExceeded, "Wigner support is not a line", std::abs(value));
        }
    }
    if (found < 0) {
        throw Error(ErrorCode::kResidualExceeded, "detector lies in no state's support");
    }
    return found;
}

}  // namespace galwig
