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

#ifndef GALWIG_TOMO_MEAN_KING_H
#define GALWIG_TOMO_MEAN_KING_H

#include "galwig/wigner/wigner.h"

namespace galwig {

/// Index i of the state |e^k_i> of direction k whose generating line
/// passes through the detector point. Throws kInvalidDirection for k
/// outside [0, d] and kInvalidArgument for a point outside the grid.
Label mean_king_infer(const WignerFamily &fam, int prep_direction, PhasePoint detector);

/// Independent answer: the unique state of the basis whose Wigner
/// distribution is nonzero at the detector. Throws kResidualExceeded when
/// the support is not unique.
Label mean_king_oracle(const WignerFamily &fam, const MUBSet &mubs, int prep_direction, PhasePoint detector);

}  // namespace galwig

#endif
