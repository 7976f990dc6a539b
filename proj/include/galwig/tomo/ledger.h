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

#ifndef GALWIG_TOMO_LEDGER_H
#define GALWIG_TOMO_LEDGER_H

#include <string>
#include <vector>

namespace galwig {

/// Counting-rate bookkeeping of a tomography scheme.
struct RedundancyLedger {
    std::string scheme;
    int d = 0;
    int measurements = 0;
    int counting_rates = 0;
    int free_parameters = 0;

    /// Rates left after one normalisation per measurement, minus the free
    /// parameters; zero means no redundancy.
    int redundancy() const {
        return counting_rates - measurements - free_parameters;
    }
};

/// Schemes: "mub-pvm", "sic-povm", "local-mub-two-qubit" (d = 4 only).
/// Throws kUnknownScheme or kWrongDimension.
RedundancyLedger redundancy_ledger(const std::string &scheme, int d);

const std::vector<std::string> &ledger_schemes();

}  // namespace galwig

#endif
