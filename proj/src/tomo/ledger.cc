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

#include "galwig/tomo/ledger.h"

#include "galwig/error.h"

namespace galwig {

const std::vector<std::string> &ledger_schemes() {
    static const std::vector<std::string> names{"mub-pvm", "sic-povm", "local-mub-two-qubit"};
    return names;
}

RedundancyLedger redundancy_ledger(const std::string &scheme, int d) {
    if (d < 2) {
        throw Error(ErrorCode::kWrongDimension, "dimension must be at least 2");
    }
    RedundancyLedger led{scheme, d, 0, 0, d * d - 1};
    if (scheme == "mub-pvm") {
        led.measurements = d + 1;
        led.counting_rates = d * d + d;
    } else if (scheme == "sic-povm") {
        // A single von Neumann measurement on system and ancilla.
        led.measurements = 1;
        led.counting_rates = d * d;
    } else if (scheme == "local-mub-two-qubit") {
        if (d != 4) {
            throw Error(ErrorCode::kWrongDimension, "local-mub-two-qubit is defined for d = 4 only");
        }
        // 3 local bases per qubit, each pair of local settings giving 4 rates.
        led.measurements = 9;
        led.counting_rates = 36;
    } else {
        throw Error(ErrorCode::kUnknownScheme, "unknown scheme '" + scheme + "'");
    }
    return led;
}

}  // namespace galwig
