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

#ifndef GALWIG_IO_JSON_H
#define GALWIG_IO_JSON_H

#include <string>
#include <vector>

#include "galwig/factor/factor.h"
#include "galwig/tomo/ledger.h"
#include "galwig/tomo/sampling.h"
#include "json.hpp"

namespace galwig {

using Json = nlohmann::ordered_json;

/// Complex entries are [re, im] pairs; matrices are row lists.
Json to_json(cplx z);
Json to_json(const CMatrix &m);
Json to_json(const std::vector<cplx> &v);
CMatrix matrix_from_json(const Json &j);

Json to_json(const FieldTables &field);
Json to_json(const PhaseConvention &conv);
Json to_json(const AcceptabilityReport &report);
Json to_json(const MUBSet &mubs);
Json to_json(const WignerDistribution &dist);
Json to_json(const WeylDistribution &dist);
Json to_json(const FactorReport &report);
Json to_json(const RedundancyLedger &ledger);
Json to_json(const CountHistogram &hist);
Json to_json(const TomographyRun &run);

/// {"d", "convention", "operators", "verification"}.
Json wigner_family_json(const WignerFamily &fam, const AcceptabilityReport &report);

/// Parses a state: a preset (zero, one, plus, minus, plus-i, minus-i,
/// mixed, bell), a JSON matrix of [re, im] entries, or a Bloch vector
/// "bloch:x,y,z". `d` sizes "mixed"; other presets fix their own dimension.
/// Throws kInvalidArgument.
CMatrix parse_state(const std::string &text, int d);

}  // namespace galwig

#endif
