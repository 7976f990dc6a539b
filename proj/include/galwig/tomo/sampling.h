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

#ifndef GALWIG_TOMO_SAMPLING_H
#define GALWIG_TOMO_SAMPLING_H

#include <cstdint>
#include <string>
#include <vector>

#include "galwig/tomo/tomography.h"

namespace galwig {

/// Name of the pseudo-random generator behind every histogram.
inline constexpr const char *kGeneratorName = "mt19937_64";

/// Outcome counts of one measurement setting.
struct CountHistogram {
    std::string scheme;
    std::string setting;
    std::vector<std::int64_t> counts;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string generator = kGeneratorName;
};

/// Draws `shots` outcomes from `probs` (renormalised) by inverse-CDF
/// sampling with a 53-bit uniform. Deterministic for a fixed generator state.
std::vector<std::int64_t> sample_counts(const std::vector<double> &probs, std::int64_t shots, std::uint64_t seed);

struct TomographyRun {
    std::vector<CountHistogram> histograms;
    CMatrix raw_estimate;        // linear inversion of the frequencies
    CMatrix projected_estimate;  // nearest density matrix (eigenvalue floor)
    double fidelity = 0.0;       // of the projected estimate to the true state
    double trace_distance = 0.0; // of the raw estimate to the true state
};

/// Simulates `shots` outcomes per measurement setting (setting k uses seed
/// seed + k) and inverts the frequencies; throws kInvalidArgument if
/// shots < 1.
TomographyRun sample_and_estimate(const CMatrix &rho, const MeasurementScheme &scheme, std::int64_t shots, std::uint64_t seed);

}  // namespace galwig

#endif
