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

#include "galwig/tomo/sampling.h"

#include <algorithm>
#include <random>

#include "galwig/error.h"
#include "galwig/mat/spectral.h"

namespace galwig {

std::vector<std::int64_t> sample_counts(const std::vector<double> &probs, std::int64_t shots, std::uint64_t seed) {
    if (probs.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "cannot sample from an empty distribution");
    }
    std::vector<double> cdf(probs.size());
    double total = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        total += std::max(0.0, probs[k]);
        cdf[k] = total;
    }
    if (total <= 0.0) {
        throw Error(ErrorCode::kNotNormalized, "probabilities sum to zero");
    }
    std::mt19937_64 gen(seed);
    std::vector<std::int64_t> counts(probs.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = std::min<std::size_t>(it - cdf.begin(), probs.size() - 1);
        ++counts[k];
    }
    return counts;
}

TomographyRun sample_and_estimate(const CMatrix &rho, const MeasurementScheme &scheme, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw Error(ErrorCode::kInvalidArgument, "shots must be at least 1");
    }
    auto probs = scheme_probabilities(scheme, rho);
    TomographyRun run;
    std::vector<std::vector<double>> freqs;
    for (std::size_t k = 0; k < scheme.settings.size(); ++k) {
        CountHistogram h;
        h.scheme = scheme.id;
        h.setting = scheme.settings.size() == 1 ? "all" : "basis" + std::to_string(k);
        h.shots = shots;
        h.seed = seed + k;
        h.counts = sample_counts(probs[k], shots, h.seed);
        std::vector<double> f;
        for (auto c : h.counts) {
            f.push_back(static_cast<double>(c) / static_cast<double>(shots));
        }
        freqs.push_back(std::move(f));
        run.histograms.push_back(std::move(h));
    }
    run.raw_estimate = invert_frequencies(scheme, freqs);
    run.projected_estimate = project_to_density(run.raw_estimate);
    run.fidelity = fidelity(rho, run.projected_estimate);
    run.trace_distance = trace_distance(rho, run.raw_estimate);
    return run;
}

}  // namespace galwig
