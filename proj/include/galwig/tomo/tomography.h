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

#ifndef GALWIG_TOMO_TOMOGRAPHY_H
#define GALWIG_TOMO_TOMOGRAPHY_H

#include <string>
#include <vector>

#include "galwig/wigner/wigner.h"

namespace galwig {

/// A measurement: positive elements summing to the identity.
class POVM {
   public:
    /// Verifies Hermiticity, an eigenvalue floor of -1e-10 and completeness
    /// within 1e-10; throws kNotNormalized or kInvalidArgument.
    static POVM make(std::vector<CMatrix> elements, std::vector<std::string> labels);

    const std::vector<CMatrix> &elements() const {
        return elements_;
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    std::size_t size() const {
        return elements_.size();
    }
    std::size_t dim() const {
        return elements_.front().rows();
    }
    /// max |sum E - I|.
    double completeness_residual() const;
    /// Born probabilities tr(E rho), clipped at zero.
    std::vector<double> probabilities(const CMatrix &rho) const;

   private:
    POVM(std::vector<CMatrix> elements, std::vector<std::string> labels)
        : elements_(std::move(elements)), labels_(std::move(labels)) {
    }

    std::vector<CMatrix> elements_;
    std::vector<std::string> labels_;
};

/// The PVM measuring in one basis.
POVM pvm_from_basis(const std::vector<std::vector<cplx>> &basis, const std::string &prefix);

/// A tomography protocol: one or more measurement settings plus the linear
/// inversion that maps their outcome frequencies back to a state.
struct MeasurementScheme {
    enum class Inversion { kMubSum, kFrame };

    std::string id;
    int d = 0;
    std::vector<POVM> settings;
    Inversion inversion = Inversion::kFrame;
};

/// Projective measurements in the d+1 bases of the canonical Wigner family.
MeasurementScheme mub_pvm_scheme(int d);
MeasurementScheme mub_pvm_scheme(const MUBSet &mubs);

/// Exact outcome probabilities, one vector per setting.
std::vector<std::vector<double>> scheme_probabilities(const MeasurementScheme &scheme, const CMatrix &rho);

/// Linear inversion of outcome frequencies (one vector per setting). MUB
/// schemes use rho = sum_k sum_i p^k_i |e^k_i><e^k_i| - I; informationally
/// complete POVMs use a least-squares frame inversion. The result is
/// Hermitian with unit trace but need not be positive.
CMatrix invert_frequencies(const MeasurementScheme &scheme, const std::vector<std::vector<double>> &freqs);

/// Exact MUB tomography: the (d+1) d probabilities of rho, inverted.
DensityMatrix pvm_mub_tomography(const CMatrix &rho, const MUBSet &mubs);

/// An orthonormal Hermitian operator basis of dimension d: diagonal units
/// followed by the symmetric and antisymmetric off-diagonal pairs.
std::vector<CMatrix> hermitian_basis(int d);

}  // namespace galwig

#endif
