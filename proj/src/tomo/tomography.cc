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

#include "galwig/tomo/tomography.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "galwig/error.h"
#include "galwig/mat/spectral.h"

namespace galwig {

POVM POVM::make(std::vector<CMatrix> elements, std::vector<std::string> labels) {
    if (elements.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "a POVM needs at least one element");
    }
    if (labels.size() != elements.size()) {
        throw Error(ErrorCode::kShapeMismatch, "one label per POVM element required");
    }
    std::size_t d = elements.front().rows();
    CMatrix sum(d, d);
    for (const auto &e : elements) {
        if (!e.is_square() || e.rows() != d) {
            throw Error(ErrorCode::kShapeMismatch, "POVM elements must share one square shape");
        }
        double herm = hermiticity_residual(e);
        if (herm > kEqualityTol) {
            throw Error(ErrorCode::kInvalidArgument, "POVM element is not Hermitian", herm);
        }
        double floor = hermitian_eigenvalues(e).front();
        if (floor < -kEqualityTol) {
            throw Error(ErrorCode::kInvalidArgument, "POVM element is not positive", -floor);
        }
        sum += e;
    }
    double res = max_abs_diff(sum, CMatrix::identity(d));
    if (res > kEqualityTol) {
        throw Error(ErrorCode::kNotNormalized, "POVM elements do not sum to the identity", res);
    }
    return POVM(std::move(elements), std::move(labels));
}

double POVM::completeness_residual() const {
    std::size_t d = dim();
    CMatrix sum(d, d);
    for (const auto &e : elements_) {
        sum += e;
    }
    return max_abs_diff(sum, CMatrix::identity(d));
}

std::vector<double> POVM::probabilities(const CMatrix &rho) const {
    if (!rho.is_square() || rho.rows() != dim()) {
        throw Error(ErrorCode::kShapeMismatch, "state and POVM dimensions differ");
    }
    std::vector<double> out;
    for (const auto &e : elements_) {
        out.push_back(std::max(0.0, hs_inner(e, rho).real()));
    }
    return out;
}

POVM pvm_from_basis(const std::vector<std::vector<cplx>> &basis, const std::string &prefix) {
    std::vector<CMatrix> elems;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        elems.push_back(CMatrix::outer(basis[i]));
        labels.push_back(prefix + std::to_string(i));
    }
    return POVM::make(std::move(elems), std::move(labels));
}

MeasurementScheme mub_pvm_scheme(const MUBSet &mubs) {
    MeasurementScheme s;
    s.id = "mub-pvm";
    s.d = static_cast<int>(mubs.bases.front().size());
    s.inversion = MeasurementScheme::Inversion::kMubSum;
    for (std::size_t k = 0; k < mubs.bases.size(); ++k) {
        s.settings.push_back(pvm_from_basis(mubs.bases[k], "e" + std::to_string(mubs.directions[k]) + "_"));
    }
    return s;
}

MeasurementScheme mub_pvm_scheme(int d) {
    auto pp = PrimePower::from_order(d);
    if (!pp) {
        throw Error(ErrorCode::kWrongDimension, "MUB tomography needs a prime-power dimension");
    }
    auto fam = build_canonical_wigner_family(FieldTables::build(pp->p, pp->m));
    return mub_pvm_scheme(mubs_from_wigner(fam));
}

std::vector<std::vector<double>> scheme_probabilities(const MeasurementScheme &scheme, const CMatrix &rho) {
    std::vector<std::vector<double>> out;
    for (const auto &s : scheme.settings) {
        out.push_back(s.probabilities(rho));
    }
    return out;
}

std::vector<CMatrix> hermitian_basis(int d) {
    std::vector<CMatrix> basis;
    double r = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < d; ++k) {
        CMatrix e(d, d);
        e(k, k) = 1.0;
        basis.push_back(std::move(e));
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix sym(d, d);
            sym(j, k) = r;
            sym(k, j) = r;
            basis.push_back(std::move(sym));
            CMatrix anti(d, d);
            anti(j, k) = cplx(0, -r);
            anti(k, j) = cplx(0, r);
            basis.push_back(std::move(anti));
        }
    }
    return basis;
}

namespace {

void check_shapes(const MeasurementScheme &scheme, const std::vector<std::vector<double>> &freqs) {
    if (freqs.size() != scheme.settings.size()) {
        throw Error(ErrorCode::kShapeMismatch, "one frequency vector per measurement setting required");
    }
    for (std::size_t k = 0; k < freqs.size(); ++k) {
        if (freqs[k].size() != scheme.settings[k].size()) {
            throw Error(ErrorCode::kShapeMismatch, "frequency vector length differs from outcome count");
        }
    }
}

CMatrix frame_inversion(const MeasurementScheme &scheme, const std::vector<std::vector<double>> &freqs) {
    int d = scheme.d;
    auto basis = hermitian_basis(d);
    std::size_t rows = 0;
    for (const auto &s : scheme.settings) {
        rows += s.size();
    }
    Eigen::MatrixXd a(rows, basis.size());
    Eigen::VectorXd y(rows);
    std::size_t r = 0;
    for (std::size_t k = 0; k < scheme.settings.size(); ++k) {
        const auto &elems = scheme.settings[k].elements();
        for (std::size_t x = 0; x < elems.size(); ++x, ++r) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                a(r, b) = hs_inner(elems[x], basis[b]).real();
            }
            y(r) = freqs[k][x];
        }
    }
    Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(y);
    CMatrix rho(d, d);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        rho.add_scaled(c(b), basis[b]);
    }
    return rho;
}

}  // namespace

CMatrix invert_frequencies(const MeasurementScheme &scheme, const std::vector<std::vector<double>> &freqs) {
    check_shapes(scheme, freqs);
    if (scheme.inversion == MeasurementScheme::Inversion::kFrame) {
        return frame_inversion(scheme, freqs);
    }
    int d = scheme.d;
    CMatrix rho(d, d);
    for (std::size_t k = 0; k < scheme.settings.size(); ++k) {
        const auto &elems = scheme.settings[k].elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            rho.add_scaled(freqs[k][i], elems[i]);
        }
    }
    rho -= CMatrix::identity(d);
    return rho;
}

DensityMatrix pvm_mub_tomography(const CMatrix &rho, const MUBSet &mubs) {
    auto scheme = mub_pvm_scheme(mubs);
    if (!rho.is_square() || static_cast<int>(rho.rows()) != scheme.d) {
        throw Error(ErrorCode::kShapeMismatch, "state and basis dimensions differ");
    }
    return DensityMatrix::from_matrix(invert_frequencies(scheme, scheme_probabilities(scheme, rho)));
}

}  // namespace galwig
