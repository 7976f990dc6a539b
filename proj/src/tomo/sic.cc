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

#include "galwig/tomo/sic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "galwig/error.h"
#include "galwig/mat/spectral.h"

namespace galwig {

namespace {

const double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

const std::array<CMatrix, 4> &paulis() {
    static const std::array<CMatrix, 4> p{
        CMatrix::identity(2),
        CMatrix{{0.0, 1.0}, {1.0, 0.0}},
        CMatrix{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}},
        CMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return p;
}

void require_qubit(const CMatrix &rho) {
    if (!rho.is_square() || rho.rows() != 2) {
        throw Error(ErrorCode::kShapeMismatch, "a qubit (2x2) state is required");
    }
}

}  // namespace

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

BlochVector bloch_vector(const CMatrix &rho) {
    require_qubit(rho);
    return {hs_inner(paulis()[1], rho).real(), hs_inner(paulis()[2], rho).real(), hs_inner(paulis()[3], rho).real()};
}

CMatrix sic_unitary_qubit() {
    double a = std::sqrt(1.0 + kInvSqrt3);
    double b = std::sqrt(1.0 - kInvSqrt3);
    cplx e = std::polar(1.0, std::numbers::pi / 4);
    cplx ec = std::conj(e);
    CMatrix u{
        {e * a, a, b, -e * b},
        {a, -ec * a, -ec * b, -b},
        {b, -e * b, e * a, a},
        {-ec * b, -b, a, -ec * a},
    };
    u *= 0.5;
    return u;
}

POVM sic_povm_qubit() {
    CMatrix u = sic_unitary_qubit();
    std::vector<CMatrix> elems;
    std::vector<std::string> labels;
    for (int x = 0; x < 4; ++x) {
        // Ancilla prepared in |0>: system basis state s enters at index 2s.
        std::vector<cplx> row{u(x, 0), u(x, 2)};
        CMatrix e(2, 2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                e(r, c) = std::conj(row[r]) * row[c];
            }
        }
        elems.push_back(std::move(e));
        labels.push_back(std::to_string(x >> 1) + std::to_string(x & 1));
    }
    return POVM::make(std::move(elems), std::move(labels));
}

std::vector<std::vector<cplx>> povm_fiducials(const POVM &povm) {
    std::vector<std::vector<cplx>> out;
    for (const auto &e : povm.elements()) {
        CMatrix normalised = e;
        normalised *= 1.0 / trace(e).real();
        out.push_back(extract_pure_state(normalised));
    }
    return out;
}

std::array<double, 4> sic_probabilities(const CMatrix &rho) {
    auto b = bloch_vector(rho);
    return {
        0.25 * (1.0 + kInvSqrt3 * (b.x + b.y + b.z)),
        0.25 * (1.0 + kInvSqrt3 * (-b.x - b.y + b.z)),
        0.25 * (1.0 + kInvSqrt3 * (b.x - b.y - b.z)),
        0.25 * (1.0 + kInvSqrt3 * (-b.x + b.y - b.z)),
    };
}

std::array<double, 4> sic_probabilities_operational(const CMatrix &rho) {
    require_qubit(rho);
    CMatrix anc(2, 2);
    anc(0, 0) = 1.0;
    CMatrix u = sic_unitary_qubit();
    CMatrix out = u * kron(rho, anc) * dagger(u);
    return {out(0, 0).real(), out(1, 1).real(), out(2, 2).real(), out(3, 3).real()};
}

BlochVector bloch_from_sic(const std::array<double, 4> &p) {
    double total = p[0] + p[1] + p[2] + p[3];
    if (std::abs(total - 1.0) > 1e-6) {
        throw Error(ErrorCode::kNotNormalized, "SIC probabilities must sum to 1", std::abs(total - 1.0));
    }
    double s = std::numbers::sqrt3;
    return {
        s * (p[0] - p[1] + p[2] - p[3]),
        s * (p[0] - p[1] - p[2] + p[3]),
        s * (p[0] + p[1] - p[2] - p[3]),
    };
}

std::array<PhasePoint, 4> sic_wigner_correspondence() {
    static const std::array<PhasePoint, 4> frozen = [] {
        auto fam = build_canonical_wigner_family(FieldTables::build(2, 1));
        // Probe states with generic Bloch vectors separate all 4! assignments.
        std::vector<CMatrix> probes{
            DensityMatrix::from_bloch(0.3, -0.5, 0.6).mat(),
            DensityMatrix::from_bloch(-0.7, 0.2, 0.1).mat(),
            DensityMatrix::from_bloch(0.1, 0.4, -0.8).mat(),
        };
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            bool fits = true;
            for (const auto &rho : probes) {
                auto p = sic_probabilities(rho);
                auto w = wigner_distribution(rho, fam);
                for (int x = 0; x < 4 && fits; ++x) {
                    double expect = w.values[perm[x]] * kInvSqrt3 + (1.0 - kInvSqrt3) / 4.0;
                    fits = std::abs(p[x] - expect) < kEqualityTol;
                }
            }
            if (fits) {
                std::array<PhasePoint, 4> out;
                for (int x = 0; x < 4; ++x) {
                    out[x] = {perm[x] / 2, perm[x] % 2};
                }
                return out;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        throw Error(ErrorCode::kResidualExceeded, "no outcome/phase-point correspondence satisfies the affine relation");
    }();
    return frozen;
}

double sic_wigner_affine_residual(const CMatrix &rho) {
    static const WignerFamily fam = build_canonical_wigner_family(FieldTables::build(2, 1));
    auto corr = sic_wigner_correspondence();
    auto p = sic_probabilities(rho);
    auto w = wigner_distribution(rho, fam);
    double worst = 0.0;
    for (int x = 0; x < 4; ++x) {
        double expect = w.at(corr[x].i1, corr[x].i2) * kInvSqrt3 + (1.0 - kInvSqrt3) / 4.0;
        worst = std::max(worst, std::abs(p[x] - expect));
    }
    return worst;
}

POVM product_sic_two_qubit() {
    POVM local = sic_povm_qubit();
    std::vector<CMatrix> elems;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < local.size(); ++x) {
        for (std::size_t y = 0; y < local.size(); ++y) {
            elems.push_back(kron(local.elements()[x], local.elements()[y]));
            labels.push_back(local.labels()[x] + "|" + local.labels()[y]);
        }
    }
    return POVM::make(std::move(elems), std::move(labels));
}

FrameReport pauli_frame_report(const POVM &povm) {
    std::size_t d = povm.dim();
    std::vector<CMatrix> basis{CMatrix::identity(1)};
    for (std::size_t dim = 1; dim < d; dim *= 2) {
        std::vector<CMatrix> next;
        for (const auto &b : basis) {
            for (const auto &p : paulis()) {
                next.push_back(kron(b, p));
            }
        }
        basis = std::move(next);
    }
    if (basis.front().rows() != d) {
        throw Error(ErrorCode::kWrongDimension, "Pauli frames need a power-of-two dimension");
    }
    std::vector<double> frame;
    for (const auto &e : povm.elements()) {
        for (const auto &b : basis) {
            frame.push_back(hs_inner(b, e).real());
        }
    }
    FrameReport rep;
    rep.singular_values = singular_values(frame, povm.size(), basis.size());
    double top = rep.singular_values.front();
    for (double s : rep.singular_values) {
        if (s > top * 1e-10) {
            ++rep.rank;
        }
    }
    rep.condition = rep.rank == static_cast<int>(basis.size()) ? top / rep.singular_values.back()
                                                               : std::numeric_limits<double>::infinity();
    auto fids = povm_fiducials(povm);
    for (std::size_t a = 0; a < fids.size(); ++a) {
        for (std::size_t b = a + 1; b < fids.size(); ++b) {
            double ov = std::abs(inner(fids[a], fids[b]));
            bool seen = false;
            for (double v : rep.overlap_values) {
                seen = seen || std::abs(v - ov) < 1e-9;
            }
            if (!seen) {
                rep.overlap_values.push_back(ov);
            }
        }
    }
    std::sort(rep.overlap_values.begin(), rep.overlap_values.end());
    return rep;
}

MeasurementScheme sic_qubit_scheme() {
    return {"sic-povm", 2, {sic_povm_qubit()}, MeasurementScheme::Inversion::kFrame};
}

MeasurementScheme product_sic_scheme() {
    return {"product-sic", 4, {product_sic_two_qubit()}, MeasurementScheme::Inversion::kFrame};
}

}  // namespace galwig
