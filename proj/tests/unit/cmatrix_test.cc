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

#include "galwig/mat/cmatrix.h"

#include <gtest/gtest.h>

#include <cmath>

#include "galwig/error.h"
#include "galwig/mat/spectral.h"
#include "test_util.h"

namespace galwig {
namespace {

using testing::pauli_x;
using testing::pauli_y;
using testing::pauli_z;

TEST(CMatrix, PauliAlgebra) {
    EXPECT_LT(max_abs_diff(pauli_x() * pauli_y(), cplx(0, 1) * pauli_z()), 1e-15);
    EXPECT_LT(max_abs_diff(pauli_x() * pauli_x(), CMatrix::identity(2)), 1e-15);
    EXPECT_EQ(trace(pauli_z()), cplx(0, 0));
    EXPECT_EQ(dagger(pauli_y()), pauli_y());
}

TEST(CMatrix, ProductMatchesNaiveLoop) {
    std::mt19937_64 rng(7);
    auto a = testing::random_matrix(5, 3, rng);
    auto b = testing::random_matrix(3, 4, rng);
    auto c = a * b;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                s += a(i, k) * b(k, j);
            }
            EXPECT_LT(std::abs(c(i, j) - s), 1e-12);
        }
    }
    EXPECT_THROW(b * a * b, Error);
}

TEST(CMatrix, KronPutsLeftFactorMostSignificant) {
    CMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    auto k = kron(a, CMatrix::identity(2));
    EXPECT_EQ(k(0, 2), cplx(2.0));
    EXPECT_EQ(k(1, 3), cplx(2.0));
    EXPECT_EQ(k(1, 2), cplx(0.0));
    EXPECT_EQ(k.rows(), 4u);
}

TEST(CMatrix, HsInnerAndNorms) {
    EXPECT_EQ(hs_inner(pauli_x(), pauli_x()), cplx(2.0));
    EXPECT_EQ(hs_inner(pauli_x(), pauli_z()), cplx(0.0));
    EXPECT_NEAR(frob_norm(CMatrix::identity(4)), 2.0, 1e-15);
    EXPECT_NEAR(frob_dist(pauli_x(), pauli_z()), 2.0, 1e-15);
}

TEST(CMatrix, PartialTraceOfProduct) {
    std::mt19937_64 rng(3);
    auto a = testing::random_density(2, rng);
    auto b = testing::random_density(3, rng);
    EXPECT_LT(max_abs_diff(partial_trace_b(kron(a, b), 3), a), 1e-12);
}

TEST(CMatrix, ExtractPureStateIsDeterministic) {
    std::vector<cplx> v{cplx(0, 0.6), cplx(0.8, 0)};
    auto got = extract_pure_state(CMatrix::outer(v));
    // Global phase makes the first significant component real positive.
    EXPECT_NEAR(got[0].real(), 0.6, 1e-12);
    EXPECT_NEAR(got[0].imag(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(got[1] - cplx(0, -0.8)), 0.0, 1e-12);
}

TEST(CMatrix, ExtractPureStateRejectsMixedInput) {
    try {
        extract_pure_state(DensityMatrix::maximally_mixed(2).mat());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotRankOneProjector);
        EXPECT_GT(e.residual(), 0.1);
        EXPECT_TRUE(e.is_verification_failure());
    }
}

TEST(DensityMatrix, ValidatesInput) {
    EXPECT_THROW(DensityMatrix::from_matrix(pauli_x()), Error);
    EXPECT_THROW(DensityMatrix::from_bloch(1.0, 1.0, 0.0), Error);
    CMatrix tiny_negative{{1.0 + 5e-11, 0.0}, {0.0, -5e-11}};
    EXPECT_NO_THROW(DensityMatrix::from_matrix(tiny_negative));
    CMatrix negative{{1.0 + 1e-6, 0.0}, {0.0, -1e-6}};
    EXPECT_THROW(DensityMatrix::from_matrix(negative), Error);
    auto rho = DensityMatrix::from_bloch(0, 0, 1);
    EXPECT_EQ(rho.mat()(0, 0), cplx(1.0));
}

TEST(Spectral, EigenvaluesAndDistances) {
    auto ev = hermitian_eigenvalues(pauli_y());
    EXPECT_NEAR(ev[0], -1.0, 1e-12);
    EXPECT_NEAR(ev[1], 1.0, 1e-12);
    auto zero = DensityMatrix::from_bloch(0, 0, 1).mat();
    auto one = DensityMatrix::from_bloch(0, 0, -1).mat();
    auto plus = DensityMatrix::from_bloch(1, 0, 0).mat();
    EXPECT_NEAR(trace_distance(zero, one), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(zero, plus), 0.5, 1e-12);
    EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-12);
}

TEST(Spectral, ProjectionToDensity) {
    CMatrix raw{{1.1, 0.0}, {0.0, -0.1}};
    auto p = project_to_density(raw);
    EXPECT_NEAR(trace(p).real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(p).front(), -1e-12);
}

}  // namespace
}  // namespace galwig
