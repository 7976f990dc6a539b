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

#include <gtest/gtest.h>

#include "galwig/error.h"
#include "galwig/tomo/sic.h"
#include "test_util.h"

namespace galwig {
namespace {

TEST(Povm, RejectsInvalidElements) {
    CMatrix half = 0.5 * CMatrix::identity(2);
    EXPECT_NO_THROW(POVM::make({half, half}, {"a", "b"}));
    try {
        POVM::make({half}, {"a"});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotNormalized);
    }
    CMatrix neg{{1.5, 0.0}, {0.0, -0.5}};
    CMatrix rest{{-0.5, 0.0}, {0.0, 1.5}};
    EXPECT_THROW(POVM::make({neg, rest}, {"a", "b"}), Error);
    EXPECT_THROW(POVM::make({half, half}, {"a"}), Error);
}

TEST(MubTomography, ExactRoundTrip) {
    std::mt19937_64 rng(5);
    for (int d : {2, 3, 4}) {
        auto scheme = mub_pvm_scheme(d);
        EXPECT_EQ(static_cast<int>(scheme.settings.size()), d + 1);
        for (int t = 0; t < 10; ++t) {
            auto rho = testing::random_density(d, rng);
            auto est = invert_frequencies(scheme, scheme_probabilities(scheme, rho));
            EXPECT_LT(max_abs_diff(est, rho), 1e-9) << "d=" << d;
        }
    }
}

TEST(MubTomography, QubitBlochExample) {
    auto fam = build_canonical_wigner_family(FieldTables::build(2, 1));
    auto rho = DensityMatrix::from_bloch(0.3, -0.2, 0.5).mat();
    auto est = pvm_mub_tomography(rho, mubs_from_wigner(fam));
    EXPECT_LT(max_abs_diff(est.mat(), rho), 1e-10);
}

TEST(MubTomography, MaximallyMixed) {
    auto scheme = mub_pvm_scheme(4);
    auto rho = DensityMatrix::maximally_mixed(4).mat();
    for (const auto &probs : scheme_probabilities(scheme, rho)) {
        for (double p : probs) {
            EXPECT_NEAR(p, 0.25, 1e-12);
        }
    }
    EXPECT_LT(max_abs_diff(invert_frequencies(scheme, scheme_probabilities(scheme, rho)), rho), 1e-12);
    EXPECT_THROW(mub_pvm_scheme(6), Error);
}

TEST(FrameTomography, SicSchemesInvertExactly) {
    std::mt19937_64 rng(6);
    for (const auto &scheme : {sic_qubit_scheme(), product_sic_scheme()}) {
        for (int t = 0; t < 10; ++t) {
            auto rho = testing::random_density(scheme.d, rng);
            auto est = invert_frequencies(scheme, scheme_probabilities(scheme, rho));
            EXPECT_LT(max_abs_diff(est, rho), 1e-9) << scheme.id;
        }
    }
}

TEST(FrameTomography, ShapeChecks) {
    auto scheme = sic_qubit_scheme();
    EXPECT_THROW(invert_frequencies(scheme, {{0.25, 0.25, 0.5}}), Error);
    EXPECT_THROW(invert_frequencies(scheme, {}), Error);
}

TEST(HermitianBasis, Orthonormal) {
    auto basis = hermitian_basis(3);
    ASSERT_EQ(basis.size(), 9u);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        EXPECT_LT(hermiticity_residual(basis[a]), 1e-15);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            EXPECT_LT(std::abs(hs_inner(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)), 1e-12);
        }
    }
}

}  // namespace
}  // namespace galwig
