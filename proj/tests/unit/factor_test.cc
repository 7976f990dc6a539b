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

#include "galwig/factor/factor.h"

#include <gtest/gtest.h>

#include "galwig/error.h"
#include "galwig/gf/quadratic.h"
#include "test_util.h"

namespace galwig {
namespace {

using testing::pauli_x;
using testing::pauli_y;
using testing::pauli_z;

SignAssignment signs(std::vector<SignTriple> q) {
    return SignAssignment{std::move(q)};
}

TEST(SignAssignment, RankRoundTrip) {
    for (int r = 0; r < 512; ++r) {
        EXPECT_EQ(SignAssignment::from_rank(r, 3).rank(), r);
    }
    auto s = signs({{1, 1, 1}, {-1, -1, -1}});
    EXPECT_EQ(s.to_string(), "(+,+,+)x(-,-,-)");
    EXPECT_EQ(s.rank(), 7);
}

TEST(QubitFamily, EverySignTripleIsAcceptable) {
    for (int r = 0; r < 8; ++r) {
        auto fam = product_family(SignAssignment::from_rank(r, 1));
        EXPECT_TRUE(verify_acceptability(fam).passed()) << r;
    }
}

TEST(ProductScan, TwoQubitCountIsHalf) {
    auto reports = scan_two_qubit_products();
    ASSERT_EQ(reports.size(), 64u);
    int acceptable = 0;
    for (const auto &r : reports) {
        acceptable += r.acceptable ? 1 : 0;
        EXPECT_EQ(r.acceptable, r.witness) << r.label;
        EXPECT_LT(r.residuals.at("b"), 1e-8);  // products are always orthonormal
        EXPECT_EQ(r.id, SignAssignment::from_rank(r.id, 2).rank());
    }
    EXPECT_EQ(acceptable, 32);
}

TEST(ProductScan, MixedSignExampleMatchesDisplayedProduct) {
    auto s = signs({{1, 1, 1}, {-1, -1, -1}});
    auto rep = evaluate_product(s);
    EXPECT_TRUE(rep.acceptable);
    auto fam = product_family(s);
    CMatrix a = CMatrix::identity(2) + pauli_x() + pauli_y() + pauli_z();
    CMatrix b = CMatrix::identity(2) - pauli_x() - pauli_y() - pauli_z();
    EXPECT_LT(max_abs_diff(fam.op(0, 0), kron(0.5 * a, 0.5 * b)), 1e-12);
    // The binary point labels do not make the digit basis self-dual, so the
    // field Fourier coefficients are displacements only up to relabelling:
    // each one is a single V^j_i times a unit phase.
    auto us = phased_displacements(fam);
    auto vs = all_displacements(fam.field());
    for (const auto &u : us) {
        double best = 0.0;
        for (const auto &v : vs) {
            best = std::max(best, std::abs(hs_inner(v, u)) / 4.0);
        }
        EXPECT_NEAR(best, 1.0, 1e-10);
    }
}

TEST(ProductScan, GeometricExampleIsAcceptable) {
    EXPECT_TRUE(evaluate_product(signs({{1, 1, 1}, {1, -1, 1}})).acceptable);
    EXPECT_FALSE(evaluate_product(signs({{1, 1, 1}, {1, 1, 1}})).acceptable);
    EXPECT_FALSE(evaluate_product(signs({{1, 1, 1}, {1, -1, -1}})).acceptable);
}

TEST(ProductScan, ThreeQubitsNeverFactorise) {
    auto reports = scan_three_qubit_products();
    ASSERT_EQ(reports.size(), 512u);
    for (const auto &r : reports) {
        EXPECT_FALSE(r.acceptable) << r.label;
        EXPECT_FALSE(r.witness) << r.label;
    }
}

TEST(ProductScan, WitnessIsPureCombinatorics) {
    // No three triples pairwise agree an even number of times.
    for (int r = 0; r < 512; ++r) {
        EXPECT_FALSE(sign_parity_witness(SignAssignment::from_rank(r, 3)));
    }
    int even_pairs = 0;
    for (int r = 0; r < 64; ++r) {
        even_pairs += sign_parity_witness(SignAssignment::from_rank(r, 2)) ? 1 : 0;
    }
    EXPECT_EQ(even_pairs, 32);
}

TEST(ProductScan, ReportsAreDeterministic) {
    auto a = factor_reports_csv(scan_two_qubit_products());
    auto b = factor_reports_csv(scan_two_qubit_products());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.substr(0, a.find('\n')), "id,label,acceptable,worst_residual");
}

TEST(OddBipartite, QutritsAndQuintsFactorise) {
    for (int p : {3, 5}) {
        auto rep = factor_odd_bipartite(p, 1);
        EXPECT_TRUE(rep.acceptable);
        EXPECT_LT(rep.residuals.at("factorisation"), 1e-10);
        EXPECT_EQ(static_cast<int>(rep.index_map.size()), p * p);
    }
    EXPECT_THROW(factor_odd_bipartite(2, 1), Error);
    EXPECT_THROW(factor_odd_bipartite(9, 1), Error);
}

TEST(OddBipartite, OriginFactorises) {
    auto base = FieldTables::build(3, 1);
    auto ext = QuadExtension::build(base);
    auto big = build_canonical_wigner_family(ext.ext());
    auto small = build_canonical_wigner_family(base);
    EXPECT_LT(max_abs_diff(big.op(0, 0), kron(small.op(0, 0), small.op(0, 0))), 1e-12);
}

TEST(Crt, FifteenFactorises) {
    auto rep = crt_factor_check(3, 5);
    EXPECT_TRUE(rep.acceptable);
    EXPECT_LT(rep.residuals.at("factorisation"), 1e-10);
    EXPECT_LT(rep.residuals.at("phase_identity"), 1e-10);
    EXPECT_EQ(rep.index_map.size(), 15u);
    // m = 5 m_a + 3 m_b (mod 15).
    EXPECT_EQ(rep.index_map[1 * 5 + 1].first, "8");
}

TEST(Crt, TrivialAndInvalidFactors) {
    EXPECT_TRUE(crt_factor_check(3, 1).acceptable);
    EXPECT_THROW(crt_factor_check(3, 9), Error);
    EXPECT_THROW(crt_factor_check(2, 3), Error);
    EXPECT_THROW(crt_factor_check(7, 11), Error);
}

TEST(Crt, ModularDisplacementDefinition) {
    auto v = modular_displacement(5, 2, 3);
    // |k> -> w^((k+2) 3) |k+2>.
    EXPECT_LT(std::abs(v(2, 0) - unit_root(6, 5)), 1e-15);
    EXPECT_LT(std::abs(v(0, 3) - cplx(1.0)), 1e-15);
}

}  // namespace
}  // namespace galwig
