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

#include "galwig/wigner/wigner.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "galwig/error.h"
#include "test_util.h"

namespace galwig {
namespace {

using testing::pauli_x;
using testing::pauli_y;
using testing::pauli_z;

FieldTables field_of(int d) {
    auto pp = PrimePower::from_order(d);
    return FieldTables::build(pp->p, pp->m);
}

const WignerFamily &canonical(int d) {
    static std::map<int, WignerFamily> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        it = cache.emplace(d, build_canonical_wigner_family(field_of(d))).first;
    }
    return it->second;
}

CMatrix qubit_point(int k, int l) {
    CMatrix w = CMatrix::identity(2);
    double sk = k ? -1 : 1;
    double sl = l ? -1 : 1;
    w.add_scaled(sk, pauli_z());
    w.add_scaled(sl, pauli_x());
    w.add_scaled(sk * sl, pauli_y());
    w *= 0.5;
    return w;
}

TEST(WignerFamily, QubitOperatorsInClosedForm) {
    const auto &fam = canonical(2);
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            EXPECT_LT(max_abs_diff(fam.op(k, l), qubit_point(k, l)), 1e-12) << k << l;
        }
    }
}

TEST(WignerFamily, OperatorsSumToDTimesIdentity) {
    for (int d : {2, 3, 4, 5, 8, 9}) {
        const auto &fam = canonical(d);
        CMatrix sum(d, d);
        for (const auto &op : fam.ops()) {
            sum += op;
        }
        EXPECT_LT(max_abs_diff(sum, static_cast<double>(d) * CMatrix::identity(d)), 1e-10);
    }
}

TEST(WignerFamily, AcceptableForCanonicalConventions) {
    for (int d : testing::small_orders()) {
        auto report = verify_acceptability(canonical(d));
        EXPECT_LT(report.hermiticity, 1e-10) << "d=" << d;
        EXPECT_LT(report.trace, 1e-10) << "d=" << d;
        EXPECT_LT(report.orthonormality, 1e-8) << "d=" << d;
        EXPECT_LT(report.projector, 1e-8) << "d=" << d;
        EXPECT_LT(report.parallel, 1e-8) << "d=" << d;
        EXPECT_TRUE(report.first_failure().empty());
    }
}

TEST(WignerFamily, BrokenConventionFailsLineProperty) {
    auto f = field_of(3);
    auto convs = canonical_conventions(f);
    // Negating a whole family keeps U(a)^dagger = U(-a) but breaks closure.
    for (auto &ph : convs[2].phases) {
        ph *= -1.0;
    }
    auto fam = WignerFamily::from_operators(f, assemble_wigner_operators(f, convs));
    auto report = verify_acceptability(fam);
    EXPECT_LT(report.trace, 1e-10);
    EXPECT_LT(report.hermiticity, 1e-10);
    EXPECT_LT(report.orthonormality, 1e-10);
    EXPECT_GT(report.projector, 1e-3);
    EXPECT_EQ(report.first_failure().rfind("(c)", 0), 0u);
    try {
        WignerFamily::build(f, convs);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kAcceptabilityFailure);
        EXPECT_TRUE(e.is_verification_failure());
    }
}

TEST(LineAverage, QubitExamples) {
    const auto &fam = canonical(2);
    CMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
    EXPECT_LT(max_abs_diff(line_average(fam, LineSpec::vertical(0)), zero), 1e-12);
    CMatrix plus_x = 0.5 * (CMatrix::identity(2) + pauli_x());
    EXPECT_LT(max_abs_diff(line_average(fam, LineSpec::sloped(0, 0)), plus_x), 1e-12);
}

TEST(LineAverage, LinePointsLayout) {
    auto f = field_of(4);
    auto pts = line_points(f, LineSpec::sloped(2, 0));
    std::vector<PhasePoint> expect{{0, 0}, {1, 2}, {2, 3}, {3, 1}};
    EXPECT_EQ(pts, expect);
    EXPECT_EQ(line_points(f, LineSpec::vertical(2))[3], (PhasePoint{2, 3}));
    EXPECT_EQ(LineSpec::of_direction(3, 1).slope, 2);
    EXPECT_THROW(line_points(f, LineSpec::sloped(4, 0)), Error);
}

TEST(LineAverage, VerticalLinesGiveComputationalBasis) {
    for (int d : {3, 4, 5}) {
        const auto &fam = canonical(d);
        for (Label o = 0; o < d; ++o) {
            CMatrix p = line_average(fam, LineSpec::vertical(o));
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c) {
                    EXPECT_LT(std::abs(p(r, c) - (r == o && c == o ? 1.0 : 0.0)), 1e-10);
                }
            }
        }
    }
}

TEST(Mubs, QubitBasesAreSpinEigenbases) {
    auto mubs = mubs_from_wigner(canonical(2));
    ASSERT_EQ(mubs.bases.size(), 3u);
    const CMatrix *ops[3] = {&pauli_z(), &pauli_x(), &pauli_y()};
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 2; ++i) {
            auto v = mubs.bases[k][i];
            auto w = galwig::apply(*ops[k], v);
            double eig = i == 0 ? 1.0 : -1.0;
            for (int r = 0; r < 2; ++r) {
                EXPECT_LT(std::abs(w[r] - eig * v[r]), 1e-12) << "basis " << k << " state " << i;
            }
        }
    }
}

TEST(Mubs, UnbiasedAcrossDimensions) {
    for (int d : testing::small_orders()) {
        auto mubs = mubs_from_wigner(canonical(d));
        EXPECT_EQ(static_cast<int>(mubs.bases.size()), d + 1);
        // Independent overlap check.
        for (int k = 0; k <= d; ++k) {
            for (int l = k + 1; l <= d; ++l) {
                for (int i = 0; i < d; ++i) {
                    for (int j = 0; j < d; ++j) {
                        EXPECT_NEAR(std::norm(inner(mubs.bases[k][i], mubs.bases[l][j])), 1.0 / d, 1e-8);
                    }
                }
            }
        }
    }
}

TEST(Mubs, QuartitHasThreeProductAndTwoEntangledBases) {
    auto mubs = mubs_from_wigner(canonical(4));
    int product = 0;
    int entangled = 0;
    for (const auto &basis : mubs.bases) {
        bool all_product = true;
        bool all_maximal = true;
        for (const auto &v : basis) {
            CMatrix red = partial_trace_b(CMatrix::outer(v), 2);
            double purity = hs_inner(red, red).real();
            all_product = all_product && std::abs(purity - 1.0) < 1e-8;
            all_maximal = all_maximal && max_abs_diff(red, 0.5 * CMatrix::identity(2)) < 1e-8;
        }
        product += all_product ? 1 : 0;
        entangled += all_maximal ? 1 : 0;
    }
    EXPECT_EQ(product, 3);
    EXPECT_EQ(entangled, 2);
}

TEST(Distribution, QubitPatterns) {
    const auto &fam = canonical(2);
    auto zero = wigner_distribution(DensityMatrix::from_bloch(0, 0, 1).mat(), fam);
    auto plus = wigner_distribution(DensityMatrix::from_bloch(1, 0, 0).mat(), fam);
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            EXPECT_NEAR(zero.at(k, l), k == 0 ? 0.5 : 0.0, 1e-12);
            EXPECT_NEAR(plus.at(k, l), l == 0 ? 0.5 : 0.0, 1e-12);
        }
    }
}

TEST(Distribution, MaximallyMixedIsUniform) {
    for (int d : {3, 4, 5}) {
        auto w = wigner_distribution(DensityMatrix::maximally_mixed(d).mat(), canonical(d));
        for (double v : w.values) {
            EXPECT_NEAR(v, 1.0 / (d * d), 1e-12);
        }
        auto weyl = weyl_distribution(DensityMatrix::maximally_mixed(d).mat(), field_of(d));
        for (int k = 0; k < d * d; ++k) {
            EXPECT_LT(std::abs(weyl.values[k] - (k == 0 ? 1.0 / d : 0.0)), 1e-12);
        }
    }
    EXPECT_THROW(wigner_distribution(CMatrix::identity(3), canonical(2)), Error);
}

TEST(Distribution, QubitWeylSlots) {
    auto w = weyl_distribution(DensityMatrix::from_bloch(0, 0, 1).mat(), field_of(2));
    EXPECT_LT(std::abs(w.at(0, 0) - 0.5), 1e-12);
    EXPECT_LT(std::abs(w.at(1, 0)), 1e-12);
    EXPECT_LT(std::abs(w.at(1, 1)), 1e-12);
    EXPECT_LT(std::abs(w.at(0, 1) - 0.5), 1e-12);
}

TEST(Distribution, RoundTripsOnRandomStates) {
    std::mt19937_64 rng(2024);
    for (int d : {2, 3, 4}) {
        const auto &fam = canonical(d);
        auto f = field_of(d);
        for (int t = 0; t < 50; ++t) {
            auto rho = testing::random_density(d, rng);
            auto w = wigner_distribution(rho, fam);
            double total = 0.0;
            for (double v : w.values) {
                total += v;
            }
            EXPECT_NEAR(total, 1.0, 1e-10);
            EXPECT_LT(frob_dist(reconstruct_density(w, fam).mat(), rho), 1e-10);
            EXPECT_LT(frob_dist(reconstruct_density(weyl_distribution(rho, f), f).mat(), rho), 1e-10);
        }
    }
}

TEST(Distribution, LineMarginalsAreProbabilities) {
    std::mt19937_64 rng(9);
    for (int d : {3, 4, 5}) {
        const auto &fam = canonical(d);
        auto rho = testing::random_density(d, rng);
        auto w = wigner_distribution(rho, fam);
        for (int dir = 0; dir <= d; ++dir) {
            for (Label o = 0; o < d; ++o) {
                auto line = LineSpec::of_direction(dir, o);
                double expect = hs_inner(line_average(fam, line), rho).real();
                EXPECT_NEAR(line_marginal(w, fam.field(), line), expect, 1e-9);
            }
        }
    }
}

TEST(Distribution, MubStatesAreSupportedOnTheirLine) {
    for (int d : {2, 3, 4, 5}) {
        const auto &fam = canonical(d);
        auto mubs = mubs_from_wigner(fam);
        for (int dir = 0; dir <= d; ++dir) {
            for (Label i = 0; i < d; ++i) {
                auto w = wigner_distribution(DensityMatrix::pure(mubs.bases[dir][i]).mat(), fam);
                std::vector<double> expect(d * d, 0.0);
                for (const auto &pt : line_points(fam.field(), LineSpec::of_direction(dir, i))) {
                    expect[pt.i1 * d + pt.i2] = 1.0 / d;
                }
                for (int k = 0; k < d * d; ++k) {
                    EXPECT_NEAR(w.values[k], expect[k], 1e-9);
                }
            }
        }
    }
}

TEST(Covariance, DisplacementConjugation) {
    for (int d : {2, 3, 4, 5, 8, 9}) {
        EXPECT_LT(covariance_residual(canonical(d)), 1e-10) << "d=" << d;
    }
}

TEST(Symplectic, AgreesWithWignerDistribution) {
    std::mt19937_64 rng(17);
    auto f = field_of(2);
    for (int t = 0; t < 20; ++t) {
        auto rho = testing::random_qubit(rng);
        auto via_weyl = qubit_symplectic_transform(weyl_distribution(rho, f));
        auto direct = wigner_distribution(rho, canonical(2));
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(via_weyl.values[k], direct.values[k], 1e-10);
        }
    }
    auto mixed = qubit_symplectic_transform(weyl_distribution(0.5 * CMatrix::identity(2), f));
    for (double v : mixed.values) {
        EXPECT_NEAR(v, 0.25, 1e-12);
    }
    try {
        qubit_symplectic_transform(weyl_distribution(CMatrix::identity(3), field_of(3)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kWrongDimension);
    }
}

TEST(TransformationLaw, LineAveragesRebuildPhasedDisplacements) {
    for (int d : {2, 3, 4, 5, 8}) {
        EXPECT_LT(transformation_law_residual(canonical(d)), 1e-10) << "d=" << d;
    }
}

TEST(TransformationLaw, FourierInversionRecoversConventions) {
    for (int d : {3, 4}) {
        const auto &fam = canonical(d);
        auto bare = WignerFamily::from_operators(fam.field(), fam.ops());
        auto recovered = recover_conventions(bare);
        const auto &orig = *fam.conventions();
        for (std::size_t l = 0; l < orig.size(); ++l) {
            for (std::size_t k = 0; k < orig[l].phases.size(); ++k) {
                EXPECT_LT(std::abs(recovered[l].phases[k] - orig[l].phases[k]), 1e-10);
            }
        }
        EXPECT_LT(transformation_law_residual(bare), 1e-10);
    }
}

}  // namespace
}  // namespace galwig
