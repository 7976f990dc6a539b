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

#include "galwig/weyl/families.h"

#include <gtest/gtest.h>

#include <set>

#include "galwig/error.h"

namespace galwig {
namespace {

FieldTables field_of(int d) {
    auto pp = PrimePower::from_order(d);
    return FieldTables::build(pp->p, pp->m);
}

TEST(Families, PartitionCoversEveryDisplacementOnce) {
    for (int d : {2, 3, 4, 5, 8, 9}) {
        auto f = field_of(d);
        auto fams = partition_families(f);
        ASSERT_EQ(static_cast<int>(fams.size()), d + 1);
        std::set<std::pair<int, int>> seen;
        for (const auto &fam : fams) {
            ASSERT_EQ(static_cast<int>(fam.members.size()), d - 1);
            for (std::size_t k = 0; k < fam.members.size(); ++k) {
                const auto &m = fam.members[k];
                EXPECT_TRUE(seen.insert({m.i, m.j}).second);
                auto [label, pos] = locate_member(f, m);
                EXPECT_EQ(label, fam.label);
                EXPECT_EQ(pos, static_cast<int>(k));
            }
        }
        EXPECT_EQ(static_cast<int>(seen.size()), d * d - 1);
    }
}

TEST(Families, MembersCommute) {
    for (int d : {3, 4, 8}) {
        auto f = field_of(d);
        for (const auto &fam : partition_families(f)) {
            for (const auto &a : fam.members) {
                for (const auto &b : fam.members) {
                    auto va = displacement(f, a);
                    auto vb = displacement(f, b);
                    EXPECT_LT(max_abs_diff(va * vb, vb * va), 1e-12);
                }
            }
        }
    }
}

TEST(Families, FamilyLayout) {
    auto f = field_of(4);
    auto fam = family(f, 3);  // slope 2
    EXPECT_EQ(fam.members[0], (DisplacementIndex{1, 2}));
    EXPECT_EQ(fam.members[1], (DisplacementIndex{2, 3}));
    EXPECT_EQ(fam.members[2], (DisplacementIndex{3, 1}));
    EXPECT_THROW(family(f, 5), Error);
    EXPECT_THROW(locate_member(f, {0, 0}), Error);
}

TEST(Families, CanonicalConventionsCloseUpToSixteen) {
    for (int d : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        auto f = field_of(d);
        for (const auto &conv : canonical_conventions(f)) {
            EXPECT_LT(closure_residual(f, conv), 1e-10) << "d=" << d << " family " << conv.family.label;
            EXPECT_NO_THROW(build_U_family(f, conv));
        }
    }
}

TEST(Families, CanonicalPhasesSquareToCharacter) {
    for (int d : {3, 4, 5, 8, 9}) {
        auto f = field_of(d);
        for (int l = 1; l <= d; ++l) {
            for (Label i = 1; i < d; ++i) {
                Label s = l - 1;
                cplx ph = canonical_phase(f, l, {i, f.mul(s, i)});
                EXPECT_NEAR(std::abs(ph), 1.0, 1e-15);
                EXPECT_LT(std::abs(ph * ph - f.character(f.neg(f.mul(s, f.mul(i, i))))), 1e-12);
            }
        }
    }
}

TEST(Families, OddCanonicalPhaseIsHalfCharacter) {
    auto f = field_of(3);
    // Family 2 (slope 1), member (1,1): gamma^(-1/2) = gamma^(-2) = gamma^1.
    EXPECT_LT(std::abs(canonical_phase(f, 2, {1, 1}) - f.character(1)), 1e-15);
    EXPECT_EQ(canonical_phase(f, 0, {0, 2}), cplx(1.0));
}

TEST(Families, QubitCanonicalGivesHermitianPaulis) {
    auto f = field_of(2);
    auto conv = canonical_convention(f, family(f, 2));
    auto us = build_U_family(f, conv);
    // U_{1,1} = -i V^1_1 = sigma_Y.
    CMatrix y{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}};
    EXPECT_LT(max_abs_diff(us[0], y), 1e-15);
}

TEST(Families, SignEnumerationCounts) {
    auto f2 = field_of(2);
    for (const auto &fam : partition_families(f2)) {
        EXPECT_EQ(enumerate_sign_conventions(f2, fam).size(), 2u);
    }
    auto f4 = field_of(4);
    for (const auto &fam : partition_families(f4)) {
        auto convs = enumerate_sign_conventions(f4, fam);
        EXPECT_EQ(convs.size(), 4u) << "family " << fam.label;
        for (const auto &c : convs) {
            EXPECT_NO_THROW(build_U_family(f4, c));
        }
    }
    EXPECT_THROW(enumerate_sign_conventions(field_of(3), family(field_of(3), 0)), Error);
}

TEST(Families, BrokenPhaseFailsClosure) {
    auto f = field_of(3);
    auto conv = canonical_convention(f, family(f, 1));
    conv.phases[0] *= -1.0;
    EXPECT_GT(closure_residual(f, conv), 0.5);
    try {
        build_U_family(f, conv);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kClosureFailure);
    }
}

TEST(Families, FitRecoversPhases) {
    auto f = field_of(9);
    for (const auto &fam : partition_families(f)) {
        auto conv = canonical_convention(f, fam);
        auto fit = fit_convention(f, fam, [&](DisplacementIndex idx) {
            auto [label, pos] = locate_member(f, idx);
            return conv.phases[pos] * displacement(f, idx);
        });
        for (std::size_t k = 0; k < conv.phases.size(); ++k) {
            EXPECT_LT(std::abs(fit.phases[k] - conv.phases[k]), 1e-12);
        }
    }
}

}  // namespace
}  // namespace galwig
