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

#include "galwig/tomo/mean_king.h"

#include <gtest/gtest.h>

#include "galwig/error.h"

namespace galwig {
namespace {

WignerFamily canonical(int d) {
    auto pp = PrimePower::from_order(d);
    return build_canonical_wigner_family(FieldTables::build(pp->p, pp->m));
}

TEST(MeanKing, QubitZBasis) {
    auto fam = canonical(2);
    EXPECT_EQ(mean_king_infer(fam, 0, {1, 0}), 1);
    EXPECT_EQ(mean_king_infer(fam, 0, {1, 1}), 1);
    EXPECT_EQ(mean_king_infer(fam, 0, {0, 0}), 0);
    EXPECT_EQ(mean_king_infer(fam, 0, {0, 1}), 0);
}

TEST(MeanKing, AgreesWithWignerSupportOracle) {
    for (int d : {2, 3, 4}) {
        auto fam = canonical(d);
        auto mubs = mubs_from_wigner(fam);
        for (int dir = 0; dir <= d; ++dir) {
            for (Label i1 = 0; i1 < d; ++i1) {
                for (Label i2 = 0; i2 < d; ++i2) {
                    EXPECT_EQ(mean_king_infer(fam, dir, {i1, i2}), mean_king_oracle(fam, mubs, dir, {i1, i2}))
                        << "d=" << d << " dir=" << dir << " point " << i1 << "," << i2;
                }
            }
        }
    }
}

TEST(MeanKing, RejectsBadInput) {
    auto fam = canonical(3);
    try {
        mean_king_infer(fam, 4, {0, 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidDirection);
    }
    EXPECT_THROW(mean_king_infer(fam, -1, {0, 0}), Error);
    EXPECT_THROW(mean_king_infer(fam, 1, {3, 0}), Error);
}

}  // namespace
}  // namespace galwig
