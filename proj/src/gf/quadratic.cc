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

#include "galwig/gf/quadratic.h"

#include "galwig/error.h"

namespace galwig {

QuadExtension QuadExtension::build(const FieldTables &base) {
    int d = base.d();
    if (d * d > kMaxFieldOrder) {
        throw Error(ErrorCode::kInvalidArgument, "quadratic extension exceeds the supported field order");
    }
    Label r = -1;
    Label q = -1;
    for (Label rr = 1; rr < d && r < 0; ++rr) {
        for (Label qq = 0; qq < d && r < 0; ++qq) {
            bool has_root = false;
            for (Label t = 0; t < d && !has_root; ++t) {
                Label value = base.sub(base.sub(base.mul(t, t), base.mul(qq, t)), rr);
                has_root = value == 0;
            }
            if (!has_root) {
                r = rr;
                q = qq;
            }
        }
    }
    if (r < 0) {
        throw Error(ErrorCode::kInvalidArgument, "no irreducible quadratic found");
    }

    int dd = d * d;
    std::vector<Label> add(dd * dd);
    std::vector<Label> mul(dd * dd);
    for (Label x = 0; x < dd; ++x) {
        Label a = x % d;
        Label b = x / d;
        for (Label y = 0; y < dd; ++y) {
            Label c = y % d;
            Label e = y / d;
            add[x * dd + y] = base.add(a, c) + d * base.add(b, e);
            Label be = base.mul(b, e);
            Label re = base.add(base.mul(a, c), base.mul(be, r));
            Label im = base.add(base.add(base.mul(a, e), base.mul(b, c)), base.mul(be, q));
            mul[x * dd + y] = re + d * im;
        }
    }
    std::vector<int> weights = base.functional_weights();
    weights.resize(2 * base.m(), 0);
    PrimePower pp{base.p(), 2 * base.m(), dd};
    FieldTables ext = FieldTables::from_tables(
        pp,
        std::move(add),
        std::move(mul),
        std::move(weights),
        "quadratic extension t^2 = " + std::to_string(q) + "*t + " + std::to_string(r) + " over GF(" +
            std::to_string(d) + ")");
    return QuadExtension(base, std::move(ext), r, q);
}

}  // namespace galwig
