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

#ifndef GALWIG_GF_QUADRATIC_H
#define GALWIG_GF_QUADRATIC_H

#include <utility>

#include "galwig/gf/field.h"

namespace galwig {

/// GF(d^2) realised as GF(d)[t]/(t^2 - Q t - R).
///
/// The pair (a, b) stands for a + b t and carries the label a + d*b, so the
/// base field sits inside the extension with unchanged labels and label 1
/// remains the identity. Products follow
///   (a,0)(c,0) = (ac, 0), (a,0)(0,c) = (0, ac), (0,b)(0,c) = (bcR, bcQ).
/// The extension's character reads only the base coordinate:
/// gamma_ext^(a + b t) = gamma_base^a.
class QuadExtension {
   public:
    /// Picks the smallest (R, Q) in lexicographic label order with R != 0
    /// and t^2 - Q t - R irreducible, then verifies every field axiom.
    static QuadExtension build(const FieldTables &base);

    const FieldTables &base() const {
        return base_;
    }
    const FieldTables &ext() const {
        return ext_;
    }
    Label R() const {
        return r_;
    }
    Label Q() const {
        return q_;
    }

    Label pair_to_elt(Label a, Label b) const {
        return a + base_.d() * b;
    }
    std::pair<Label, Label> elt_to_pair(Label x) const {
        return {x % base_.d(), x / base_.d()};
    }

   private:
    QuadExtension(FieldTables base, FieldTables ext, Label r, Label q)
        : base_(std::move(base)), ext_(std::move(ext)), r_(r), q_(q) {
    }

    FieldTables base_;
    FieldTables ext_;
    Label r_;
    Label q_;
};

}  // namespace galwig

#endif
