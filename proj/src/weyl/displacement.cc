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

#include "galwig/weyl/displacement.h"

#include <string>

#include "galwig/error.h"

namespace galwig {

namespace {

void check_index(const FieldTables &field, DisplacementIndex idx) {
    if (idx.i < 0 || idx.i >= field.d() || idx.j < 0 || idx.j >= field.d()) {
        throw Error(
            ErrorCode::kInvalidArgument,
            "displacement index (" + std::to_string(idx.i) + "," + std::to_string(idx.j) + ") out of range");
    }
}

}  // namespace

void add_displacement(const FieldTables &field, DisplacementIndex idx, cplx coeff, CMatrix &acc) {
    check_index(field, idx);
    int d = field.d();
    if (acc.rows() != static_cast<std::size_t>(d) || acc.cols() != static_cast<std::size_t>(d)) {
        throw Error(ErrorCode::kShapeMismatch, "accumulator does not match the field order");
    }
    for (Label k = 0; k < d; ++k) {
        Label target = field.add(k, idx.i);
        acc(target, k) += coeff * field.character(field.mul(target, idx.j));
    }
}

CMatrix displacement(const FieldTables &field, DisplacementIndex idx) {
    CMatrix v(field.d(), field.d());
    add_displacement(field, idx, 1.0, v);
    return v;
}

DisplacementProduct displacement_product_phase(const FieldTables &field, DisplacementIndex a, DisplacementIndex b) {
    check_index(field, a);
    check_index(field, b);
    return {
        field.character(field.neg(field.mul(a.i, b.j))),
        {field.add(a.i, b.i), field.add(a.j, b.j)},
    };
}

std::vector<CMatrix> all_displacements(const FieldTables &field) {
    std::vector<CMatrix> out;
    out.reserve(field.d() * field.d());
    for (Label i = 0; i < field.d(); ++i) {
        for (Label j = 0; j < field.d(); ++j) {
            out.push_back(displacement(field, {i, j}));
        }
    }
    return out;
}

}  // namespace galwig
