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

#ifndef GALWIG_WEYL_DISPLACEMENT_H
#define GALWIG_WEYL_DISPLACEMENT_H

#include "galwig/gf/field.h"
#include "galwig/mat/cmatrix.h"

namespace galwig {

/// (shift, phase) index of V^j_i = sum_k gamma^((k+i) j) |k+i><k|.
struct DisplacementIndex {
    Label i = 0;
    Label j = 0;

    bool operator==(const DisplacementIndex &) const = default;
};

/// The d x d unitary V^j_i over the field.
CMatrix displacement(const FieldTables &field, DisplacementIndex idx);

/// acc += coeff * V^j_i without materialising V (it has one entry per column).
void add_displacement(const FieldTables &field, DisplacementIndex idx, cplx coeff, CMatrix &acc);

struct DisplacementProduct {
    cplx phase;
    DisplacementIndex index;
};

/// V_a V_b = phase * V_c with phase = gamma^(-(i_a j_b)) and
/// c = (i_a + i_b, j_a + j_b).
DisplacementProduct displacement_product_phase(const FieldTables &field, DisplacementIndex a, DisplacementIndex b);

/// All d^2 displacements in row-major (i, j) order.
std::vector<CMatrix> all_displacements(const FieldTables &field);

}  // namespace galwig

#endif
