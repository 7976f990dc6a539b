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

#ifndef GALWIG_WEYL_FAMILIES_H
#define GALWIG_WEYL_FAMILIES_H

#include <functional>
#include <utility>
#include <vector>

#include "galwig/weyl/displacement.h"

namespace galwig {

/// One of the d+1 commuting classes of non-identity displacements.
///
/// Label 0 holds {V^j_0 : j != 0}; label l >= 1 holds
/// {V^((l-1) i)_i : i != 0}, i.e. slope l-1. Members are ordered by the
/// running parameter (j for label 0, i otherwise) ascending.
struct CommutingFamily {
    int label = 0;
    std::vector<DisplacementIndex> members;
};

/// Unit phases turning a family into a group {phase_k V_k} + {I}.
struct PhaseConvention {
    CommutingFamily family;
    std::vector<cplx> phases;
};

std::vector<CommutingFamily> partition_families(const FieldTables &field);
CommutingFamily family(const FieldTables &field, int label);

/// (family label, member position) of a non-identity index.
std::pair<int, int> locate_member(const FieldTables &field, DisplacementIndex idx);

/// Running parameter of a member: j for family 0, i otherwise.
Label member_parameter(const CommutingFamily &fam, DisplacementIndex idx);

/// The canonical phase of a member. For odd p it is gamma^(-(s i i)/2) with
/// slope s = l-1. For p = 2 it is
///   prod_{n: i_n != 0} (-i)^(s e_n e_n) * prod_{n<n': i_n, i_n' != 0} gamma^(s e_n e_n')
/// where e_n is the n-th basis element and the exponent of -i is read as a
/// digit sum; with m <= 2 the pair product reduces to nearest digits. The
/// -i branch makes the qubit family {I, X, Z, Y} with unit signs. Family 0 uses phase 1. The square always equals
/// gamma^(-(s i i)).
cplx canonical_phase(const FieldTables &field, int family_label, DisplacementIndex member);

/// Canonical phases for a whole family. Throws kClosureFailure if the
/// result is not a group or a squared phase is off.
PhaseConvention canonical_convention(const FieldTables &field, const CommutingFamily &fam);
std::vector<PhaseConvention> canonical_conventions(const FieldTables &field);

/// Max |c_a c_b gamma^(-(i_a j_b)) - c_(a+b)| over member pairs (identity
/// included with phase 1), computed from the composition law.
double closure_residual(const FieldTables &field, const PhaseConvention &conv);

/// The unitaries phase_k V_k of a convention. Verifies group closure and
/// U(t)^dagger = U(-t) by explicit matrix products; throws kClosureFailure
/// naming the offending pair.
std::vector<CMatrix> build_U_family(const FieldTables &field, const PhaseConvention &conv, double tol = kEqualityTol);

/// p = 2 only: every convention with phases in {+1, -1, +i, -i} that closes.
/// Ordered by assignment rank (phase digits 1, i, -1, -i; first member most
/// significant).
std::vector<PhaseConvention> enumerate_sign_conventions(const FieldTables &field, const CommutingFamily &fam);

/// Phases making phase_k V_k match target(V_k): phase = <V, T> / d. The
/// caller checks the result (e.g. with closure_residual).
PhaseConvention fit_convention(
    const FieldTables &field, const CommutingFamily &fam, const std::function<CMatrix(DisplacementIndex)> &target);

/// Phase of an arbitrary index under a full set of d+1 conventions
/// (1 for the identity).
cplx convention_phase(const FieldTables &field, const std::vector<PhaseConvention> &conventions, DisplacementIndex idx);

}  // namespace galwig

#endif
