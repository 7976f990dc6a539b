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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "galwig/error.h"

namespace galwig {

CommutingFamily family(const FieldTables &field, int label) {
    int d = field.d();
    if (label < 0 || label > d) {
        throw Error(ErrorCode::kInvalidArgument, "family label out of range");
    }
    CommutingFamily fam;
    fam.label = label;
    for (Label t = 1; t < d; ++t) {
        if (label == 0) {
            fam.members.push_back({0, t});
        } else {
            fam.members.push_back({t, field.mul(label - 1, t)});
        }
    }
    return fam;
}

std::vector<CommutingFamily> partition_families(const FieldTables &field) {
    std::vector<CommutingFamily> out;
    for (int l = 0; l <= field.d(); ++l) {
        out.push_back(family(field, l));
    }
    return out;
}

std::pair<int, int> locate_member(const FieldTables &field, DisplacementIndex idx) {
    if (idx.i == 0 && idx.j == 0) {
        throw Error(ErrorCode::kInvalidArgument, "the identity belongs to no family");
    }
    if (idx.i == 0) {
        return {0, idx.j - 1};
    }
    return {field.div(idx.j, idx.i) + 1, idx.i - 1};
}

Label member_parameter(const CommutingFamily &fam, DisplacementIndex idx) {
    return fam.label == 0 ? idx.j : idx.i;
}

cplx canonical_phase(const FieldTables &field, int family_label, DisplacementIndex member) {
    if (member.i == 0 && member.j == 0) {
        return 1.0;
    }
    if (locate_member(field, member).first != family_label) {
        throw Error(ErrorCode::kInvalidArgument, "index is not a member of family " + std::to_string(family_label));
    }
    if (family_label == 0) {
        return 1.0;
    }
    Label slope = family_label - 1;
    if (field.p() != 2) {
        return field.half_character(field.neg(field.mul(slope, field.mul(member.i, member.i))));
    }
    auto digits = field.digits(member.i);
    cplx phase = 1.0;
    for (int n = 0; n < field.m(); ++n) {
        if (digits[n] == 0) {
            continue;
        }
        Label en = field.basis_element(n);
        // The -i square-root branch: with V^1_1 = +i sigma_Y it makes the
        // qubit U_{1,1} equal to sigma_Y.
        phase *= std::conj(field.half_character(field.mul(slope, field.mul(en, en))));
        for (int n2 = n + 1; n2 < field.m(); ++n2) {
            if (digits[n2] != 0) {
                phase *= field.character(field.mul(slope, field.mul(en, field.basis_element(n2))));
            }
        }
    }
    return phase;
}

double closure_residual(const FieldTables &field, const PhaseConvention &conv) {
    int d = field.d();
    const auto &fam = conv.family;
    if (static_cast<int>(conv.phases.size()) != d - 1 || static_cast<int>(fam.members.size()) != d - 1) {
        throw Error(ErrorCode::kShapeMismatch, "convention must carry d-1 phases");
    }
    // Index by running parameter; slot 0 is the identity.
    std::vector<cplx> phase_of(d, 1.0);
    std::vector<DisplacementIndex> index_of(d, DisplacementIndex{0, 0});
    for (int k = 0; k < d - 1; ++k) {
        Label t = member_parameter(fam, fam.members[k]);
        phase_of[t] = conv.phases[k];
        index_of[t] = fam.members[k];
    }
    double worst = 0.0;
    for (Label a = 0; a < d; ++a) {
        for (Label b = 0; b < d; ++b) {
            auto prod = displacement_product_phase(field, index_of[a], index_of[b]);
            Label c = field.add(a, b);
            if (!(prod.index == index_of[c])) {
                return std::numeric_limits<double>::infinity();
            }
            worst = std::max(worst, std::abs(phase_of[a] * phase_of[b] * prod.phase - phase_of[c]));
        }
    }
    return worst;
}

PhaseConvention canonical_convention(const FieldTables &field, const CommutingFamily &fam) {
    PhaseConvention conv{fam, {}};
    double squared = 0.0;
    for (const auto &mem : fam.members) {
        cplx ph = canonical_phase(field, fam.label, mem);
        conv.phases.push_back(ph);
        Label slope = fam.label == 0 ? 0 : fam.label - 1;
        cplx expect = fam.label == 0 ? cplx(1.0) : field.character(field.neg(field.mul(slope, field.mul(mem.i, mem.i))));
        squared = std::max(squared, std::abs(ph * ph - expect));
    }
    if (squared > kEqualityTol) {
        throw Error(ErrorCode::kClosureFailure, "canonical phase squares off the expected character", squared);
    }
    double res = closure_residual(field, conv);
    if (res > kEqualityTol) {
        throw Error(
            ErrorCode::kClosureFailure, "canonical phases do not close family " + std::to_string(fam.label), res);
    }
    return conv;
}

std::vector<PhaseConvention> canonical_conventions(const FieldTables &field) {
    std::vector<PhaseConvention> out;
    for (const auto &fam : partition_families(field)) {
        out.push_back(canonical_convention(field, fam));
    }
    return out;
}

std::vector<CMatrix> build_U_family(const FieldTables &field, const PhaseConvention &conv, double tol) {
    int d = field.d();
    const auto &fam = conv.family;
    if (static_cast<int>(conv.phases.size()) != d - 1) {
        throw Error(ErrorCode::kShapeMismatch, "convention must carry d-1 phases");
    }
    std::vector<CMatrix> by_param(d);
    by_param[0] = CMatrix::identity(d);
    std::vector<CMatrix> out;
    for (int k = 0; k < d - 1; ++k) {
        CMatrix u(d, d);
        add_displacement(field, fam.members[k], conv.phases[k], u);
        by_param[member_parameter(fam, fam.members[k])] = u;
        out.push_back(std::move(u));
    }
    for (Label a = 0; a < d; ++a) {
        double adj = max_abs_diff(dagger(by_param[a]), by_param[field.neg(a)]);
        if (adj > tol) {
            throw Error(
                ErrorCode::kClosureFailure,
                "U(" + std::to_string(a) + ")^dagger differs from U(-" + std::to_string(a) + ")",
                adj);
        }
        for (Label b = 0; b < d; ++b) {
            double res = max_abs_diff(by_param[a] * by_param[b], by_param[field.add(a, b)]);
            if (res > tol) {
                throw Error(
                    ErrorCode::kClosureFailure,
                    "family " + std::to_string(fam.label) + ": U(" + std::to_string(a) + ") U(" + std::to_string(b) +
                        ") is not U(" + std::to_string(field.add(a, b)) + ")",
                    res);
            }
        }
    }
    return out;
}

std::vector<PhaseConvention> enumerate_sign_conventions(const FieldTables &field, const CommutingFamily &fam) {
    if (field.p() != 2) {
        throw Error(ErrorCode::kInvalidArgument, "sign conventions are enumerated for characteristic 2 only");
    }
    static const std::array<cplx, 4> kUnits{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    std::size_t n = fam.members.size();
    if (n > 15) {
        throw Error(ErrorCode::kInvalidArgument, "sign enumeration is limited to d <= 16");
    }
    std::vector<PhaseConvention> out;
    std::size_t total = std::size_t{1} << (2 * n);
    std::vector<std::size_t> digit(n, 0);
    for (std::size_t rank = 0; rank < total; ++rank) {
        std::size_t r = rank;
        for (std::size_t k = n; k-- > 0;) {
            digit[k] = r & 3;
            r >>= 2;
        }
        PhaseConvention conv{fam, std::vector<cplx>(n)};
        for (std::size_t k = 0; k < n; ++k) {
            conv.phases[k] = kUnits[digit[k]];
        }
        if (closure_residual(field, conv) < kEqualityTol) {
            out.push_back(std::move(conv));
        }
    }
    return out;
}

PhaseConvention fit_convention(
    const FieldTables &field, const CommutingFamily &fam, const std::function<CMatrix(DisplacementIndex)> &target) {
    PhaseConvention conv{fam, {}};
    for (const auto &mem : fam.members) {
        cplx overlap = hs_inner(displacement(field, mem), target(mem)) / static_cast<double>(field.d());
        conv.phases.push_back(overlap);
    }
    return conv;
}

cplx convention_phase(const FieldTables &field, const std::vector<PhaseConvention> &conventions, DisplacementIndex idx) {
    if (idx.i == 0 && idx.j == 0) {
        return 1.0;
    }
    auto [label, pos] = locate_member(field, idx);
    if (static_cast<int>(conventions.size()) != field.d() + 1) {
        throw Error(ErrorCode::kShapeMismatch, "need one convention per family");
    }
    const auto &conv = conventions[label];
    if (conv.family.label != label) {
        throw Error(ErrorCode::kInvalidArgument, "conventions must be ordered by family label");
    }
    return conv.phases[pos];
}

}  // namespace galwig
