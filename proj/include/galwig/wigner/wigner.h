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

#ifndef GALWIG_WIGNER_WIGNER_H
#define GALWIG_WIGNER_WIGNER_H

#include <optional>
#include <string>
#include <vector>

#include "galwig/weyl/families.h"

namespace galwig {

/// A point (i1, i2) of the d x d discrete phase space.
struct PhasePoint {
    Label i1 = 0;
    Label i2 = 0;

    bool operator==(const PhasePoint &) const = default;
};

/// The d^2 phase-point operators of one phase convention.
///
/// W(i1, i2) = (1/d) sum_{m,n} gamma^(-(i1 n) + i2 m) U_{m,n}, where U_{m,n}
/// is the phased displacement phase(m,n) V^n_m.
class WignerFamily {
   public:
    /// Assembles and verifies the family; throws kAcceptabilityFailure naming
    /// the first failed property.
    static WignerFamily build(
        const FieldTables &field, const std::vector<PhaseConvention> &conventions, double tol = kProjectorTol);

    /// Assembles the family of a convention set without verification, keeping
    /// the conventions. Callers that want residuals rather than an exception
    /// pair this with verify_acceptability.
    static WignerFamily assemble(const FieldTables &field, const std::vector<PhaseConvention> &conventions);

    /// Wraps externally assembled operators (row-major over (i1, i2)) without
    /// verification. Used to test candidate families such as product
    /// families.
    static WignerFamily from_operators(const FieldTables &field, std::vector<CMatrix> ops);

    const FieldTables &field() const {
        return field_;
    }
    int d() const {
        return field_.d();
    }
    const CMatrix &op(Label i1, Label i2) const {
        return ops_[i1 * field_.d() + i2];
    }
    const CMatrix &op(PhasePoint pt) const {
        return op(pt.i1, pt.i2);
    }
    const std::vector<CMatrix> &ops() const {
        return ops_;
    }
    const std::optional<std::vector<PhaseConvention>> &conventions() const {
        return conventions_;
    }

   private:
    WignerFamily(FieldTables field, std::vector<CMatrix> ops, std::optional<std::vector<PhaseConvention>> conventions)
        : field_(std::move(field)), ops_(std::move(ops)), conventions_(std::move(conventions)) {
    }

    FieldTables field_;
    std::vector<CMatrix> ops_;
    std::optional<std::vector<PhaseConvention>> conventions_;
};

/// Assembles the operators of a convention set without verification.
std::vector<CMatrix> assemble_wigner_operators(const FieldTables &field, const std::vector<PhaseConvention> &conventions);

WignerFamily build_wigner_family(const FieldTables &field, const std::vector<PhaseConvention> &conventions);
WignerFamily build_canonical_wigner_family(const FieldTables &field);

/// A phase-space line. Vertical lines are {(offset, a)}; sloped lines are
/// {(a, slope a + offset)}. Direction 0 is vertical and direction k >= 1
/// has slope k-1, matching the commuting family of the same label.
struct LineSpec {
    enum class Kind { kVertical, kSloped };

    Kind kind = Kind::kVertical;
    Label slope = 0;
    Label offset = 0;

    static LineSpec vertical(Label offset) {
        return {Kind::kVertical, 0, offset};
    }
    static LineSpec sloped(Label slope, Label offset) {
        return {Kind::kSloped, slope, offset};
    }
    static LineSpec of_direction(int direction, Label offset) {
        return direction == 0 ? vertical(offset) : sloped(direction - 1, offset);
    }
    int direction() const {
        return kind == Kind::kVertical ? 0 : slope + 1;
    }
};

/// Points of a line ordered by the running parameter a.
std::vector<PhasePoint> line_points(const FieldTables &field, const LineSpec &line);

/// (1/d) times the sum of the operators along the line.
CMatrix line_average(const WignerFamily &fam, const LineSpec &line);

/// Max residuals of the acceptability properties.
struct AcceptabilityReport {
    double hermiticity = 0.0;     // max |W - W^dagger|
    double trace = 0.0;           // (a) max |tr W - 1|
    double orthonormality = 0.0;  // (b) max |<W_a, W_b> - d delta_ab|
    double projector = 0.0;       // (c) max |P^2 - P|, |P - P^dagger|, |tr P - 1| over lines
    double parallel = 0.0;        // (c) max |tr(P_o P_o')| over parallel lines

    double worst() const;
    bool passed(double tol = kProjectorTol) const {
        return worst() < tol;
    }
    /// Name of the first property over tolerance, or empty.
    std::string first_failure(double tol = kProjectorTol) const;
};

AcceptabilityReport verify_acceptability(const WignerFamily &fam);

/// Only property (c); the cheap test used by the factorisation scans.
double line_projector_residual(const WignerFamily &fam);

/// d+1 bases of d states; basis k comes from the parallel lines of direction k.
struct MUBSet {
    std::vector<std::vector<std::vector<cplx>>> bases;
    std::vector<int> directions;
};

/// Extracts the bases from line averages and verifies orthonormality and
/// unbiasedness; throws kAcceptabilityFailure on failure.
MUBSet mubs_from_wigner(const WignerFamily &fam, double tol = kProjectorTol);

/// Max of |<e_i|e_j> - delta_ij| within bases and ||<e|f>|^2 - 1/d| across.
double mub_residual(const MUBSet &mubs);

struct WignerDistribution {
    int d = 0;
    std::vector<double> values;  // row-major over (i1, i2)

    double at(Label i1, Label i2) const {
        return values[i1 * d + i2];
    }
};

struct WeylDistribution {
    int d = 0;
    std::vector<cplx> values;  // row-major over (i, j): (1/d) tr(rho V^j_i^dagger)

    cplx at(Label i, Label j) const {
        return values[i * d + j];
    }
};

/// values(i1, i2) = (1/d) tr(rho W(i1, i2)); throws kShapeMismatch.
WignerDistribution wigner_distribution(const CMatrix &rho, const WignerFamily &fam);
WeylDistribution weyl_distribution(const CMatrix &rho, const FieldTables &field);

/// Sum of the distribution along a line; a probability for valid states.
double line_marginal(const WignerDistribution &dist, const FieldTables &field, const LineSpec &line);

/// sum values W (may be non-positive for arbitrary inputs).
CMatrix reconstruct_operator(const WignerDistribution &dist, const WignerFamily &fam);
CMatrix reconstruct_operator(const WeylDistribution &dist, const FieldTables &field);
DensityMatrix reconstruct_density(const WignerDistribution &dist, const WignerFamily &fam);
DensityMatrix reconstruct_density(const WeylDistribution &dist, const FieldTables &field);

/// Max Frobenius residual of W(i1, i2) = V W(0, 0) V^dagger with V = V^(i2)_(i1).
double covariance_residual(const WignerFamily &fam);

/// Weyl to Wigner for a qubit under the canonical convention:
/// W_{k,l} = (1/2) sum_{i,j} (-1)^(i l - j k) s_{i,j}, where s_{i,j} are the
/// Weyl coefficients re-expressed over the Hermitian Paulis.
WignerDistribution qubit_symplectic_transform(const WeylDistribution &w);

/// U_{m,n} of the family, from its conventions when present and by Fourier
/// inversion of the operators otherwise. Row-major over (m, n).
std::vector<CMatrix> phased_displacements(const WignerFamily &fam);

/// Phase conventions recovered from the operators by Fourier inversion.
std::vector<PhaseConvention> recover_conventions(const WignerFamily &fam);

/// Max residual of U_{0,n} = sum_o gamma^(o n) P_o (vertical) and
/// U_{m,sm} = sum_o gamma^(-(o m)) P_o (slope s), with P_o the line averages.
double transformation_law_residual(const WignerFamily &fam);

}  // namespace galwig

#endif
