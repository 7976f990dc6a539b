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

#include <algorithm>
#include <cmath>
#include <string>

#include "galwig/error.h"

namespace galwig {

namespace {

void require_square(const CMatrix &rho, int d) {
    if (!rho.is_square() || static_cast<int>(rho.rows()) != d) {
        throw Error(
            ErrorCode::kShapeMismatch,
            "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix, got " + std::to_string(rho.rows()) +
                "x" + std::to_string(rho.cols()));
    }
}

double projector_defect(const CMatrix &p) {
    return std::max({max_abs_diff(p * p, p), hermiticity_residual(p), std::abs(trace(p) - 1.0)});
}

}  // namespace

std::vector<CMatrix> assemble_wigner_operators(const FieldTables &field, const std::vector<PhaseConvention> &conventions) {
    int d = field.d();
    // Phased displacements are monomial, so they are accumulated directly
    // into each phase-point operator.
    std::vector<cplx> phase(d * d);
    for (Label m = 0; m < d; ++m) {
        for (Label n = 0; n < d; ++n) {
            phase[m * d + n] = convention_phase(field, conventions, {m, n});
        }
    }
    std::vector<CMatrix> ops;
    ops.reserve(d * d);
    for (Label i1 = 0; i1 < d; ++i1) {
        for (Label i2 = 0; i2 < d; ++i2) {
            CMatrix w(d, d);
            for (Label m = 0; m < d; ++m) {
                for (Label n = 0; n < d; ++n) {
                    Label arg = field.add(field.neg(field.mul(i1, n)), field.mul(i2, m));
                    add_displacement(field, {m, n}, field.character(arg) * phase[m * d + n] / static_cast<double>(d), w);
                }
            }
            ops.push_back(std::move(w));
        }
    }
    return ops;
}

WignerFamily WignerFamily::build(const FieldTables &field, const std::vector<PhaseConvention> &conventions, double tol) {
    WignerFamily fam = assemble(field, conventions);
    auto report = verify_acceptability(fam);
    if (!report.passed(tol)) {
        throw Error(
            ErrorCode::kAcceptabilityFailure,
            "Wigner family violates property " + report.first_failure(tol),
            report.worst());
    }
    return fam;
}

WignerFamily WignerFamily::assemble(const FieldTables &field, const std::vector<PhaseConvention> &conventions) {
    return WignerFamily(field, assemble_wigner_operators(field, conventions), conventions);
}

WignerFamily WignerFamily::from_operators(const FieldTables &field, std::vector<CMatrix> ops) {
    int d = field.d();
    if (static_cast<int>(ops.size()) != d * d) {
        throw Error(ErrorCode::kShapeMismatch, "expected d^2 operators");
    }
    for (const auto &op : ops) {
        require_square(op, d);
    }
    return WignerFamily(field, std::move(ops), std::nullopt);
}

WignerFamily build_wigner_family(const FieldTables &field, const std::vector<PhaseConvention> &conventions) {
    return WignerFamily::build(field, conventions);
}

WignerFamily build_canonical_wigner_family(const FieldTables &field) {
    return WignerFamily::build(field, canonical_conventions(field));
}

std::vector<PhasePoint> line_points(const FieldTables &field, const LineSpec &line) {
    int d = field.d();
    if (line.offset < 0 || line.offset >= d || line.slope < 0 || line.slope >= d) {
        throw Error(ErrorCode::kInvalidArgument, "line parameters outside the field");
    }
    std::vector<PhasePoint> pts;
    for (Label a = 0; a < d; ++a) {
        if (line.kind == LineSpec::Kind::kVertical) {
            pts.push_back({line.offset, a});
        } else {
            pts.push_back({a, field.add(field.mul(line.slope, a), line.offset)});
        }
    }
    return pts;
}

CMatrix line_average(const WignerFamily &fam, const LineSpec &line) {
    int d = fam.d();
    CMatrix acc(d, d);
    for (const auto &pt : line_points(fam.field(), line)) {
        acc += fam.op(pt);
    }
    acc *= 1.0 / d;
    return acc;
}

double AcceptabilityReport::worst() const {
    return std::max({hermiticity, trace, orthonormality, projector, parallel});
}

std::string AcceptabilityReport::first_failure(double tol) const {
    if (hermiticity >= tol) {
        return "hermiticity";
    }
    if (trace >= tol) {
        return "(a) unit trace";
    }
    if (orthonormality >= tol) {
        return "(b) orthonormality";
    }
    if (projector >= tol) {
        return "(c) line averages are rank-1 projectors";
    }
    if (parallel >= tol) {
        return "(c) parallel lines give orthogonal projectors";
    }
    return "";
}

namespace {

void line_checks(const WignerFamily &fam, double &projector, double &parallel) {
    int d = fam.d();
    for (int dir = 0; dir <= d; ++dir) {
        std::vector<CMatrix> ps;
        for (Label o = 0; o < d; ++o) {
            ps.push_back(line_average(fam, LineSpec::of_direction(dir, o)));
            projector = std::max(projector, projector_defect(ps.back()));
        }
        for (Label a = 0; a < d; ++a) {
            for (Label b = a + 1; b < d; ++b) {
                parallel = std::max(parallel, std::abs(hs_inner(ps[a], ps[b])));
            }
        }
    }
}

}  // namespace

AcceptabilityReport verify_acceptability(const WignerFamily &fam) {
    AcceptabilityReport r;
    int d = fam.d();
    const auto &ops = fam.ops();
    for (std::size_t a = 0; a < ops.size(); ++a) {
        r.hermiticity = std::max(r.hermiticity, hermiticity_residual(ops[a]));
        r.trace = std::max(r.trace, std::abs(trace(ops[a]) - 1.0));
        for (std::size_t b = a; b < ops.size(); ++b) {
            double expect = a == b ? d : 0.0;
            r.orthonormality = std::max(r.orthonormality, std::abs(hs_inner(ops[a], ops[b]) - expect));
        }
    }
    line_checks(fam, r.projector, r.parallel);
    return r;
}

double line_projector_residual(const WignerFamily &fam) {
    double projector = 0.0;
    double parallel = 0.0;
    line_checks(fam, projector, parallel);
    return std::max(projector, parallel);
}

double mub_residual(const MUBSet &mubs) {
    double worst = 0.0;
    std::size_t nb = mubs.bases.size();
    for (std::size_t k = 0; k < nb; ++k) {
        const auto &bk = mubs.bases[k];
        double inv_d = 1.0 / static_cast<double>(bk.size());
        for (std::size_t l = k; l < nb; ++l) {
            const auto &bl = mubs.bases[l];
            for (std::size_t i = 0; i < bk.size(); ++i) {
                for (std::size_t j = 0; j < bl.size(); ++j) {
                    cplx ov = inner(bk[i], bl[j]);
                    if (k == l) {
                        worst = std::max(worst, std::abs(ov - (i == j ? 1.0 : 0.0)));
                    } else {
                        worst = std::max(worst, std::abs(std::norm(ov) - inv_d));
                    }
                }
            }
        }
    }
    return worst;
}

MUBSet mubs_from_wigner(const WignerFamily &fam, double tol) {
    int d = fam.d();
    MUBSet out;
    for (int dir = 0; dir <= d; ++dir) {
        std::vector<std::vector<cplx>> basis;
        for (Label o = 0; o < d; ++o) {
            basis.push_back(extract_pure_state(line_average(fam, LineSpec::of_direction(dir, o)), tol));
        }
        out.bases.push_back(std::move(basis));
        out.directions.push_back(dir);
    }
    double res = mub_residual(out);
    if (res > tol) {
        throw Error(ErrorCode::kAcceptabilityFailure, "extracted bases are not mutually unbiased", res);
    }
    return out;
}

WignerDistribution wigner_distribution(const CMatrix &rho, const WignerFamily &fam) {
    int d = fam.d();
    require_square(rho, d);
    WignerDistribution dist{d, std::vector<double>(d * d)};
    for (int k = 0; k < d * d; ++k) {
        // tr(rho W) = <rho^dagger, W>; rho is Hermitian.
        dist.values[k] = hs_inner(rho, fam.ops()[k]).real() / d;
    }
    return dist;
}

WeylDistribution weyl_distribution(const CMatrix &rho, const FieldTables &field) {
    int d = field.d();
    require_square(rho, d);
    WeylDistribution dist{d, std::vector<cplx>(d * d)};
    for (Label i = 0; i < d; ++i) {
        for (Label j = 0; j < d; ++j) {
            // tr(rho V^dagger) = conj(<rho, V>).
            dist.values[i * d + j] = std::conj(hs_inner(rho, displacement(field, {i, j}))) / static_cast<double>(d);
        }
    }
    return dist;
}

double line_marginal(const WignerDistribution &dist, const FieldTables &field, const LineSpec &line) {
    double s = 0.0;
    for (const auto &pt : line_points(field, line)) {
        s += dist.at(pt.i1, pt.i2);
    }
    return s;
}

CMatrix reconstruct_operator(const WignerDistribution &dist, const WignerFamily &fam) {
    int d = fam.d();
    if (dist.d != d || static_cast<int>(dist.values.size()) != d * d) {
        throw Error(ErrorCode::kShapeMismatch, "distribution and family dimensions differ");
    }
    CMatrix rho(d, d);
    for (int k = 0; k < d * d; ++k) {
        rho.add_scaled(dist.values[k], fam.ops()[k]);
    }
    return rho;
}

CMatrix reconstruct_operator(const WeylDistribution &dist, const FieldTables &field) {
    int d = field.d();
    if (dist.d != d || static_cast<int>(dist.values.size()) != d * d) {
        throw Error(ErrorCode::kShapeMismatch, "distribution and field dimensions differ");
    }
    CMatrix rho(d, d);
    for (Label i = 0; i < d; ++i) {
        for (Label j = 0; j < d; ++j) {
            add_displacement(field, {i, j}, dist.values[i * d + j], rho);
        }
    }
    return rho;
}

DensityMatrix reconstruct_density(const WignerDistribution &dist, const WignerFamily &fam) {
    return DensityMatrix::from_matrix(reconstruct_operator(dist, fam));
}

DensityMatrix reconstruct_density(const WeylDistribution &dist, const FieldTables &field) {
    return DensityMatrix::from_matrix(reconstruct_operator(dist, field));
}

double covariance_residual(const WignerFamily &fam) {
    int d = fam.d();
    const CMatrix &w00 = fam.op(0, 0);
    double worst = 0.0;
    for (Label i1 = 0; i1 < d; ++i1) {
        for (Label i2 = 0; i2 < d; ++i2) {
            CMatrix v = displacement(fam.field(), {i1, i2});
            worst = std::max(worst, frob_dist(v * w00 * dagger(v), fam.op(i1, i2)));
        }
    }
    return worst;
}

WignerDistribution qubit_symplectic_transform(const WeylDistribution &w) {
    if (w.d != 2 || w.values.size() != 4) {
        throw Error(ErrorCode::kWrongDimension, "the symplectic transform is defined for qubits only");
    }
    FieldTables f2 = FieldTables::build(2, 1);
    auto conventions = canonical_conventions(f2);
    cplx s[2][2];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            s[i][j] = convention_phase(f2, conventions, {i, j}) * std::conj(w.at(i, j));
        }
    }
    WignerDistribution out{2, std::vector<double>(4)};
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            cplx acc = 0.0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    acc += ((i * l + j * k) % 2 == 0 ? 1.0 : -1.0) * s[i][j];
                }
            }
            out.values[k * 2 + l] = 0.5 * acc.real();
        }
    }
    return out;
}

std::vector<CMatrix> phased_displacements(const WignerFamily &fam) {
    const auto &field = fam.field();
    int d = fam.d();
    std::vector<CMatrix> us;
    us.reserve(d * d);
    for (Label m = 0; m < d; ++m) {
        for (Label n = 0; n < d; ++n) {
            CMatrix u(d, d);
            if (fam.conventions()) {
                add_displacement(field, {m, n}, convention_phase(field, *fam.conventions(), {m, n}), u);
            } else {
                for (Label i1 = 0; i1 < d; ++i1) {
                    for (Label i2 = 0; i2 < d; ++i2) {
                        Label arg = field.sub(field.mul(i1, n), field.mul(i2, m));
                        u.add_scaled(field.character(arg) / static_cast<double>(d), fam.op(i1, i2));
                    }
                }
            }
            us.push_back(std::move(u));
        }
    }
    return us;
}

std::vector<PhaseConvention> recover_conventions(const WignerFamily &fam) {
    int d = fam.d();
    auto us = phased_displacements(fam);
    std::vector<PhaseConvention> out;
    for (const auto &f : partition_families(fam.field())) {
        out.push_back(fit_convention(fam.field(), f, [&](DisplacementIndex idx) { return us[idx.i * d + idx.j]; }));
    }
    return out;
}

double transformation_law_residual(const WignerFamily &fam) {
    const auto &field = fam.field();
    int d = fam.d();
    auto us = phased_displacements(fam);
    double worst = 0.0;
    for (int dir = 0; dir <= d; ++dir) {
        std::vector<CMatrix> ps;
        for (Label o = 0; o < d; ++o) {
            ps.push_back(line_average(fam, LineSpec::of_direction(dir, o)));
        }
        for (Label t = 0; t < d; ++t) {
            CMatrix acc(d, d);
            for (Label o = 0; o < d; ++o) {
                Label arg = dir == 0 ? field.mul(o, t) : field.neg(field.mul(o, t));
                acc.add_scaled(field.character(arg), ps[o]);
            }
            DisplacementIndex idx = dir == 0 ? DisplacementIndex{0, t} : DisplacementIndex{t, field.mul(dir - 1, t)};
            worst = std::max(worst, max_abs_diff(acc, us[idx.i * d + idx.j]));
        }
    }
    return worst;
}

}  // namespace galwig
