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

#include "galwig/io/json.h"

#include <cmath>
#include <sstream>

#include "galwig/error.h"

namespace galwig {

Json to_json(cplx z) {
    return Json::array({z.real(), z.imag()});
}

Json to_json(const CMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const std::vector<cplx> &v) {
    Json out = Json::array();
    for (const auto &z : v) {
        out.push_back(to_json(z));
    }
    return out;
}

CMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty() || !j.front().is_array()) {
        throw Error(ErrorCode::kInvalidArgument, "a matrix must be a non-empty list of rows");
    }
    std::size_t rows = j.size();
    std::size_t cols = j.front().size();
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw Error(ErrorCode::kShapeMismatch, "matrix rows must have equal length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Json &e = j[r][c];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
            } else {
                throw Error(ErrorCode::kInvalidArgument, "matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

Json to_json(const FieldTables &field) {
    int d = field.d();
    Json add = Json::array();
    Json mul = Json::array();
    for (Label x = 0; x < d; ++x) {
        Json ar = Json::array();
        Json mr = Json::array();
        for (Label y = 0; y < d; ++y) {
            ar.push_back(field.add(x, y));
            mr.push_back(field.mul(x, y));
        }
        add.push_back(std::move(ar));
        mul.push_back(std::move(mr));
    }
    Json chars = Json::array();
    for (Label x = 0; x < d; ++x) {
        chars.push_back(to_json(field.character(x)));
    }
    return Json{
        {"p", field.p()},
        {"m", field.m()},
        {"d", d},
        {"modulus", field.modulus()},
        {"functional_weights", field.functional_weights()},
        {"description", field.description()},
        {"add", std::move(add)},
        {"mul", std::move(mul)},
        {"character", std::move(chars)},
    };
}

Json to_json(const PhaseConvention &conv) {
    Json members = Json::array();
    for (const auto &m : conv.family.members) {
        members.push_back(Json::array({m.i, m.j}));
    }
    Json phases = Json::array();
    for (const auto &ph : conv.phases) {
        phases.push_back(to_json(ph));
    }
    return Json{{"family", conv.family.label}, {"members", std::move(members)}, {"phases", std::move(phases)}};
}

Json to_json(const AcceptabilityReport &report) {
    return Json{
        {"a", report.trace},
        {"b", report.orthonormality},
        {"c", std::max(report.projector, report.parallel)},
        {"hermiticity", report.hermiticity},
        {"c_projector", report.projector},
        {"c_parallel", report.parallel},
        {"passed", report.passed()},
    };
}

Json to_json(const MUBSet &mubs) {
    Json bases = Json::array();
    for (std::size_t k = 0; k < mubs.bases.size(); ++k) {
        Json states = Json::array();
        for (const auto &v : mubs.bases[k]) {
            states.push_back(to_json(v));
        }
        bases.push_back(Json{{"direction", mubs.directions[k]}, {"states", std::move(states)}});
    }
    return Json{{"bases", std::move(bases)}, {"residual", mub_residual(mubs)}};
}

Json to_json(const WignerDistribution &dist) {
    Json rows = Json::array();
    for (int i1 = 0; i1 < dist.d; ++i1) {
        Json row = Json::array();
        for (int i2 = 0; i2 < dist.d; ++i2) {
            row.push_back(dist.at(i1, i2));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const WeylDistribution &dist) {
    Json rows = Json::array();
    for (int i = 0; i < dist.d; ++i) {
        Json row = Json::array();
        for (int j = 0; j < dist.d; ++j) {
            row.push_back(to_json(dist.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const FactorReport &report) {
    Json residuals = Json::object();
    for (const auto &[name, r] : report.residuals) {
        residuals[name] = r;
    }
    Json map = Json::array();
    for (const auto &[global, local] : report.index_map) {
        map.push_back(Json::array({global, local}));
    }
    return Json{
        {"id", report.id},
        {"label", report.label},
        {"acceptable", report.acceptable},
        {"witness", report.witness},
        {"residuals", std::move(residuals)},
        {"index_map", std::move(map)},
    };
}

Json to_json(const RedundancyLedger &ledger) {
    return Json{
        {"scheme", ledger.scheme},
        {"d", ledger.d},
        {"measurements", ledger.measurements},
        {"counting_rates", ledger.counting_rates},
        {"free_parameters", ledger.free_parameters},
        {"redundancy", ledger.redundancy()},
    };
}

Json to_json(const CountHistogram &hist) {
    return Json{
        {"scheme", hist.scheme},
        {"setting", hist.setting},
        {"counts", hist.counts},
        {"shots", hist.shots},
        {"seed", hist.seed},
        {"generator", hist.generator},
    };
}

Json to_json(const TomographyRun &run) {
    Json hists = Json::array();
    for (const auto &h : run.histograms) {
        hists.push_back(to_json(h));
    }
    return Json{
        {"histograms", std::move(hists)},
        {"estimate", to_json(run.raw_estimate)},
        {"projected_estimate", to_json(run.projected_estimate)},
        {"fidelity", run.fidelity},
        {"trace_distance", run.trace_distance},
    };
}

Json wigner_family_json(const WignerFamily &fam, const AcceptabilityReport &report) {
    Json conventions = Json::array();
    if (fam.conventions()) {
        for (const auto &c : *fam.conventions()) {
            conventions.push_back(to_json(c));
        }
    }
    Json ops = Json::array();
    for (const auto &op : fam.ops()) {
        ops.push_back(to_json(op));
    }
    return Json{
        {"d", fam.d()},
        {"convention", std::move(conventions)},
        {"operators", std::move(ops)},
        {"verification", to_json(report)},
    };
}

CMatrix parse_state(const std::string &text, int d) {
    double r = 1.0 / std::sqrt(2.0);
    if (text == "zero") {
        return DensityMatrix::from_bloch(0, 0, 1).mat();
    }
    if (text == "one") {
        return DensityMatrix::from_bloch(0, 0, -1).mat();
    }
    if (text == "plus") {
        return DensityMatrix::from_bloch(1, 0, 0).mat();
    }
    if (text == "minus") {
        return DensityMatrix::from_bloch(-1, 0, 0).mat();
    }
    if (text == "plus-i") {
        return DensityMatrix::from_bloch(0, 1, 0).mat();
    }
    if (text == "minus-i") {
        return DensityMatrix::from_bloch(0, -1, 0).mat();
    }
    if (text == "mixed") {
        return DensityMatrix::maximally_mixed(d).mat();
    }
    if (text == "bell") {
        std::vector<cplx> v{r, 0.0, 0.0, r};
        return DensityMatrix::pure(v).mat();
    }
    if (text.rfind("bloch:", 0) == 0) {
        std::istringstream in(text.substr(6));
        double x = 0;
        double y = 0;
        double z = 0;
        char c1 = 0;
        char c2 = 0;
        if (!(in >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',') {
            throw Error(ErrorCode::kInvalidArgument, "expected bloch:x,y,z");
        }
        return DensityMatrix::from_bloch(x, y, z).mat();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw Error(ErrorCode::kInvalidArgument, "unknown state '" + text + "'");
    }
    return DensityMatrix::from_matrix(matrix_from_json(j)).mat();
}

}  // namespace galwig
