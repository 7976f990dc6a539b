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

#include "galwig/mat/spectral.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "galwig/error.h"

namespace galwig {

namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const CMatrix &a) {
    if (!a.is_square()) {
        throw Error(ErrorCode::kShapeMismatch, "spectral routines need a square matrix");
    }
    EMat m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            m(r, c) = a(r, c);
        }
    }
    return 0.5 * (m + m.adjoint());
}

CMatrix from_eigen(const EMat &m) {
    CMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

double clip_sqrt(double x) {
    return std::sqrt(std::max(x, 0.0));
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix &a) {
    Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(a), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

CMatrix hermitian_function(const CMatrix &a, double (*f)(double)) {
    Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(a));
    Eigen::VectorXd mapped = solver.eigenvalues().unaryExpr(f);
    EMat out = solver.eigenvectors() * mapped.cast<std::complex<double>>().asDiagonal() * solver.eigenvectors().adjoint();
    return from_eigen(out);
}

CMatrix project_to_density(const CMatrix &a) {
    CMatrix clipped = hermitian_function(a, [](double x) { return std::max(x, 0.0); });
    double tr = std::real(trace(clipped));
    if (tr <= 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "matrix has no positive part to project");
    }
    clipped *= 1.0 / tr;
    return clipped;
}

double trace_distance(const CMatrix &a, const CMatrix &b) {
    double s = 0.0;
    for (double ev : hermitian_eigenvalues(a - b)) {
        s += std::abs(ev);
    }
    return 0.5 * s;
}

double fidelity(const CMatrix &a, const CMatrix &b) {
    CMatrix root = hermitian_function(a, &clip_sqrt);
    CMatrix inner = root * b * root;
    double s = 0.0;
    for (double ev : hermitian_eigenvalues(inner)) {
        s += clip_sqrt(ev);
    }
    return s * s;
}

std::vector<double> singular_values(const std::vector<double> &row_major, std::size_t rows, std::size_t cols) {
    if (row_major.size() != rows * cols) {
        throw Error(ErrorCode::kShapeMismatch, "singular_values: size mismatch");
    }
    Eigen::MatrixXd m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = row_major[r * cols + c];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto &sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

}  // namespace galwig
