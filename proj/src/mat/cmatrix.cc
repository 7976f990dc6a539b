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

#include "galwig/mat/cmatrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "galwig/error.h"
#include "galwig/mat/kernels.h"
#include "galwig/mat/spectral.h"

namespace galwig {

namespace {

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(
            ErrorCode::kShapeMismatch,
            std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_square(const CMatrix &a, const char *what) {
    if (!a.is_square()) {
        throw Error(ErrorCode::kShapeMismatch, std::string(what) + " needs a square matrix");
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::kShapeMismatch, "ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> entries) {
    CMatrix m(entries.size(), entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        m(k, k) = entries[k];
    }
    return m;
}

CMatrix CMatrix::outer(std::span<const cplx> v) {
    CMatrix m(v.size(), v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    return add_scaled(1.0, other);
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    return add_scaled(-1.0, other);
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &v : data_) {
        v *= s;
    }
    return *this;
}

CMatrix &CMatrix::add_scaled(cplx alpha, const CMatrix &other) {
    require_same_shape(*this, other, "add");
    kernels::active().axpy(data_.size(), alpha, other.data_.data(), data_.data());
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::kShapeMismatch, "matrix product: inner dimensions differ");
    }
    CMatrix c(a.rows(), b.cols());
    kernels::active().gemm(a.rows(), a.cols(), b.cols(), a.data().data(), b.data().data(), c.data().data());
    return c;
}

CMatrix operator+(CMatrix a, const CMatrix &b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix &b) {
    a -= b;
    return a;
}

CMatrix operator*(cplx s, CMatrix a) {
    a *= s;
    return a;
}

CMatrix dagger(const CMatrix &a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            t(c, r) = std::conj(a(r, c));
        }
    }
    return t;
}

cplx trace(const CMatrix &a) {
    require_square(a, "trace");
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        s += a(k, k);
    }
    return s;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            cplx s = a(ar, ac);
            if (s == cplx{}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

cplx hs_inner(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "hs_inner");
    return kernels::active().dotc(a.data().size(), a.data().data(), b.data().data());
}

double frob_dist(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "frob_dist");
    return std::sqrt(kernels::active().sq_dist(a.data().size(), a.data().data(), b.data().data()));
}

double frob_norm(const CMatrix &a) {
    return std::sqrt(std::real(hs_inner(a, a)));
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    return kernels::active().max_abs_diff(a.data().size(), a.data().data(), b.data().data());
}

double hermiticity_residual(const CMatrix &a) {
    require_square(a, "hermiticity_residual");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

CMatrix partial_trace_b(const CMatrix &a, std::size_t dim_b) {
    require_square(a, "partial_trace_b");
    if (dim_b == 0 || a.rows() % dim_b != 0) {
        throw Error(ErrorCode::kShapeMismatch, "partial trace: dimension does not divide");
    }
    std::size_t dim_a = a.rows() / dim_b;
    CMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_a; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < dim_b; ++k) {
                s += a(i * dim_b + k, j * dim_b + k);
            }
            out(i, j) = s;
        }
    }
    return out;
}

std::vector<cplx> apply(const CMatrix &a, std::span<const cplx> v) {
    if (a.cols() != v.size()) {
        throw Error(ErrorCode::kShapeMismatch, "matrix-vector product: size mismatch");
    }
    std::vector<cplx> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        cplx s = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            s += a(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::kShapeMismatch, "inner product: size mismatch");
    }
    return kernels::active().dotc(x.size(), x.data(), y.data());
}

std::vector<cplx> extract_pure_state(const CMatrix &projector, double tol) {
    require_square(projector, "extract_pure_state");
    double herm = hermiticity_residual(projector);
    double idem = max_abs_diff(projector * projector, projector);
    double tr = std::abs(trace(projector) - 1.0);
    double residual = std::max({herm, idem, tr});
    if (residual > tol) {
        throw Error(ErrorCode::kNotRankOneProjector, "matrix is not a rank-one projector", residual);
    }
    std::size_t n = projector.rows();
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            s += std::norm(projector(r, c));
        }
        if (s > best_norm) {
            best_norm = s;
            best = c;
        }
    }
    std::vector<cplx> v(n);
    double scale = 1.0 / std::sqrt(best_norm);
    for (std::size_t r = 0; r < n; ++r) {
        v[r] = projector(r, best) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (std::abs(v[r]) > 1e-8) {
            cplx phase = std::conj(v[r]) / std::abs(v[r]);
            for (auto &x : v) {
                x *= phase;
            }
            v[r] = std::abs(v[r]);
            break;
        }
    }
    double back = max_abs_diff(CMatrix::outer(v), projector);
    if (back > tol) {
        throw Error(ErrorCode::kNotRankOneProjector, "column reconstruction failed", back);
    }
    return v;
}

DensityMatrix DensityMatrix::from_matrix(CMatrix m, double tol) {
    require_square(m, "density matrix");
    double herm = hermiticity_residual(m);
    if (herm > tol) {
        throw Error(ErrorCode::kInvalidArgument, "density matrix is not Hermitian", herm);
    }
    double tr = std::abs(trace(m) - 1.0);
    if (tr > tol) {
        throw Error(ErrorCode::kInvalidArgument, "density matrix trace differs from 1", tr);
    }
    double low = hermitian_eigenvalues(m).front();
    if (low < -tol) {
        throw Error(ErrorCode::kInvalidArgument, "density matrix has a negative eigenvalue", -low);
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> state) {
    double n2 = 0.0;
    for (const auto &x : state) {
        n2 += std::norm(x);
    }
    if (state.empty() || n2 == 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "pure state must be a nonzero vector");
    }
    std::vector<cplx> v(state.begin(), state.end());
    for (auto &x : v) {
        x /= std::sqrt(n2);
    }
    return DensityMatrix(CMatrix::outer(v));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    CMatrix m = CMatrix::identity(d);
    m *= 1.0 / static_cast<double>(d);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
    double norm = std::sqrt(x * x + y * y + z * z);
    if (norm > 1.0 + 1e-10) {
        throw Error(ErrorCode::kInvalidArgument, "Bloch vector longer than 1", norm - 1.0);
    }
    CMatrix m{{0.5 * (1.0 + z), 0.5 * cplx(x, -y)}, {0.5 * cplx(x, y), 0.5 * (1.0 - z)}};
    return DensityMatrix(std::move(m));
}

}  // namespace galwig
