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

#ifndef GALWIG_MAT_CMATRIX_H
#define GALWIG_MAT_CMATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace galwig {

using cplx = std::complex<double>;

inline constexpr double kEqualityTol = 1e-10;
inline constexpr double kProjectorTol = 1e-8;

/// Dense row-major complex matrix for small dimensions.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    /// Rows given as nested lists; all rows must have equal length.
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const cplx> entries);
    /// v * v^dagger
    static CMatrix outer(std::span<const cplx> v);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<cplx> data() {
        return data_;
    }
    std::span<const cplx> data() const {
        return data_;
    }

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(cplx s);
    /// this += alpha * other
    CMatrix &add_scaled(cplx alpha, const CMatrix &other);

    bool operator==(const CMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix &a, const CMatrix &b);
CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(cplx s, CMatrix a);

CMatrix dagger(const CMatrix &a);
cplx trace(const CMatrix &a);
/// Kronecker product; the left factor indexes the most significant
/// subsystem.
CMatrix kron(const CMatrix &a, const CMatrix &b);
/// trace(dagger(a) * b)
cplx hs_inner(const CMatrix &a, const CMatrix &b);
/// Frobenius norm of a - b.
double frob_dist(const CMatrix &a, const CMatrix &b);
double frob_norm(const CMatrix &a);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
/// max |a - dagger(a)|
double hermiticity_residual(const CMatrix &a);
/// Partial trace over the least significant factor of dimension `dim_b`.
CMatrix partial_trace_b(const CMatrix &a, std::size_t dim_b);
/// a * v
std::vector<cplx> apply(const CMatrix &a, std::span<const cplx> v);
/// sum conj(x) y
cplx inner(std::span<const cplx> x, std::span<const cplx> y);

/// Recovers v with P = v v^dagger from a rank-one projector: the column of
/// largest norm, normalised, with the first component of modulus above 1e-8
/// made real positive. Throws kNotRankOneProjector (carrying the residual)
/// if P is not Hermitian, idempotent and of unit trace within `tol`.
std::vector<cplx> extract_pure_state(const CMatrix &projector, double tol = kProjectorTol);

/// A Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
   public:
    /// Validates the invariants: Hermitian and unit trace within `tol`,
    /// eigenvalues no smaller than -tol. Throws kInvalidArgument otherwise
    /// (kShapeMismatch for non-square input).
    static DensityMatrix from_matrix(CMatrix m, double tol = kEqualityTol);
    static DensityMatrix pure(std::span<const cplx> state);
    static DensityMatrix maximally_mixed(std::size_t d);
    /// (I + x X + y Y + z Z) / 2; |bloch| may not exceed 1 + 1e-10.
    static DensityMatrix from_bloch(double x, double y, double z);

    const CMatrix &mat() const {
        return mat_;
    }
    std::size_t dim() const {
        return mat_.rows();
    }

   private:
    explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {
    }
    CMatrix mat_;
};

}  // namespace galwig

#endif
