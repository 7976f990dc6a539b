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

#include <algorithm>
#include <cmath>

#include "galwig/mat/kernels.h"

namespace galwig::kernels {

namespace {

// Real arithmetic is spelled out so the reference does not depend on the
// library's complex multiply (which adds inf/nan recovery paths).

void axpy_scalar(std::size_t n, cplx alpha, const cplx *x, cplx *y) {
    double ar = alpha.real();
    double ai = alpha.imag();
    for (std::size_t k = 0; k < n; ++k) {
        double xr = x[k].real();
        double xi = x[k].imag();
        y[k] = {y[k].real() + (ar * xr - ai * xi), y[k].imag() + (ar * xi + ai * xr)};
    }
}

cplx dotc_scalar(std::size_t n, const cplx *x, const cplx *y) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
    }
    return {re, im};
}

double sq_dist_scalar(std::size_t n, const cplx *x, const cplx *y) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double dr = x[k].real() - y[k].real();
        double di = x[k].imag() - y[k].imag();
        s += dr * dr + di * di;
    }
    return s;
}

double max_abs_diff_scalar(std::size_t n, const cplx *x, const cplx *y) {
    double best = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double dr = x[k].real() - y[k].real();
        double di = x[k].imag() - y[k].imag();
        best = std::max(best, std::sqrt(dr * dr + di * di));
    }
    return best;
}

void gemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, const cplx *a, const cplx *b, cplx *c) {
    std::fill(c, c + rows * cols, cplx{});
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            cplx aik = a[i * inner + k];
            if (aik == cplx{}) {
                continue;
            }
            axpy_scalar(cols, aik, b + k * cols, c + i * cols);
        }
    }
}

constexpr KernelTable kScalarTable{
    "scalar",
    &axpy_scalar,
    &dotc_scalar,
    &sq_dist_scalar,
    &max_abs_diff_scalar,
    &gemm_scalar,
};

}  // namespace

const KernelTable &scalar_kernels() {
    return kScalarTable;
}

}  // namespace galwig::kernels
