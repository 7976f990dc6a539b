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

// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher
// has confirmed CPU support.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "galwig/mat/kernels.h"

namespace galwig::kernels {

namespace {

// One __m256d holds two complex numbers: [re0, im0, re1, im1].

inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx *x, cplx *y) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d xv = load2(x + k);
        __m256d xs = _mm256_permute_pd(xv, 0b0101);
        // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
        __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
        store2(y + k, _mm256_add_pd(load2(y + k), prod));
    }
    for (; k < n; ++k) {
        double xr = x[k].real();
        double xi = x[k].imag();
        y[k] = {y[k].real() + (alpha.real() * xr - alpha.imag() * xi),
                y[k].imag() + (alpha.real() * xi + alpha.imag() * xr)};
    }
}

cplx dotc_avx2(std::size_t n, const cplx *x, const cplx *y) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d xv = load2(x + k);
        __m256d yv = load2(y + k);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
    }
    // acc_im lanes hold [xr*yi, xi*yr, ...]; the imaginary part is even - odd.
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (; k < n; ++k) {
        re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
        im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
    }
    return {re, im};
}

double sq_dist_avx2(std::size_t n, const cplx *x, const cplx *y) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d diff = _mm256_sub_pd(load2(x + k), load2(y + k));
        acc = _mm256_fmadd_pd(diff, diff, acc);
    }
    double s = hsum(acc);
    for (; k < n; ++k) {
        double dr = x[k].real() - y[k].real();
        double di = x[k].imag() - y[k].imag();
        s += dr * dr + di * di;
    }
    return s;
}

double max_abs_diff_avx2(std::size_t n, const cplx *x, const cplx *y) {
    __m256d best = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d diff = _mm256_sub_pd(load2(x + k), load2(y + k));
        __m256d sq = _mm256_mul_pd(diff, diff);
        // [re^2+im^2] duplicated into both lanes of each complex slot
        __m256d mod2 = _mm256_hadd_pd(sq, sq);
        best = _mm256_max_pd(best, mod2);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double b = std::sqrt(std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3])));
    for (; k < n; ++k) {
        double dr = x[k].real() - y[k].real();
        double di = x[k].imag() - y[k].imag();
        b = std::max(b, std::sqrt(dr * dr + di * di));
    }
    return b;
}

void gemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, const cplx *a, const cplx *b, cplx *c) {
    std::fill(c, c + rows * cols, cplx{});
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            cplx aik = a[i * inner + k];
            if (aik == cplx{}) {
                continue;
            }
            axpy_avx2(cols, aik, b + k * cols, c + i * cols);
        }
    }
}

constexpr KernelTable kAvx2Table{
    "avx2",
    &axpy_avx2,
    &dotc_avx2,
    &sq_dist_avx2,
    &max_abs_diff_avx2,
    &gemm_avx2,
};

}  // namespace

const KernelTable *avx2_kernels() {
    return &kAvx2Table;
}

}  // namespace galwig::kernels
