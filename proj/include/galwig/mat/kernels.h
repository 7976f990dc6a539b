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

#ifndef GALWIG_MAT_KERNELS_H
#define GALWIG_MAT_KERNELS_H

#include <complex>
#include <cstddef>
#include <string_view>

namespace galwig::kernels {

using cplx = std::complex<double>;

/// Dense complex inner loops. All pointers address interleaved (re, im)
/// pairs as laid out by std::complex<double>.
struct KernelTable {
    std::string_view name;
    /// y += alpha * x
    void (*axpy)(std::size_t n, cplx alpha, const cplx *x, cplx *y);
    /// sum conj(x[k]) * y[k]
    cplx (*dotc)(std::size_t n, const cplx *x, const cplx *y);
    /// sum |x[k] - y[k]|^2
    double (*sq_dist)(std::size_t n, const cplx *x, const cplx *y);
    /// max |x[k] - y[k]|
    double (*max_abs_diff)(std::size_t n, const cplx *x, const cplx *y);
    /// c = a * b for row-major a (rows x inner), b (inner x cols). c must not
    /// alias a or b.
    void (*gemm)(std::size_t rows, std::size_t inner, std::size_t cols, const cplx *a, const cplx *b, cplx *c);
};

enum class Backend { kScalar, kAvx2 };

/// Portable reference implementation.
const KernelTable &scalar_kernels();

/// AVX2+FMA implementation; nullptr when not compiled in.
const KernelTable *avx2_kernels();

bool cpu_supports_avx2();

/// Kernels used by CMatrix. Chosen once from the CPU features unless the
/// GALWIG_KERNELS environment variable names "scalar" or "avx2".
const KernelTable &active();

/// Overrides the active backend. Throws kInvalidArgument if the backend is
/// not compiled in or not supported by this CPU.
void select(Backend backend);

}  // namespace galwig::kernels

#endif
