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

#ifndef GALWIG_MAT_SPECTRAL_H
#define GALWIG_MAT_SPECTRAL_H

#include <vector>

#include "galwig/mat/cmatrix.h"

namespace galwig {

// Hermitian spectral helpers, backed by Eigen's self-adjoint solver. The
// input is symmetrised ((A + A^dagger)/2) before decomposition.

/// Ascending eigenvalues.
std::vector<double> hermitian_eigenvalues(const CMatrix &a);

/// f applied to the spectrum: V diag(f(lambda)) V^dagger.
CMatrix hermitian_function(const CMatrix &a, double (*f)(double));

/// Clips negative eigenvalues to zero and renormalises the trace to 1.
CMatrix project_to_density(const CMatrix &a);

/// (1/2) sum |eig(a - b)|
double trace_distance(const CMatrix &a, const CMatrix &b);

/// (tr sqrt(sqrt(a) b sqrt(a)))^2 for positive semidefinite a and b.
double fidelity(const CMatrix &a, const CMatrix &b);

/// Singular values of a real matrix given row-major, descending.
std::vector<double> singular_values(const std::vector<double> &row_major, std::size_t rows, std::size_t cols);

}  // namespace galwig

#endif
