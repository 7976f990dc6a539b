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

#include "test_util.h"

#include <cmath>

namespace galwig::testing {

std::vector<cplx> random_state(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(d);
    double norm = 0.0;
    for (auto &z : v) {
        z = cplx(g(rng), g(rng));
        norm += std::norm(z);
    }
    for (auto &z : v) {
        z /= std::sqrt(norm);
    }
    return v;
}

CMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix m(rows, cols);
    for (auto &z : m.data()) {
        z = cplx(g(rng), g(rng));
    }
    return m;
}

CMatrix random_density(std::size_t d, std::mt19937_64 &rng) {
    CMatrix g = random_matrix(d, d, rng);
    CMatrix rho = g * dagger(g);
    rho *= 1.0 / trace(rho).real();
    return rho;
}

CMatrix random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double x = g(rng);
    double y = g(rng);
    double z = g(rng);
    double r = std::cbrt(u(rng)) / std::sqrt(x * x + y * y + z * z);
    return DensityMatrix::from_bloch(r * x, r * y, r * z).mat();
}

const CMatrix &pauli_i() {
    static const CMatrix m = CMatrix::identity(2);
    return m;
}
const CMatrix &pauli_x() {
    static const CMatrix m{{0.0, 1.0}, {1.0, 0.0}};
    return m;
}
const CMatrix &pauli_y() {
    static const CMatrix m{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}};
    return m;
}
const CMatrix &pauli_z() {
    static const CMatrix m{{1.0, 0.0}, {0.0, -1.0}};
    return m;
}

const std::vector<int> &small_orders() {
    static const std::vector<int> orders{2, 3, 4, 5, 7, 8, 9};
    return orders;
}

}  // namespace galwig::testing
