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

#include "galwig/mat/kernels.h"

#include <gtest/gtest.h>

#include <array>
#include <random>
#include <vector>

#include "galwig/error.h"

namespace galwig {
namespace {

using kernels::cplx;
using kernels::KernelTable;

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto &z : v) {
        z = cplx(g(rng), g(rng));
    }
    return v;
}

const KernelTable *vector_kernels() {
    if (!kernels::cpu_supports_avx2()) {
        return nullptr;
    }
    return kernels::avx2_kernels();
}

TEST(Kernels, ScalarAxpyAndDotMatchDefinition) {
    const auto &k = kernels::scalar_kernels();
    std::vector<cplx> x{cplx(1, 2), cplx(3, -1)};
    std::vector<cplx> y{cplx(0, 1), cplx(2, 2)};
    EXPECT_EQ(k.dotc(2, x.data(), y.data()), std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1]);
    k.axpy(2, cplx(0, 1), x.data(), y.data());
    EXPECT_EQ(y[0], cplx(-2, 2));
    EXPECT_EQ(y[1], cplx(3, 5));
}

TEST(Kernels, VectorBackendMatchesScalarOnOddLengths) {
    const KernelTable *v = vector_kernels();
    if (v == nullptr) {
        GTEST_SKIP() << "AVX2 backend unavailable";
    }
    const auto &s = kernels::scalar_kernels();
    std::mt19937_64 rng(11);
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 7u, 8u, 9u, 16u, 17u, 31u, 64u, 101u}) {
        auto x = random_vec(n, rng);
        auto y = random_vec(n, rng);
        cplx alpha(0.3, -1.7);
        EXPECT_LT(std::abs(s.dotc(n, x.data(), y.data()) - v->dotc(n, x.data(), y.data())), 1e-12 * (n + 1));
        EXPECT_NEAR(s.sq_dist(n, x.data(), y.data()), v->sq_dist(n, x.data(), y.data()), 1e-12 * (n + 1));
        EXPECT_NEAR(s.max_abs_diff(n, x.data(), y.data()), v->max_abs_diff(n, x.data(), y.data()), 1e-14);
        auto ys = y;
        auto yv = y;
        s.axpy(n, alpha, x.data(), ys.data());
        v->axpy(n, alpha, x.data(), yv.data());
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LT(std::abs(ys[i] - yv[i]), 1e-13);
        }
    }
}

TEST(Kernels, VectorGemmMatchesScalar) {
    const KernelTable *v = vector_kernels();
    if (v == nullptr) {
        GTEST_SKIP() << "AVX2 backend unavailable";
    }
    const auto &s = kernels::scalar_kernels();
    std::mt19937_64 rng(5);
    for (auto [r, k, c] : std::vector<std::array<std::size_t, 3>>{{1, 1, 1}, {3, 5, 7}, {4, 4, 4}, {9, 2, 13}, {16, 16, 16}}) {
        auto a = random_vec(r * k, rng);
        auto b = random_vec(k * c, rng);
        std::vector<cplx> cs(r * c), cv(r * c, cplx(99, 99));
        s.gemm(r, k, c, a.data(), b.data(), cs.data());
        v->gemm(r, k, c, a.data(), b.data(), cv.data());
        for (std::size_t i = 0; i < r * c; ++i) {
            EXPECT_LT(std::abs(cs[i] - cv[i]), 1e-12);
        }
    }
}

TEST(Kernels, SelectSwitchesActiveBackend) {
    kernels::select(kernels::Backend::kScalar);
    EXPECT_EQ(kernels::active().name, "scalar");
    if (vector_kernels() != nullptr) {
        kernels::select(kernels::Backend::kAvx2);
        EXPECT_EQ(kernels::active().name, vector_kernels()->name);
    } else {
        EXPECT_THROW(kernels::select(kernels::Backend::kAvx2), Error);
    }
}

}  // namespace
}  // namespace galwig
