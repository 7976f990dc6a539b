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

#include <atomic>
#include <cstdlib>
#include <string>

#include "galwig/error.h"
#include "galwig/mat/kernels.h"

namespace galwig::kernels {

#ifndef GALWIG_HAVE_AVX2
const KernelTable *avx2_kernels() {
    return nullptr;
}
#endif

bool cpu_supports_avx2() {
#if defined(GALWIG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const KernelTable *table_for(Backend backend) {
    switch (backend) {
        case Backend::kScalar:
            return &scalar_kernels();
        case Backend::kAvx2:
            return cpu_supports_avx2() ? avx2_kernels() : nullptr;
    }
    return nullptr;
}

const KernelTable *initial_table() {
    if (const char *env = std::getenv("GALWIG_KERNELS")) {
        std::string want(env);
        if (want == "scalar") {
            return &scalar_kernels();
        }
        if (want == "avx2" && table_for(Backend::kAvx2) != nullptr) {
            return table_for(Backend::kAvx2);
        }
    }
    if (const KernelTable *t = table_for(Backend::kAvx2)) {
        return t;
    }
    return &scalar_kernels();
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{initial_table()};
    return slot;
}

}  // namespace

const KernelTable &active() {
    return *active_slot().load(std::memory_order_acquire);
}

void select(Backend backend) {
    const KernelTable *t = table_for(backend);
    if (t == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "requested kernel backend is unavailable on this build or CPU");
    }
    active_slot().store(t, std::memory_order_release);
}

}  // namespace galwig::kernels
