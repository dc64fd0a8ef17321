// Copyright 2026 The qlistdec Authors
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
#include <cstdlib>
#include <cstring>
#include <string>

#include "qld/errors.h"
#include "qld/kernels.h"

namespace qld::kernels {

#ifdef QLD_HAVE_AVX2
const KernelTable *avx2_table_unchecked();
#endif

const KernelTable *avx2() {
#ifdef QLD_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? avx2_table_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    static const KernelTable *chosen = [] {
        const char *env = std::getenv("QLD_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) {
            return &scalar();
        }
        const KernelTable *wide = avx2();
        return wide != nullptr ? wide : &scalar();
    }();
    return *chosen;
}

namespace {

void require_same(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": lengths " + std::to_string(a) + " and " + std::to_string(b));
    }
}

}  // namespace

Complex dotc(std::span<const Complex> a, std::span<const Complex> b) {
    require_same(a.size(), b.size(), "dotc");
    return active().dotc(a.data(), b.data(), a.size());
}

Complex dotu(std::span<const Complex> a, std::span<const Complex> b) {
    require_same(a.size(), b.size(), "dotu");
    return active().dotu(a.data(), b.data(), a.size());
}

double norm2(std::span<const Complex> a) {
    return active().norm2(a.data(), a.size());
}

void mul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
    require_same(a.size(), b.size(), "mul");
    require_same(a.size(), out.size(), "mul");
    active().mul(a.data(), b.data(), out.data(), a.size());
}

void axpy_conj(Complex alpha, std::span<const Complex> a, std::span<Complex> y) {
    require_same(a.size(), y.size(), "axpy_conj");
    active().axpy_conj(alpha, a.data(), y.data(), a.size());
}

void abs2(std::span<const Complex> a, std::span<double> out) {
    require_same(a.size(), out.size(), "abs2");
    active().abs2(a.data(), out.data(), a.size());
}

void scale(Complex alpha, std::span<Complex> a) {
    active().scale(alpha, a.data(), a.size());
}

void matvec(std::span<const Complex> matrix, size_t rows, size_t cols, std::span<const Complex> x,
            std::span<Complex> y) {
    require_same(matrix.size(), rows * cols, "matvec matrix");
    require_same(x.size(), cols, "matvec input");
    require_same(y.size(), rows, "matvec output");
    const KernelTable &k = active();
    for (size_t i = 0; i < rows; i++) {
        y[i] = k.dotu(matrix.data() + i * cols, x.data(), cols);
    }
}

void matvec_adjoint(std::span<const Complex> matrix, size_t rows, size_t cols, std::span<const Complex> x,
                    std::span<Complex> y) {
    require_same(matrix.size(), rows * cols, "matvec_adjoint matrix");
    require_same(x.size(), rows, "matvec_adjoint input");
    require_same(y.size(), cols, "matvec_adjoint output");
    const KernelTable &k = active();
    std::fill(y.begin(), y.end(), Complex{});
    for (size_t i = 0; i < rows; i++) {
        if (x[i] != Complex{}) {
            k.axpy_conj(x[i], matrix.data() + i * cols, y.data(), cols);
        }
    }
}

}  // namespace qld::kernels
