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

#ifndef QLD_KERNELS_H
#define QLD_KERNELS_H

#include <complex>
#include <cstddef>
#include <span>

namespace qld::kernels {

using Complex = std::complex<double>;

/// Inner-loop primitives on interleaved complex<double> arrays.
///
/// Every variant must agree with the scalar table up to floating-point
/// reassociation (the SIMD variants keep several partial sums). Callers
/// normally go through active(); tests compare tables directly.
struct KernelTable {
    const char *name;
    /// sum_i conj(a_i) b_i
    Complex (*dotc)(const Complex *a, const Complex *b, size_t n);
    /// sum_i a_i b_i
    Complex (*dotu)(const Complex *a, const Complex *b, size_t n);
    /// sum_i |a_i|^2
    double (*norm2)(const Complex *a, size_t n);
    /// out_i = a_i b_i; out may alias a or b
    void (*mul)(const Complex *a, const Complex *b, Complex *out, size_t n);
    /// y_i += alpha conj(a_i)
    void (*axpy_conj)(Complex alpha, const Complex *a, Complex *y, size_t n);
    /// out_i = |a_i|^2
    void (*abs2)(const Complex *a, double *out, size_t n);
    /// a_i *= alpha
    void (*scale)(Complex alpha, Complex *a, size_t n);
};

const KernelTable &scalar();

/// AVX2+FMA table, or nullptr when not compiled in or the CPU lacks the features.
const KernelTable *avx2();

/// Table chosen once per process: the widest supported variant, unless the
/// environment variable QLD_SIMD=scalar forces the reference kernels.
const KernelTable &active();

// Span wrappers over active().
Complex dotc(std::span<const Complex> a, std::span<const Complex> b);
Complex dotu(std::span<const Complex> a, std::span<const Complex> b);
double norm2(std::span<const Complex> a);
void mul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
void axpy_conj(Complex alpha, std::span<const Complex> a, std::span<Complex> y);
void abs2(std::span<const Complex> a, std::span<double> out);
void scale(Complex alpha, std::span<Complex> a);

/// y = A x for a row-major rows x cols matrix.
void matvec(std::span<const Complex> matrix, size_t rows, size_t cols, std::span<const Complex> x,
            std::span<Complex> y);

/// y = A^H x for a row-major rows x cols matrix (y has cols entries).
void matvec_adjoint(std::span<const Complex> matrix, size_t rows, size_t cols, std::span<const Complex> x,
                    std::span<Complex> y);

}  // namespace qld::kernels

#endif
