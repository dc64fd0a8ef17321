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

#include "qld/kernels.h"

namespace qld::kernels {

namespace {

// Plain real arithmetic instead of std::complex operators, which carry
// NaN-recovery branches that the SIMD variants do not.

Complex scalar_dotc(const Complex *a, const Complex *b, size_t n) {
    double re = 0;
    double im = 0;
    for (size_t i = 0; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

Complex scalar_dotu(const Complex *a, const Complex *b, size_t n) {
    double re = 0;
    double im = 0;
    for (size_t i = 0; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
    }
    return {re, im};
}

double scalar_norm2(const Complex *a, size_t n) {
    double acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

void scalar_mul(const Complex *a, const Complex *b, Complex *out, size_t n) {
    for (size_t i = 0; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        out[i] = Complex(ar * br - ai * bi, ar * bi + ai * br);
    }
}

void scalar_axpy_conj(Complex alpha, const Complex *a, Complex *y, size_t n) {
    double xr = alpha.real(), xi = alpha.imag();
    for (size_t i = 0; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        y[i] += Complex(xr * ar + xi * ai, xi * ar - xr * ai);
    }
}

void scalar_abs2(const Complex *a, double *out, size_t n) {
    for (size_t i = 0; i < n; i++) {
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
}

void scalar_scale(Complex alpha, Complex *a, size_t n) {
    double xr = alpha.real(), xi = alpha.imag();
    for (size_t i = 0; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        a[i] = Complex(xr * ar - xi * ai, xr * ai + xi * ar);
    }
}

constexpr KernelTable kScalarTable{
    "scalar",     scalar_dotc, scalar_dotu, scalar_norm2, scalar_mul, scalar_axpy_conj,
    scalar_abs2, scalar_scale,
};

}  // namespace

const KernelTable &scalar() {
    return kScalarTable;
}

}  // namespace qld::kernels
