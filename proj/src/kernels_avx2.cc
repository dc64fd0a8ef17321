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

// Compiled with -mavx2 -mfma. Nothing here may run before avx2() has
// confirmed CPU support.

#include <immintrin.h>

#include "qld/kernels.h"

namespace qld::kernels {

namespace {

inline const double *raw(const Complex *p) {
    return reinterpret_cast<const double *>(p);
}
inline double *raw(Complex *p) {
    return reinterpret_cast<double *>(p);
}

// Sum of the two complex lanes of a 256-bit register.
inline Complex hsum_complex(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    double out[2];
    _mm_storeu_pd(out, s);
    return {out[0], out[1]};
}

// a * b for two packed complex pairs.
inline __m256d cmul_pd(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0xF);
    __m256d b_swap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

Complex avx2_dotc(const Complex *a, const Complex *b, size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(raw(a + i));
        __m256d vb = _mm256_loadu_pd(raw(b + i));
        acc_re = _mm256_fmadd_pd(_mm256_movedup_pd(va), vb, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(va, 0xF), _mm256_permute_pd(vb, 0x5), acc_im);
    }
    // conj: (ar br + ai bi, ar bi - ai br)
    __m256d neg = _mm256_sub_pd(_mm256_setzero_pd(), acc_im);
    Complex total = hsum_complex(_mm256_addsub_pd(acc_re, neg));
    double re = total.real(), im = total.imag();
    for (; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

Complex avx2_dotu(const Complex *a, const Complex *b, size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(raw(a + i));
        __m256d vb = _mm256_loadu_pd(raw(b + i));
        acc_re = _mm256_fmadd_pd(_mm256_movedup_pd(va), vb, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(va, 0xF), _mm256_permute_pd(vb, 0x5), acc_im);
    }
    Complex total = hsum_complex(_mm256_addsub_pd(acc_re, acc_im));
    double re = total.real(), im = total.imag();
    for (; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
    }
    return {re, im};
}

double avx2_norm2(const Complex *a, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = _mm256_loadu_pd(raw(a + i));
        __m256d v1 = _mm256_loadu_pd(raw(a + i + 2));
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 2 <= n; i += 2) {
        __m256d v0 = _mm256_loadu_pd(raw(a + i));
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, _mm256_add_pd(acc0, acc1));
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; i++) {
        total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return total;
}

void avx2_mul(const Complex *a, const Complex *b, Complex *out, size_t n) {
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(raw(a + i));
        __m256d vb = _mm256_loadu_pd(raw(b + i));
        _mm256_storeu_pd(raw(out + i), cmul_pd(va, vb));
    }
    for (; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        double br = b[i].real(), bi = b[i].imag();
        out[i] = Complex(ar * br - ai * bi, ar * bi + ai * br);
    }
}

void avx2_axpy_conj(Complex alpha, const Complex *a, Complex *y, size_t n) {
    const __m256d x_re = _mm256_set1_pd(alpha.real());
    const __m256d x_im = _mm256_set1_pd(alpha.imag());
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d c = _mm256_xor_pd(_mm256_loadu_pd(raw(a + i)), conj_mask);
        __m256d c_swap = _mm256_permute_pd(c, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(x_re, c, _mm256_mul_pd(x_im, c_swap));
        __m256d vy = _mm256_loadu_pd(raw(y + i));
        _mm256_storeu_pd(raw(y + i), _mm256_add_pd(vy, prod));
    }
    double xr = alpha.real(), xi = alpha.imag();
    for (; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        y[i] += Complex(xr * ar + xi * ai, xi * ar - xr * ai);
    }
}

void avx2_abs2(const Complex *a, double *out, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = _mm256_loadu_pd(raw(a + i));
        __m256d v1 = _mm256_loadu_pd(raw(a + i + 2));
        // hadd gives [|a0|^2, |a2|^2, |a1|^2, |a3|^2]
        __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < n; i++) {
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
}

void avx2_scale(Complex alpha, Complex *a, size_t n) {
    const __m256d x_re = _mm256_set1_pd(alpha.real());
    const __m256d x_im = _mm256_set1_pd(alpha.imag());
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(raw(a + i));
        __m256d v_swap = _mm256_permute_pd(v, 0x5);
        _mm256_storeu_pd(raw(a + i), _mm256_fmaddsub_pd(x_re, v, _mm256_mul_pd(x_im, v_swap)));
    }
    double xr = alpha.real(), xi = alpha.imag();
    for (; i < n; i++) {
        double ar = a[i].real(), ai = a[i].imag();
        a[i] = Complex(xr * ar - xi * ai, xr * ai + xi * ar);
    }
}

constexpr KernelTable kAvx2Table{
    "avx2",     avx2_dotc, avx2_dotu, avx2_norm2, avx2_mul, avx2_axpy_conj,
    avx2_abs2, avx2_scale,
};

}  // namespace

const KernelTable *avx2_table_unchecked() {
    return &kAvx2Table;
}

}  // namespace qld::kernels
