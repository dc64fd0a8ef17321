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

#include "qld/stategen.h"

#include <cmath>
#include <string>

#include "qld/errors.h"
#include "qld/field.h"
#include "qld/kernels.h"

namespace qld {

namespace {

void check_k(uint64_t q, uint64_t k) {
    if (k == 0 || k >= q) {
        throw InvalidArgument("shuffle k must lie in [1, q-1], got " + std::to_string(k));
    }
}

}  // namespace

PsiState generate_psi(const CorruptedCodewordOracle &oracle, uint64_t k) {
    uint64_t q = oracle.q();
    check_k(q, k);
    uint64_t m = oracle.block_length();
    size_t g_dim = oracle.garbage_dim();
    size_t b = oracle.block_dim();

    std::vector<Complex> start(oracle.state_dim());
    Complex amp(1.0 / std::sqrt(static_cast<double>(m)), 0.0);
    for (uint64_t r = 0; r < m; r++) {
        start[r * b] = amp;
    }
    StateVector s(std::move(start), oracle.state_shape());

    StateVector after_query = oracle.apply_oracle(s);

    // Phase encoding on the symbol register only.
    std::vector<Complex> phases(oracle.state_dim());
    for (uint64_t r = 0; r < m; r++) {
        for (uint64_t z = 0; z < q; z++) {
            Complex w = root_of_unity(q, static_cast<int64_t>((k * z) % q));
            for (size_t g = 0; g < g_dim; g++) {
                phases[r * b + z * g_dim + g] = w;
            }
        }
    }
    std::vector<Complex> encoded = std::move(after_query).take_amplitudes();
    kernels::mul(encoded, phases, encoded);

    StateVector psi = oracle.apply_inverse(StateVector(std::move(encoded), oracle.state_shape()));
    return PsiState{k, std::move(psi), 2};
}

Complex kappa(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x, uint64_t k) {
    uint64_t q = oracle.q();
    check_k(q, k);
    if (code.q() != q || code.block_length() != oracle.block_length()) {
        throw DimensionMismatch("kappa: oracle does not match code " + code.describe());
    }
    uint64_t m = code.block_length();
    Complex acc = 0;
    for (uint64_t r = 0; r < m; r++) {
        uint64_t c = code.eval(x, r);
        for (uint64_t z = 0; z < q; z++) {
            double w = std::norm(oracle.alpha(r, z));
            if (w == 0.0) {
                continue;
            }
            acc += w * root_of_unity(q, static_cast<int64_t>((k * ((z + q - c) % q)) % q));
        }
    }
    return acc / static_cast<double>(m);
}

Complex kappa_black_box(const PsiState &psi, const CodeInstance &code, uint64_t x) {
    const std::vector<size_t> &shape = psi.state.factor_shape();
    if (shape.size() != 3 || shape[0] != code.block_length() || shape[1] != code.q()) {
        throw DimensionMismatch("kappa_black_box: state shape does not match code " + code.describe());
    }
    StateVector c = codeword_state(code, x, psi.k);
    size_t b = shape[1] * shape[2];
    Complex acc = 0;
    for (uint64_t r = 0; r < code.block_length(); r++) {
        acc += std::conj(c[r]) * psi.state[r * b];
    }
    return acc;
}

double kappa_floor(uint64_t q, double presence_value) {
    double qd = static_cast<double>(q);
    return qd / (qd - 1.0) * std::abs(presence_value - 1.0 / qd);
}

ShuffleChoice best_shuffle(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x) {
    ShuffleChoice best{1, -1.0};
    for (uint64_t k = 1; k < oracle.q(); k++) {
        double mag = std::abs(kappa(oracle, code, x, k));
        if (mag > best.magnitude) {
            best = {k, mag};
        }
    }
    return best;
}

}  // namespace qld
