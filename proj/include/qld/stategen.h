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

#ifndef QLD_STATEGEN_H
#define QLD_STATEGEN_H

#include <cstdint>

#include "qld/codes.h"
#include "qld/oracle.h"
#include "qld/state.h"

namespace qld {

/// Output of the two-query state generator for shuffle k. The |k> register
/// is a classical tag; `state` lives on index (x) symbol (x) garbage.
struct PsiState {
    uint64_t k;
    StateVector state;
    uint64_t queries_used;
};

/// Uniform index superposition, one oracle call, phase omega_q^{k z} on the
/// symbol register, one inverse call. Throws InvalidArgument for k = 0 or k >= q.
PsiState generate_psi(const CorruptedCodewordOracle &oracle, uint64_t k);

/// (1/M) sum_r sum_z omega_q^{k (z - C_x(r))} |alpha_{r,z}|^2 from the amplitude table.
Complex kappa(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x, uint64_t k);

/// <C_x^(k)| <0|<0^l| applied to a generated state.
Complex kappa_black_box(const PsiState &psi, const CodeInstance &code, uint64_t x);

/// (q/(q-1)) |presence - 1/q|
double kappa_floor(uint64_t q, double presence_value);

struct ShuffleChoice {
    uint64_t k;
    double magnitude;
};

/// argmax_k |kappa|; ties go to the smallest k.
ShuffleChoice best_shuffle(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x);

}  // namespace qld

#endif
