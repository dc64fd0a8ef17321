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

#ifndef QLD_DECODERS_H
#define QLD_DECODERS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qld/codes.h"
#include "qld/rng.h"
#include "qld/state.h"

namespace qld {

/// Recovers x from |C_x^(k)>: apply the stage for k, measure, postprocess.
///
/// A stage may be a contraction rather than a unitary; the probability mass
/// it loses is the rejection branch.
class CodewordStateDecoder {
   public:
    /// label -> message, nullopt when the label names no message.
    using Postprocess = std::function<std::optional<uint64_t>(uint64_t k, uint64_t label)>;

    /// stages[k] is the map for shuffle k; stages[0] and unsupported k are nullopt.
    CodewordStateDecoder(CodePtr code, std::string name, std::vector<std::optional<LinearOp>> stages,
                         double eta_floor, Postprocess postprocess);

    const CodeInstance &code() const {
        return *code_;
    }
    const CodePtr &code_ptr() const {
        return code_;
    }
    const std::string &name() const {
        return name_;
    }
    /// Declared per-message success probability floor.
    double eta_floor() const {
        return eta_floor_;
    }
    /// 1 - eta_floor
    double nu() const {
        return 1.0 - eta_floor_;
    }
    bool supports(uint64_t k) const;
    const LinearOp &stage(uint64_t k) const;

    /// Stage applied to an index-register state of dim M.
    std::vector<Complex> apply(uint64_t k, std::span<const Complex> state) const;

    /// |(U psi)_j|^2 per label. Throws InvalidArgument if the mass exceeds 1 + 1e-9.
    std::vector<double> outcome_distribution(uint64_t k, std::span<const Complex> state) const;

    /// Measured label, or nullopt on rejection.
    std::optional<uint64_t> sample(uint64_t k, std::span<const Complex> state, Rng &rng) const;

    std::optional<uint64_t> postprocess(uint64_t k, uint64_t label) const;

    /// Exact probability that decoding |C_x^(k)> yields x.
    double success_probability(uint64_t k, uint64_t x) const;
    /// Exact probability that decoding `state` yields x.
    double success_probability(uint64_t k, uint64_t x, std::span<const Complex> state) const;

   private:
    CodePtr code_;
    std::string name_;
    std::vector<std::optional<LinearOp>> stages_;
    double eta_floor_;
    Postprocess postprocess_;
};

/// Inverse Fourier transform per q-ary digit; digits are multiplied by k^{-1}. q^n <= 2048.
CodewordStateDecoder had_decoder(uint64_t q, size_t n);

/// H_C = (1/2)(J - 2I) on every base-4 digit. k = 1 only; 2^n <= 2048.
CodewordStateDecoder peq_decoder(size_t n);

/// 4x4 H_C, row-major.
std::vector<Complex> circulant_hadamard_matrix();

/// Exact and approximate diagonal of F_M^{-1}-conjugated codeword matrix.
struct CirculantDiagonal {
    uint64_t k = 1;
    /// D_k(i) = (1/sqrt M) sum_j omega_M^{ij} omega_q^{-k C_0(j)}
    std::vector<Complex> exact;
    std::vector<Complex> approx;
    /// max_i |approx_i - exact_i|, the operator norm of the difference.
    double delta = 0;

    /// approx = exact, delta = 0.
    static CirculantDiagonal exact_for(const CodeInstance &code, uint64_t k);
    static CirculantDiagonal with_approx(const CodeInstance &code, uint64_t k, std::vector<Complex> approx);
    /// For the negated Legendre code: approx = diag(0, c_p (1/p), ..., c_p ((p-1)/p)).
    static CirculantDiagonal legendre(uint64_t p);
};

/// D_k(i) for a circulant code.
std::vector<Complex> circulant_diagonal(const CodeInstance &code, uint64_t k);

/// c_p = 1 when p = 1 mod 4, i when p = 3 mod 4.
Complex gauss_sum_constant(uint64_t p);

/// U_k = F_M D~_k F_M^{-1}; eta_floor = (1 - delta)^2. Throws for non-circulant codes or delta >= 1.
CodewordStateDecoder circulant_decoder(CodePtr code, const CirculantDiagonal &diagonal);

/// Decoder for SLS^p through the negated code; postprocess negates the label mod p.
CodewordStateDecoder sls_decoder(uint64_t p);

/// Square-root measurement from the SVD of the codeword-state matrix. k = 0 builds every shuffle.
/// Throws DegenerateCode when the Gram matrix has an eigenvalue <= 1e-9.
CodewordStateDecoder pgm_decoder(CodePtr code, uint64_t k = 0);

/// Smallest eigenvalue of S^H S for shuffle k.
double gram_min_eigenvalue(const CodeInstance &code, uint64_t k);

/// Number of Gram eigenvalues above 1e-9.
size_t gram_rank(const CodeInstance &code, uint64_t k);

/// max_{x != y} |<C_x^(k)|C_y^(k)>|; 0 for a single message. N <= 256.
double measured_eta(const CodeInstance &code, uint64_t k);

/// Decoder matching a code's family: HAD, PEQ, SLS, negated SLS (exact
/// circulant), or PGM for tables.
CodewordStateDecoder default_decoder(CodePtr code);

}  // namespace qld

#endif
