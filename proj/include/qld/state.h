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

#ifndef QLD_STATE_H
#define QLD_STATE_H

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qld/codes.h"
#include "qld/rng.h"

namespace qld {

using Complex = std::complex<double>;

constexpr double kNormTolerance = 1e-9;
/// Largest dimension for which dense matrices are built.
constexpr size_t kMaxDenseDim = 2048;
/// Largest state vector the simulator allocates.
constexpr size_t kMaxStateDim = size_t{1} << 24;

/// Normalized pure state. factor_shape lists register dimensions, most
/// significant first; flat index is row-major over it.
class StateVector {
   public:
    /// Throws InvalidArgument unless sum |a_i|^2 = 1 within kNormTolerance.
    explicit StateVector(std::vector<Complex> amplitudes, std::vector<size_t> factor_shape = {});

    /// Rescales to unit norm; throws if the vector is zero.
    static StateVector normalized(std::vector<Complex> amplitudes, std::vector<size_t> factor_shape = {});
    static StateVector basis(size_t dim, size_t index, std::vector<size_t> factor_shape = {});
    static StateVector uniform(size_t dim, std::vector<size_t> factor_shape = {});

    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](size_t i) const {
        return amplitudes_[i];
    }
    const std::vector<size_t> &factor_shape() const {
        return factor_shape_;
    }
    /// Row-major flat index of per-register digits.
    size_t flat_index(std::span<const size_t> digits) const;

    std::vector<Complex> take_amplitudes() && {
        return std::move(amplitudes_);
    }

   private:
    StateVector() = default;

    std::vector<Complex> amplitudes_;
    std::vector<size_t> factor_shape_;
};

/// A linear map in one of a few structured forms. Not necessarily unitary:
/// decoders built from approximate diagonals are contractions.
class LinearOp {
   public:
    static LinearOp identity(size_t dim);
    /// Row-major rows x cols.
    static LinearOp dense(size_t rows, size_t cols, std::vector<Complex> entries);
    static LinearOp diagonal(std::vector<Complex> entries);
    /// |i> -> |image[i]>; image must be a permutation.
    static LinearOp permutation(std::vector<size_t> image);
    /// Kronecker product of square factors, factor 0 most significant.
    static LinearOp tensor(std::vector<LinearOp> factors);
    /// Applies ops[0] first, then ops[1], and so on.
    static LinearOp sequence(std::vector<LinearOp> ops);
    /// Direct sum of square blocks along the diagonal.
    static LinearOp block_diagonal(std::vector<LinearOp> blocks);

    size_t rows() const;
    size_t cols() const;

    std::vector<Complex> apply(std::span<const Complex> v) const;
    LinearOp adjoint() const;
    /// Row-major dense matrix; throws CapacityError above kMaxDenseDim.
    std::vector<Complex> to_dense() const;

    /// ||A^H A - I||_F within tol. Structured forms are checked per part.
    bool is_unitary(double tol = kNormTolerance) const;

    struct Impl;

   private:
    explicit LinearOp(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
    }

    std::shared_ptr<const Impl> impl_;
};

/// Frobenius norm of A^H A - I for a row-major square matrix.
double unitarity_defect(std::span<const Complex> matrix, size_t dim);

/// LinearOp verified unitary within 1e-9 on construction.
class UnitaryMap {
   public:
    /// Throws InvalidArgument if op is not square and unitary.
    explicit UnitaryMap(LinearOp op);

    /// Skips the check; for maps unitary by construction (exact Fourier matrices).
    static UnitaryMap trusted(LinearOp op);

    size_t dim() const {
        return op_.rows();
    }
    const LinearOp &op() const {
        return op_;
    }
    UnitaryMap adjoint() const;

   private:
    struct TrustedTag {};
    UnitaryMap(LinearOp op, TrustedTag) : op_(std::move(op)) {
    }

    LinearOp op_;
};

/// Fourier matrix on Z_m: entry (r, s) = omega_m^{rs} / sqrt(m).
UnitaryMap qft(size_t m);

StateVector apply(const UnitaryMap &u, const StateVector &s);

/// Samples i with probability |a_i|^2. Throws unless s is normalized.
size_t measure(const StateVector &s, Rng &rng);
size_t measure(std::span<const Complex> amplitudes, Rng &rng);

/// Samples i with probability probs[i]; the residual 1 - sum(probs) yields nullopt.
std::optional<size_t> sample_outcome(std::span<const double> probs, Rng &rng);

/// <a|b>
Complex overlap(const StateVector &a, const StateVector &b);
double fidelity(const StateVector &a, const StateVector &b);
/// 2 sqrt(1 - F^2) for pure states.
double trace_distance(const StateVector &a, const StateVector &b);

/// (1/sqrt M) sum_r omega_q^{k C_x(r)} |r>. k must be in [1, q).
StateVector codeword_state(const CodeInstance &code, uint64_t x, uint64_t k);

/// |<C_x^(k)|C_y^(k)>|
double pairwise_overlap(const CodeInstance &code, uint64_t x, uint64_t y, uint64_t k);

/// <C_x^(k)|C_y^(k)> before taking the modulus.
Complex signed_overlap(const CodeInstance &code, uint64_t x, uint64_t y, uint64_t k);

}  // namespace qld

#endif
