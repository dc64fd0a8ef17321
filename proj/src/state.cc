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

#include "qld/state.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <variant>

#include "qld/errors.h"
#include "qld/field.h"
#include "qld/kernels.h"

namespace qld {

namespace {

std::vector<size_t> resolve_shape(size_t dim, std::vector<size_t> shape) {
    if (shape.empty()) {
        return {dim};
    }
    size_t product = 1;
    for (size_t d : shape) {
        if (d == 0) {
            throw DimensionMismatch("factor_shape entries must be >= 1");
        }
        product *= d;
    }
    if (product != dim) {
        throw DimensionMismatch("factor_shape product " + std::to_string(product) + " != dim " + std::to_string(dim));
    }
    return shape;
}

void check_normalized(std::span<const Complex> amplitudes, const char *context) {
    double n = kernels::norm2(amplitudes);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw InvalidArgument(std::string(context) + ": squared norm " + std::to_string(n) +
                              " differs from 1 by more than 1e-9");
    }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes, std::vector<size_t> factor_shape) {
    if (amplitudes.empty()) {
        throw InvalidArgument("state vector must have dim >= 1");
    }
    factor_shape_ = resolve_shape(amplitudes.size(), std::move(factor_shape));
    check_normalized(amplitudes, "StateVector");
    amplitudes_ = std::move(amplitudes);
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes, std::vector<size_t> factor_shape) {
    if (amplitudes.empty()) {
        throw InvalidArgument("state vector must have dim >= 1");
    }
    double n = kernels::norm2(amplitudes);
    if (n == 0.0) {
        throw InvalidArgument("cannot normalize the zero vector");
    }
    kernels::scale(1.0 / std::sqrt(n), amplitudes);
    StateVector s;
    s.factor_shape_ = resolve_shape(amplitudes.size(), std::move(factor_shape));
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::basis(size_t dim, size_t index, std::vector<size_t> factor_shape) {
    if (dim == 0 || dim > kMaxStateDim) {
        throw InvalidArgument("basis: dim out of range");
    }
    if (index >= dim) {
        throw InvalidArgument("basis: index " + std::to_string(index) + " >= dim " + std::to_string(dim));
    }
    std::vector<Complex> a(dim);
    a[index] = 1.0;
    return StateVector(std::move(a), std::move(factor_shape));
}

StateVector StateVector::uniform(size_t dim, std::vector<size_t> factor_shape) {
    if (dim == 0 || dim > kMaxStateDim) {
        throw InvalidArgument("uniform: dim out of range");
    }
    std::vector<Complex> a(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return StateVector(std::move(a), std::move(factor_shape));
}

size_t StateVector::flat_index(std::span<const size_t> digits) const {
    if (digits.size() != factor_shape_.size()) {
        throw DimensionMismatch("flat_index: expected " + std::to_string(factor_shape_.size()) + " digits");
    }
    size_t index = 0;
    for (size_t i = 0; i < digits.size(); i++) {
        if (digits[i] >= factor_shape_[i]) {
            throw InvalidArgument("flat_index: digit out of range");
        }
        index = index * factor_shape_[i] + digits[i];
    }
    return index;
}

struct LinearOp::Impl {
    struct Dense {
        size_t rows;
        size_t cols;
        std::vector<Complex> entries;
    };
    struct Diagonal {
        std::vector<Complex> entries;
    };
    struct Permutation {
        std::vector<size_t> image;
    };
    struct Tensor {
        std::vector<LinearOp> factors;
        size_t total;
    };
    struct Sequence {
        std::vector<LinearOp> ops;
    };
    struct BlockDiagonal {
        std::vector<LinearOp> blocks;
        size_t total;
    };
    std::variant<Dense, Diagonal, Permutation, Tensor, Sequence, BlockDiagonal> form;
};

LinearOp LinearOp::identity(size_t dim) {
    std::vector<size_t> image(dim);
    std::iota(image.begin(), image.end(), size_t{0});
    return permutation(std::move(image));
}

LinearOp LinearOp::dense(size_t rows, size_t cols, std::vector<Complex> entries) {
    if (rows == 0 || cols == 0) {
        throw InvalidArgument("dense op needs nonzero dimensions");
    }
    if (rows > kMaxDenseDim || cols > kMaxDenseDim) {
        throw CapacityError("dense op " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds 2048");
    }
    if (entries.size() != rows * cols) {
        throw DimensionMismatch("dense op: expected " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(entries.size()));
    }
    return LinearOp(std::make_shared<const Impl>(Impl{Impl::Dense{rows, cols, std::move(entries)}}));
}

LinearOp LinearOp::diagonal(std::vector<Complex> entries) {
    if (entries.empty()) {
        throw InvalidArgument("diagonal op needs dim >= 1");
    }
    return LinearOp(std::make_shared<const Impl>(Impl{Impl::Diagonal{std::move(entries)}}));
}

LinearOp LinearOp::permutation(std::vector<size_t> image) {
    if (image.empty()) {
        throw InvalidArgument("permutation op needs dim >= 1");
    }
    std::vector<bool> seen(image.size(), false);
    for (size_t v : image) {
        if (v >= image.size() || seen[v]) {
            throw InvalidArgument("permutation op: image is not a permutation");
        }
        seen[v] = true;
    }
    return LinearOp(std::make_shared<const Impl>(Impl{Impl::Permutation{std::move(image)}}));
}

LinearOp LinearOp::tensor(std::vector<LinearOp> factors) {
    if (factors.empty()) {
        throw InvalidArgument("tensor op needs at least one factor");
    }
    size_t total = 1;
    for (const LinearOp &f : factors) {
        if (f.rows() != f.cols()) {
            throw DimensionMismatch("tensor op factors must be square");
        }
        total *= f.rows();
        if (total > kMaxStateDim) {
            throw CapacityError("tensor op dimension exceeds 2^24");
        }
    }
    return LinearOp(std::make_shared<const Impl>(Impl{Impl::Tensor{std::move(factors), total}}));
}

LinearOp LinearOp::sequence(std::vector<LinearOp> ops) {
    if (ops.empty()) {
        throw InvalidArgument("sequence op needs at least one op");
    }
    for (size_t i = 1; i < ops.size(); i++) {
        if (ops[i].cols() != ops[i - 1].rows()) {
            throw DimensionMismatch("sequence op: op " + std::to_string(i) + " input dim does not match");
        }
    }
    return LinearOp(std::make_shared<const Impl>(Impl{Impl::Sequence{std::move(ops)}}));
}

LinearOp LinearOp::block_diagonal(std::vector<LinearOp> blocks) {
    if (blocks.empty()) {
        throw InvalidArgument("block_diagonal op needs at least one block");
    }
    size_t total = 0;
    for (const LinearOp &b : blocks) {
        if (b.rows() != b.cols()) {
            throw DimensionMismatch("block_diagonal op blocks must be square");
        }
        total += b.rows();
        if (total > kMaxStateDim) {
            throw CapacityError("block_diagonal op dimension exceeds 2^24");
        }
    }
    return LinearOp(std::make_shared<const Impl>(Impl{Impl::BlockDiagonal{std::move(blocks), total}}));
}

size_t LinearOp::rows() const {
    return std::visit(
        [](const auto &f) -> size_t {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Impl::Dense>) {
                return f.rows;
            } else if constexpr (std::is_same_v<T, Impl::Diagonal>) {
                return f.entries.size();
            } else if constexpr (std::is_same_v<T, Impl::Permutation>) {
                return f.image.size();
            } else if constexpr (std::is_same_v<T, Impl::Tensor> || std::is_same_v<T, Impl::BlockDiagonal>) {
                return f.total;
            } else {
                return f.ops.back().rows();
            }
        },
        impl_->form);
}

size_t LinearOp::cols() const {
    return std::visit(
        [](const auto &f) -> size_t {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Impl::Dense>) {
                return f.cols;
            } else if constexpr (std::is_same_v<T, Impl::Diagonal>) {
                return f.entries.size();
            } else if constexpr (std::is_same_v<T, Impl::Permutation>) {
                return f.image.size();
            } else if constexpr (std::is_same_v<T, Impl::Tensor> || std::is_same_v<T, Impl::BlockDiagonal>) {
                return f.total;
            } else {
                return f.ops.front().cols();
            }
        },
        impl_->form);
}

std::vector<Complex> LinearOp::apply(std::span<const Complex> v) const {
    if (v.size() != cols()) {
        throw DimensionMismatch("LinearOp::apply: input has " + std::to_string(v.size()) + " entries, op expects " +
                                std::to_string(cols()));
    }
    return std::visit(
        [&](const auto &f) -> std::vector<Complex> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Impl::Dense>) {
                std::vector<Complex> out(f.rows);
                kernels::matvec(f.entries, f.rows, f.cols, v, out);
                return out;
            } else if constexpr (std::is_same_v<T, Impl::Diagonal>) {
                std::vector<Complex> out(v.size());
                kernels::mul(f.entries, v, out);
                return out;
            } else if constexpr (std::is_same_v<T, Impl::Permutation>) {
                std::vector<Complex> out(v.size());
                for (size_t i = 0; i < v.size(); i++) {
                    out[f.image[i]] = v[i];
                }
                return out;
            } else if constexpr (std::is_same_v<T, Impl::Tensor>) {
                std::vector<Complex> cur(v.begin(), v.end());
                size_t stride = f.total;
                std::vector<Complex> slice;
                for (const LinearOp &factor : f.factors) {
                    size_t d = factor.rows();
                    stride /= d;
                    size_t outer = f.total / (d * stride);
                    slice.resize(d);
                    for (size_t o = 0; o < outer; o++) {
                        size_t base = o * d * stride;
                        for (size_t s = 0; s < stride; s++) {
                            for (size_t j = 0; j < d; j++) {
                                slice[j] = cur[base + j * stride + s];
                            }
                            std::vector<Complex> mapped = factor.apply(slice);
                            for (size_t j = 0; j < d; j++) {
                                cur[base + j * stride + s] = mapped[j];
                            }
                        }
                    }
                }
                return cur;
            } else if constexpr (std::is_same_v<T, Impl::BlockDiagonal>) {
                std::vector<Complex> out(f.total);
                size_t offset = 0;
                for (const LinearOp &block : f.blocks) {
                    size_t d = block.rows();
                    std::vector<Complex> mapped = block.apply(v.subspan(offset, d));
                    std::copy(mapped.begin(), mapped.end(), out.begin() + static_cast<ptrdiff_t>(offset));
                    offset += d;
                }
                return out;
            } else {
                std::vector<Complex> cur(v.begin(), v.end());
                for (const LinearOp &op : f.ops) {
                    cur = op.apply(cur);
                }
                return cur;
            }
        },
        impl_->form);
}

LinearOp LinearOp::adjoint() const {
    return std::visit(
        [&](const auto &f) -> LinearOp {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Impl::Dense>) {
                std::vector<Complex> t(f.entries.size());
                for (size_t i = 0; i < f.rows; i++) {
                    for (size_t j = 0; j < f.cols; j++) {
                        t[j * f.rows + i] = std::conj(f.entries[i * f.cols + j]);
                    }
                }
                return LinearOp::dense(f.cols, f.rows, std::move(t));
            } else if constexpr (std::is_same_v<T, Impl::Diagonal>) {
                std::vector<Complex> d(f.entries.size());
                std::transform(f.entries.begin(), f.entries.end(), d.begin(),
                               [](Complex c) { return std::conj(c); });
                return LinearOp::diagonal(std::move(d));
            } else if constexpr (std::is_same_v<T, Impl::Permutation>) {
                std::vector<size_t> inv(f.image.size());
                for (size_t i = 0; i < f.image.size(); i++) {
                    inv[f.image[i]] = i;
                }
                return LinearOp::permutation(std::move(inv));
            } else if constexpr (std::is_same_v<T, Impl::Tensor>) {
                std::vector<LinearOp> adj;
                adj.reserve(f.factors.size());
                for (const LinearOp &factor : f.factors) {
                    adj.push_back(factor.adjoint());
                }
                return LinearOp::tensor(std::move(adj));
            } else if constexpr (std::is_same_v<T, Impl::BlockDiagonal>) {
                std::vector<LinearOp> adj;
                adj.reserve(f.blocks.size());
                for (const LinearOp &block : f.blocks) {
                    adj.push_back(block.adjoint());
                }
                return LinearOp::block_diagonal(std::move(adj));
            } else {
                std::vector<LinearOp> adj;
                adj.reserve(f.ops.size());
                for (auto it = f.ops.rbegin(); it != f.ops.rend(); ++it) {
                    adj.push_back(it->adjoint());
                }
                return LinearOp::sequence(std::move(adj));
            }
        },
        impl_->form);
}

std::vector<Complex> LinearOp::to_dense() const {
    size_t r = rows();
    size_t c = cols();
    if (r > kMaxDenseDim || c > kMaxDenseDim) {
        throw CapacityError("to_dense: dimension exceeds 2048");
    }
    if (const auto *d = std::get_if<Impl::Dense>(&impl_->form)) {
        return d->entries;
    }
    std::vector<Complex> out(r * c);
    std::vector<Complex> e(c);
    for (size_t j = 0; j < c; j++) {
        e[j] = 1.0;
        std::vector<Complex> column = apply(e);
        e[j] = 0.0;
        for (size_t i = 0; i < r; i++) {
            out[i * c + j] = column[i];
        }
    }
    return out;
}

bool LinearOp::is_unitary(double tol) const {
    if (rows() != cols()) {
        return false;
    }
    return std::visit(
        [&](const auto &f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Impl::Dense>) {
                return unitarity_defect(f.entries, f.rows) <= tol;
            } else if constexpr (std::is_same_v<T, Impl::Diagonal>) {
                double acc = 0;
                for (Complex c : f.entries) {
                    double dev = std::norm(c) - 1.0;
                    acc += dev * dev;
                }
                return std::sqrt(acc) <= tol;
            } else if constexpr (std::is_same_v<T, Impl::Permutation>) {
                return true;
            } else if constexpr (std::is_same_v<T, Impl::Tensor>) {
                return std::all_of(f.factors.begin(), f.factors.end(),
                                   [&](const LinearOp &op) { return op.is_unitary(tol); });
            } else if constexpr (std::is_same_v<T, Impl::BlockDiagonal>) {
                return std::all_of(f.blocks.begin(), f.blocks.end(),
                                   [&](const LinearOp &op) { return op.is_unitary(tol); });
            } else {
                return std::all_of(f.ops.begin(), f.ops.end(), [&](const LinearOp &op) { return op.is_unitary(tol); });
            }
        },
        impl_->form);
}

double unitarity_defect(std::span<const Complex> matrix, size_t dim) {
    if (matrix.size() != dim * dim) {
        throw DimensionMismatch("unitarity_defect: matrix size does not match dim");
    }
    // Columns of A, stored contiguously, so (A^H A)_ij = <col_i|col_j>.
    std::vector<Complex> cols(dim * dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            cols[j * dim + i] = matrix[i * dim + j];
        }
    }
    const kernels::KernelTable &k = kernels::active();
    double acc = 0;
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = i; j < dim; j++) {
            Complex g = k.dotc(cols.data() + i * dim, cols.data() + j * dim, dim);
            if (i == j) {
                g -= 1.0;
                acc += std::norm(g);
            } else {
                acc += 2.0 * std::norm(g);
            }
        }
    }
    return std::sqrt(acc);
}

UnitaryMap::UnitaryMap(LinearOp op) : op_(std::move(op)) {
    if (op_.rows() != op_.cols()) {
        throw DimensionMismatch("UnitaryMap: operator is not square");
    }
    if (!op_.is_unitary(kNormTolerance)) {
        throw InvalidArgument("UnitaryMap: operator is not unitary within 1e-9");
    }
}

UnitaryMap UnitaryMap::trusted(LinearOp op) {
    if (op.rows() != op.cols()) {
        throw DimensionMismatch("UnitaryMap: operator is not square");
    }
    return UnitaryMap(std::move(op), TrustedTag{});
}

UnitaryMap UnitaryMap::adjoint() const {
    return UnitaryMap(op_.adjoint(), TrustedTag{});
}

UnitaryMap qft(size_t m) {
    if (m == 0) {
        throw InvalidArgument("qft: m must be >= 1");
    }
    if (m > kMaxDenseDim) {
        throw CapacityError("qft: m = " + std::to_string(m) + " exceeds the dense limit 2048");
    }
    double norm = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<Complex> roots(m);
    for (size_t t = 0; t < m; t++) {
        roots[t] = root_of_unity(m, static_cast<int64_t>(t)) * norm;
    }
    std::vector<Complex> entries(m * m);
    for (size_t r = 0; r < m; r++) {
        for (size_t s = 0; s < m; s++) {
            entries[r * m + s] = roots[(r * s) % m];
        }
    }
    return UnitaryMap::trusted(LinearOp::dense(m, m, std::move(entries)));
}

StateVector apply(const UnitaryMap &u, const StateVector &s) {
    if (u.dim() != s.dim()) {
        throw DimensionMismatch("apply: unitary dim " + std::to_string(u.dim()) + " != state dim " +
                                std::to_string(s.dim()));
    }
    return StateVector(u.op().apply(s.amplitudes()), s.factor_shape());
}

size_t measure(std::span<const Complex> amplitudes, Rng &rng) {
    if (amplitudes.empty()) {
        throw InvalidArgument("measure: empty state");
    }
    check_normalized(amplitudes, "measure");
    std::vector<double> probs(amplitudes.size());
    kernels::abs2(amplitudes, probs);
    double total = 0;
    for (double p : probs) {
        total += p;
    }
    double u = uniform01(rng) * total;
    double cum = 0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < probs.size(); i++) {
        if (probs[i] > 0) {
            last_nonzero = i;
        }
        cum += probs[i];
        if (u < cum) {
            return i;
        }
    }
    return last_nonzero;
}

size_t measure(const StateVector &s, Rng &rng) {
    return measure(s.amplitudes(), rng);
}

std::optional<size_t> sample_outcome(std::span<const double> probs, Rng &rng) {
    double total = 0;
    for (double p : probs) {
        if (p < -kNormTolerance) {
            throw InvalidArgument("sample_outcome: negative probability");
        }
        total += p;
    }
    if (total > 1.0 + kNormTolerance) {
        throw InvalidArgument("sample_outcome: probabilities sum to " + std::to_string(total) + " > 1");
    }
    double u = uniform01(rng);
    double cum = 0;
    for (size_t i = 0; i < probs.size(); i++) {
        cum += std::max(probs[i], 0.0);
        if (u < cum) {
            return i;
        }
    }
    return std::nullopt;
}

Complex overlap(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("overlap: dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    return kernels::dotc(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::abs(overlap(a, b));
}

double trace_distance(const StateVector &a, const StateVector &b) {
    double f = std::min(fidelity(a, b), 1.0);
    return 2.0 * std::sqrt(1.0 - f * f);
}

namespace {

void check_shuffle(const CodeInstance &code, uint64_t k) {
    if (k == 0 || k >= code.q()) {
        throw InvalidArgument("shuffle k must lie in [1, q-1], got " + std::to_string(k));
    }
}

std::vector<Complex> root_table(uint64_t q) {
    std::vector<Complex> roots(q);
    for (uint64_t t = 0; t < q; t++) {
        roots[t] = root_of_unity(q, static_cast<int64_t>(t));
    }
    return roots;
}

}  // namespace

StateVector codeword_state(const CodeInstance &code, uint64_t x, uint64_t k) {
    check_shuffle(code, k);
    uint64_t m = code.block_length();
    if (m > kMaxStateDim) {
        throw CapacityError("codeword_state: M exceeds 2^24");
    }
    uint64_t q = code.q();
    std::vector<Complex> roots = root_table(q);
    double norm = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<Complex> a(m);
    for (uint64_t r = 0; r < m; r++) {
        a[r] = roots[(k * code.eval(x, r)) % q] * norm;
    }
    return StateVector(std::move(a));
}

Complex signed_overlap(const CodeInstance &code, uint64_t x, uint64_t y, uint64_t k) {
    check_shuffle(code, k);
    uint64_t m = code.block_length();
    uint64_t q = code.q();
    std::vector<Complex> roots = root_table(q);
    Complex acc = 0;
    for (uint64_t r = 0; r < m; r++) {
        uint64_t diff = (q + code.eval(y, r) % q - code.eval(x, r) % q) % q;
        acc += roots[(k * diff) % q];
    }
    return acc / static_cast<double>(m);
}

double pairwise_overlap(const CodeInstance &code, uint64_t x, uint64_t y, uint64_t k) {
    return std::abs(signed_overlap(code, x, y, k));
}

}  // namespace qld
