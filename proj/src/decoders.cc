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

#include "qld/decoders.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "qld/errors.h"
#include "qld/field.h"
#include "qld/kernels.h"

namespace qld {

namespace {

constexpr double kRankCutoff = 1e-9;
constexpr size_t kMaxEtaMessages = 256;

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

CMatrix codeword_matrix(const CodeInstance &code, uint64_t k) {
    uint64_t m = code.block_length();
    uint64_t n = code.message_count();
    CMatrix s(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    for (uint64_t x = 0; x < n; x++) {
        StateVector c = codeword_state(code, x, k);
        for (uint64_t r = 0; r < m; r++) {
            s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) = c[r];
        }
    }
    return s;
}

Eigen::VectorXd singular_values(const CMatrix &s) {
    Eigen::BDCSVD<CMatrix> svd(s);
    return svd.singularValues();
}

void check_dense_code(const CodeInstance &code, const char *what) {
    if (code.block_length() > kMaxDenseDim) {
        throw CapacityError(std::string(what) + ": M = " + std::to_string(code.block_length()) +
                            " exceeds the dense limit 2048");
    }
}

}  // namespace

CodewordStateDecoder::CodewordStateDecoder(CodePtr code, std::string name, std::vector<std::optional<LinearOp>> stages,
                                           double eta_floor, Postprocess postprocess)
    : code_(std::move(code)),
      name_(std::move(name)),
      stages_(std::move(stages)),
      eta_floor_(eta_floor),
      postprocess_(std::move(postprocess)) {
    if (!code_) {
        throw InvalidArgument("decoder needs a code");
    }
    if (stages_.size() != code_->q()) {
        throw DimensionMismatch("decoder needs one stage slot per k in [0, q)");
    }
    if (!(eta_floor_ >= 0.0 && eta_floor_ <= 1.0 + kNormTolerance)) {
        throw InvalidArgument("decoder eta_floor must lie in [0, 1]");
    }
    for (const auto &s : stages_) {
        if (s && s->cols() != code_->block_length()) {
            throw DimensionMismatch("decoder stage input dim does not match M");
        }
    }
}

bool CodewordStateDecoder::supports(uint64_t k) const {
    return k > 0 && k < stages_.size() && stages_[k].has_value();
}

const LinearOp &CodewordStateDecoder::stage(uint64_t k) const {
    if (!supports(k)) {
        throw InvalidArgument(name_ + " decoder has no stage for k = " + std::to_string(k));
    }
    return *stages_[k];
}

std::vector<Complex> CodewordStateDecoder::apply(uint64_t k, std::span<const Complex> state) const {
    return stage(k).apply(state);
}

std::vector<double> CodewordStateDecoder::outcome_distribution(uint64_t k, std::span<const Complex> state) const {
    std::vector<Complex> out = apply(k, state);
    std::vector<double> probs(out.size());
    kernels::abs2(out, probs);
    double total = 0;
    for (double p : probs) {
        total += p;
    }
    if (total > 1.0 + kNormTolerance) {
        throw InvalidArgument(name_ + " decoder is non-contractive on this input (mass " + std::to_string(total) +
                              "); outcomes cannot be sampled");
    }
    return probs;
}

std::optional<uint64_t> CodewordStateDecoder::sample(uint64_t k, std::span<const Complex> state, Rng &rng) const {
    std::vector<double> probs = outcome_distribution(k, state);
    std::optional<size_t> label = sample_outcome(probs, rng);
    if (!label) {
        return std::nullopt;
    }
    return static_cast<uint64_t>(*label);
}

std::optional<uint64_t> CodewordStateDecoder::postprocess(uint64_t k, uint64_t label) const {
    return postprocess_(k, label);
}

double CodewordStateDecoder::success_probability(uint64_t k, uint64_t x, std::span<const Complex> state) const {
    std::vector<Complex> out = apply(k, state);
    double p = 0;
    for (uint64_t j = 0; j < out.size(); j++) {
        std::optional<uint64_t> m = postprocess_(k, j);
        if (m && *m == x) {
            p += std::norm(out[j]);
        }
    }
    return p;
}

double CodewordStateDecoder::success_probability(uint64_t k, uint64_t x) const {
    StateVector c = codeword_state(*code_, x, k);
    return success_probability(k, x, c.amplitudes());
}

CodewordStateDecoder had_decoder(uint64_t q, size_t n) {
    auto code = std::make_shared<const CodeInstance>(CodeInstance::hadamard(q, n));
    if (code->block_length() > kMaxDenseDim) {
        throw CapacityError("had_decoder: q^n exceeds 2048");
    }
    LinearOp inverse_digit = qft(q).adjoint().op();
    LinearOp stage = LinearOp::tensor(std::vector<LinearOp>(n, inverse_digit));
    std::vector<std::optional<LinearOp>> stages(q);
    for (uint64_t k = 1; k < q; k++) {
        stages[k] = stage;
    }
    PrimeModulus modulus(q);
    auto post = [q, n, modulus](uint64_t k, uint64_t label) -> std::optional<uint64_t> {
        uint64_t k_inv = FieldElement(static_cast<int64_t>(k), modulus).inverse().value();
        std::vector<Symbol> digits = to_digits(label, q, n);
        for (Symbol &d : digits) {
            d = static_cast<Symbol>((d * k_inv) % q);
        }
        return from_digits(digits, q);
    };
    return CodewordStateDecoder(code, "had", std::move(stages), 1.0, post);
}

std::vector<Complex> circulant_hadamard_matrix() {
    std::vector<Complex> h(16);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            h[i * 4 + j] = i == j ? -0.5 : 0.5;
        }
    }
    return h;
}

CodewordStateDecoder peq_decoder(size_t n) {
    auto code = std::make_shared<const CodeInstance>(CodeInstance::pairwise_equality(n));
    if (code->block_length() > kMaxDenseDim) {
        throw CapacityError("peq_decoder: 2^n exceeds 2048");
    }
    LinearOp hc = LinearOp::dense(4, 4, circulant_hadamard_matrix());
    std::vector<std::optional<LinearOp>> stages(2);
    stages[1] = LinearOp::tensor(std::vector<LinearOp>(n / 2, hc));
    auto post = [](uint64_t, uint64_t label) -> std::optional<uint64_t> { return label; };
    return CodewordStateDecoder(code, "peq", std::move(stages), 1.0, post);
}

std::vector<Complex> circulant_diagonal(const CodeInstance &code, uint64_t k) {
    if (k == 0 || k >= code.q()) {
        throw InvalidArgument("shuffle k must lie in [1, q-1]");
    }
    uint64_t m = code.block_length();
    uint64_t q = code.q();
    check_dense_code(code, "circulant_diagonal");
    std::vector<Complex> phase(m);
    for (uint64_t j = 0; j < m; j++) {
        phase[j] = root_of_unity(q, -static_cast<int64_t>((k * code.eval(0, j)) % q));
    }
    double norm = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<Complex> d(m);
    for (uint64_t i = 0; i < m; i++) {
        Complex acc = 0;
        for (uint64_t j = 0; j < m; j++) {
            acc += root_of_unity(m, static_cast<int64_t>((i * j) % m)) * phase[j];
        }
        d[i] = acc * norm;
    }
    return d;
}

CirculantDiagonal CirculantDiagonal::exact_for(const CodeInstance &code, uint64_t k) {
    CirculantDiagonal d;
    d.k = k;
    d.exact = circulant_diagonal(code, k);
    d.approx = d.exact;
    d.delta = 0;
    return d;
}

CirculantDiagonal CirculantDiagonal::with_approx(const CodeInstance &code, uint64_t k, std::vector<Complex> approx) {
    CirculantDiagonal d;
    d.k = k;
    d.exact = circulant_diagonal(code, k);
    if (approx.size() != d.exact.size()) {
        throw DimensionMismatch("approximate diagonal has the wrong length");
    }
    d.approx = std::move(approx);
    for (size_t i = 0; i < d.exact.size(); i++) {
        d.delta = std::max(d.delta, std::abs(d.approx[i] - d.exact[i]));
    }
    return d;
}

Complex gauss_sum_constant(uint64_t p) {
    PrimeModulus modulus(p);
    if (!modulus.is_odd()) {
        throw InvalidModulus("gauss_sum_constant needs an odd prime");
    }
    return p % 4 == 1 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
}

CirculantDiagonal CirculantDiagonal::legendre(uint64_t p) {
    CodeInstance code = CodeInstance::negated_legendre(p);
    Complex c = gauss_sum_constant(p);
    std::vector<Complex> approx(p);
    for (uint64_t i = 1; i < p; i++) {
        approx[i] = c * static_cast<double>(qld::legendre(static_cast<int64_t>(i), p));
    }
    return with_approx(code, 1, std::move(approx));
}

CodewordStateDecoder circulant_decoder(CodePtr code, const CirculantDiagonal &diagonal) {
    if (!code) {
        throw InvalidArgument("circulant_decoder needs a code");
    }
    check_dense_code(*code, "circulant_decoder");
    if (!is_circulant(*code)) {
        throw InvalidArgument("circulant_decoder: code " + code->describe() + " is not circulant");
    }
    if (diagonal.approx.size() != code->block_length()) {
        throw DimensionMismatch("circulant_decoder: diagonal length does not match M");
    }
    if (!(diagonal.delta < 1.0)) {
        throw InvalidArgument("circulant_decoder: delta = " + std::to_string(diagonal.delta) + " must be < 1");
    }
    if (diagonal.k == 0 || diagonal.k >= code->q()) {
        throw InvalidArgument("circulant_decoder: shuffle k out of range");
    }
    UnitaryMap f = qft(code->block_length());
    LinearOp stage = LinearOp::sequence({f.adjoint().op(), LinearOp::diagonal(diagonal.approx), f.op()});
    std::vector<std::optional<LinearOp>> stages(code->q());
    stages[diagonal.k] = stage;
    double eta = (1.0 - diagonal.delta) * (1.0 - diagonal.delta);
    auto post = [](uint64_t, uint64_t label) -> std::optional<uint64_t> { return label; };
    return CodewordStateDecoder(std::move(code), "circulant", std::move(stages), eta, post);
}

CodewordStateDecoder sls_decoder(uint64_t p) {
    auto code = std::make_shared<const CodeInstance>(CodeInstance::shifted_legendre(p));
    check_dense_code(*code, "sls_decoder");
    CirculantDiagonal diagonal = CirculantDiagonal::legendre(p);
    UnitaryMap f = qft(p);
    LinearOp stage = LinearOp::sequence({f.adjoint().op(), LinearOp::diagonal(diagonal.approx), f.op()});
    std::vector<std::optional<LinearOp>> stages(2);
    stages[1] = stage;
    double eta = (1.0 - diagonal.delta) * (1.0 - diagonal.delta);
    auto post = [p](uint64_t, uint64_t label) -> std::optional<uint64_t> { return (p - label % p) % p; };
    return CodewordStateDecoder(code, "sls", std::move(stages), eta, post);
}

double gram_min_eigenvalue(const CodeInstance &code, uint64_t k) {
    check_dense_code(code, "gram_min_eigenvalue");
    Eigen::VectorXd sv = singular_values(codeword_matrix(code, k));
    if (code.message_count() > code.block_length()) {
        return 0.0;
    }
    double smin = sv.size() > 0 ? sv.minCoeff() : 0.0;
    return smin * smin;
}

size_t gram_rank(const CodeInstance &code, uint64_t k) {
    check_dense_code(code, "gram_rank");
    Eigen::VectorXd sv = singular_values(codeword_matrix(code, k));
    size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        rank += sv(i) * sv(i) > kRankCutoff;
    }
    return rank;
}

CodewordStateDecoder pgm_decoder(CodePtr code, uint64_t k) {
    if (!code) {
        throw InvalidArgument("pgm_decoder needs a code");
    }
    uint64_t m = code->block_length();
    uint64_t n = code->message_count();
    check_dense_code(*code, "pgm_decoder");
    if (n > m) {
        throw InvalidArgument("pgm_decoder needs M >= N, got M=" + std::to_string(m) + " N=" + std::to_string(n));
    }
    if (k >= code->q()) {
        throw InvalidArgument("pgm_decoder: shuffle k out of range");
    }
    std::vector<std::optional<LinearOp>> stages(code->q());
    double floor = 1.0;
    uint64_t k_lo = k == 0 ? 1 : k;
    uint64_t k_hi = k == 0 ? code->q() - 1 : k;
    for (uint64_t kk = k_lo; kk <= k_hi; kk++) {
        CMatrix s = codeword_matrix(*code, kk);
        Eigen::BDCSVD<CMatrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::VectorXd sv = svd.singularValues();
        double lambda_min = sv.minCoeff() * sv.minCoeff();
        if (lambda_min <= kRankCutoff) {
            throw DegenerateCode("pgm_decoder: Gram matrix of " + code->describe() + " (k=" + std::to_string(kk) +
                                 ") has eigenvalue " + std::to_string(lambda_min) + " <= 1e-9");
        }
        floor = std::min(floor, lambda_min);
        // U = R P^H with R = diag(Q, I).
        const CMatrix &p = svd.matrixU();
        const CMatrix &q = svd.matrixV();
        CMatrix r = CMatrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        r.topLeftCorner(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = q;
        CMatrix u = r * p.adjoint();
        std::vector<Complex> entries(m * m);
        for (uint64_t i = 0; i < m; i++) {
            for (uint64_t j = 0; j < m; j++) {
                entries[i * m + j] = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
        LinearOp op = LinearOp::dense(m, m, std::move(entries));
        if (!op.is_unitary(kNormTolerance)) {
            throw DegenerateCode("pgm_decoder: SVD produced a non-unitary measurement");
        }
        stages[kk] = std::move(op);
    }
    auto post = [n](uint64_t, uint64_t label) -> std::optional<uint64_t> {
        if (label < n) {
            return label;
        }
        return std::nullopt;
    };
    return CodewordStateDecoder(std::move(code), "pgm", std::move(stages), std::min(floor, 1.0), post);
}

double measured_eta(const CodeInstance &code, uint64_t k) {
    uint64_t n = code.message_count();
    if (n > kMaxEtaMessages) {
        throw CapacityError("measured_eta: N = " + std::to_string(n) + " exceeds 256");
    }
    std::vector<StateVector> states;
    states.reserve(n);
    for (uint64_t x = 0; x < n; x++) {
        states.push_back(codeword_state(code, x, k));
    }
    double eta = 0;
    for (uint64_t x = 0; x < n; x++) {
        for (uint64_t y = x + 1; y < n; y++) {
            eta = std::max(eta, fidelity(states[x], states[y]));
        }
    }
    return std::min(eta, 1.0);
}

CodewordStateDecoder default_decoder(CodePtr code) {
    switch (code->family()) {
        case CodeFamily::hadamard:
            return had_decoder(code->q(), code->n());
        case CodeFamily::pairwise_equality:
            return peq_decoder(code->n());
        case CodeFamily::shifted_legendre:
            return sls_decoder(code->block_length());
        case CodeFamily::negated_legendre:
            return circulant_decoder(code, CirculantDiagonal::legendre(code->block_length()));
        case CodeFamily::table:
            return pgm_decoder(code);
    }
    throw InvalidArgument("no decoder for code " + code->describe());
}

}  // namespace qld
