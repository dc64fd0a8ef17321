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

#include "qld/oracle.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "qld/errors.h"
#include "qld/field.h"
#include "qld/kernels.h"

namespace qld {

namespace {

// Dense block entries summed over all r.
constexpr size_t kMaxDenseOracleEntries = size_t{1} << 24;
// Basis vectors pushed through a predictor to recover its blocks.
constexpr size_t kMaxPredictorDim = size_t{1} << 16;
constexpr double kOrthoTolerance = 1e-12;
constexpr double kGramSchmidtFloor = 1e-6;

void check_geometry(uint64_t q, uint64_t block_length, size_t garbage_bits) {
    PrimeModulus modulus(q);
    if (block_length == 0) {
        throw InvalidArgument("oracle needs M >= 1");
    }
    if (garbage_bits > kMaxGarbageBits) {
        throw InvalidArgument("garbage register of " + std::to_string(garbage_bits) + " bits exceeds the cap of 8");
    }
    size_t state_dim = block_length * q * (size_t{1} << garbage_bits);
    if (block_length > kMaxStateDim || state_dim > kMaxStateDim) {
        throw CapacityError("oracle state dimension exceeds 2^24");
    }
}

void check_dense_budget(uint64_t block_length, size_t block_dim) {
    if (block_dim > kMaxDenseDim || block_length * block_dim * block_dim > kMaxDenseOracleEntries) {
        throw CapacityError("oracle blocks too large to store densely");
    }
}

std::vector<Complex> shift_symbols(std::span<const Complex> v, uint64_t q, size_t g_dim, uint64_t u) {
    std::vector<Complex> out(v.size());
    for (uint64_t s = 0; s < q; s++) {
        for (size_t g = 0; g < g_dim; g++) {
            out[((s + u) % q) * g_dim + g] = v[s * g_dim + g];
        }
    }
    return out;
}

// Unitary completion of one designated column (input |u=0, g=0>).
// Slot order: designated column, then its symbol shifts u = 1..q-1 where
// those are orthogonal to everything kept so far, then Gram-Schmidt over
// standard basis vectors in ascending order into the free slots in
// ascending order.
std::vector<Complex> complete_block(std::span<const Complex> designated, uint64_t q, size_t g_dim) {
    size_t b = q * g_dim;
    std::vector<std::vector<Complex>> cols(b);
    std::vector<bool> filled(b, false);
    std::vector<size_t> order;
    cols[0].assign(designated.begin(), designated.end());
    filled[0] = true;
    order.push_back(0);

    auto orthogonal_to_kept = [&](const std::vector<Complex> &v) {
        for (size_t slot : order) {
            if (std::abs(kernels::dotc(cols[slot], v)) > kOrthoTolerance) {
                return false;
            }
        }
        return true;
    };

    for (uint64_t u = 1; u < q; u++) {
        std::vector<Complex> shifted = shift_symbols(designated, q, g_dim, u);
        if (orthogonal_to_kept(shifted)) {
            size_t slot = u * g_dim;
            cols[slot] = std::move(shifted);
            filled[slot] = true;
            order.push_back(slot);
        }
    }

    size_t next_free = 0;
    auto advance = [&] {
        while (next_free < b && filled[next_free]) {
            next_free++;
        }
    };
    advance();
    for (size_t j = 0; j < b && next_free < b; j++) {
        std::vector<Complex> v(b);
        v[j] = 1.0;
        for (int pass = 0; pass < 2; pass++) {
            for (size_t slot : order) {
                Complex c = kernels::dotc(cols[slot], v);
                for (size_t i = 0; i < b; i++) {
                    v[i] -= c * cols[slot][i];
                }
            }
        }
        double n = std::sqrt(kernels::norm2(v));
        if (n < kGramSchmidtFloor) {
            continue;
        }
        kernels::scale(1.0 / n, v);
        cols[next_free] = std::move(v);
        filled[next_free] = true;
        order.push_back(next_free);
        advance();
    }
    if (next_free < b) {
        throw InvalidTable("unitary completion failed to span the block");
    }

    std::vector<Complex> matrix(b * b);
    for (size_t j = 0; j < b; j++) {
        for (size_t i = 0; i < b; i++) {
            matrix[i * b + j] = cols[j][i];
        }
    }
    return matrix;
}

}  // namespace

AmplitudeTable AmplitudeTable::classical(uint64_t q, std::span<const Symbol> symbols) {
    AmplitudeTable t;
    t.q = q;
    t.block_length = symbols.size();
    t.garbage_bits = 0;
    t.alpha.assign(symbols.size() * q, Complex{});
    t.phi.assign(symbols.size() * q, Complex{1.0, 0.0});
    for (size_t r = 0; r < symbols.size(); r++) {
        if (symbols[r] >= q) {
            throw InvalidArgument("classical table: symbol out of range");
        }
        t.alpha[r * q + symbols[r]] = 1.0;
    }
    return t;
}

AmplitudeTable read_amplitude_table(std::istream &in) {
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    AmplitudeTable t;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            return InvalidTable("amplitude table line " + std::to_string(line_no) + ": " + why);
        };
        auto to_u64 = [&](const std::string &s) {
            size_t used = 0;
            unsigned long long v = 0;
            try {
                if (!s.empty() && s[0] == '-') {
                    throw std::invalid_argument(s);
                }
                v = std::stoull(s, &used);
            } catch (const std::logic_error &) {
                throw fail("bad integer '" + s + "'");
            }
            if (used != s.size()) {
                throw fail("bad integer '" + s + "'");
            }
            return static_cast<uint64_t>(v);
        };
        auto to_double = [&](const std::string &s) {
            size_t used = 0;
            double v = 0;
            try {
                v = std::stod(s, &used);
            } catch (const std::logic_error &) {
                throw fail("bad number '" + s + "'");
            }
            if (used != s.size() || !std::isfinite(v)) {
                throw fail("bad number '" + s + "'");
            }
            return v;
        };
        if (!have_header) {
            if (tokens.size() != 3) {
                throw fail("header must be `q M l`");
            }
            t.q = to_u64(tokens[0]);
            t.block_length = to_u64(tokens[1]);
            t.garbage_bits = to_u64(tokens[2]);
            try {
                check_geometry(t.q, t.block_length, t.garbage_bits);
            } catch (const std::exception &e) {
                throw fail(e.what());
            }
            size_t g_dim = t.garbage_dim();
            t.alpha.assign(t.block_length * t.q, Complex{});
            t.phi.assign(t.block_length * t.q * g_dim, Complex{});
            for (size_t i = 0; i < t.block_length * t.q; i++) {
                t.phi[i * g_dim] = 1.0;
            }
            have_header = true;
            continue;
        }
        size_t g_dim = t.garbage_dim();
        if (tokens.size() != 4 && tokens.size() != 4 + 2 * g_dim) {
            throw fail("expected `r s re im` optionally followed by " + std::to_string(2 * g_dim) + " garbage reals");
        }
        uint64_t r = to_u64(tokens[0]);
        uint64_t s = to_u64(tokens[1]);
        if (r >= t.block_length || s >= t.q) {
            throw fail("index or symbol out of range");
        }
        t.alpha[r * t.q + s] = Complex(to_double(tokens[2]), to_double(tokens[3]));
        if (tokens.size() > 4) {
            for (size_t g = 0; g < g_dim; g++) {
                t.phi[(r * t.q + s) * g_dim + g] =
                    Complex(to_double(tokens[4 + 2 * g]), to_double(tokens[5 + 2 * g]));
            }
        }
    }
    if (!have_header) {
        throw InvalidTable("amplitude table is empty");
    }
    return t;
}

void write_amplitude_table(std::ostream &out, const AmplitudeTable &t) {
    auto old_precision = out.precision(17);
    size_t g_dim = t.garbage_dim();
    out << t.q << " " << t.block_length << " " << t.garbage_bits << "\n";
    for (uint64_t r = 0; r < t.block_length; r++) {
        for (uint64_t s = 0; s < t.q; s++) {
            Complex a = t.alpha[r * t.q + s];
            if (a == Complex{}) {
                continue;
            }
            out << r << " " << s << " " << a.real() << " " << a.imag();
            if (t.garbage_bits > 0) {
                for (size_t g = 0; g < g_dim; g++) {
                    Complex p = t.phi[(r * t.q + s) * g_dim + g];
                    out << " " << p.real() << " " << p.imag();
                }
            }
            out << "\n";
        }
    }
    out.precision(old_precision);
}

CorruptedCodewordOracle::CorruptedCodewordOracle(std::shared_ptr<const Data> data)
    : data_(std::move(data)), counter_(std::make_unique<std::atomic<uint64_t>>(0)) {
}

CorruptedCodewordOracle CorruptedCodewordOracle::clone() const {
    return CorruptedCodewordOracle(data_);
}

CorruptedCodewordOracle CorruptedCodewordOracle::from_symbols(uint64_t q, std::vector<Symbol> symbols,
                                                              size_t garbage_bits) {
    check_geometry(q, symbols.size(), garbage_bits);
    auto data = std::make_shared<Data>();
    data->q = q;
    data->block_length = symbols.size();
    data->garbage_bits = garbage_bits;
    data->blocks.resize(symbols.size());
    for (size_t r = 0; r < symbols.size(); r++) {
        if (symbols[r] >= q) {
            throw InvalidArgument("symbol " + std::to_string(symbols[r]) + " out of range");
        }
        data->blocks[r].shift = symbols[r];
    }
    data->table = AmplitudeTable::classical(q, symbols);
    if (garbage_bits > 0) {
        size_t g_dim = size_t{1} << garbage_bits;
        data->table.garbage_bits = garbage_bits;
        data->table.phi.assign(symbols.size() * q * g_dim, Complex{});
        for (size_t i = 0; i < symbols.size() * q; i++) {
            data->table.phi[i * g_dim] = 1.0;
        }
    }
    return CorruptedCodewordOracle(std::move(data));
}

CorruptedCodewordOracle CorruptedCodewordOracle::from_perfect(const CodeInstance &code, uint64_t x) {
    return from_symbols(code.q(), codeword(code, x));
}

CorruptedCodewordOracle CorruptedCodewordOracle::from_symmetric_noise(const CodeInstance &code, uint64_t x,
                                                                      double rho, Rng &rng) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw InvalidArgument("noise rate must lie in [0, 1]");
    }
    std::vector<Symbol> word = codeword(code, x);
    uint64_t q = code.q();
    for (Symbol &s : word) {
        if (uniform01(rng) < rho) {
            s = static_cast<Symbol>((s + 1 + uniform_below(rng, q - 1)) % q);
        }
    }
    return from_symbols(q, std::move(word));
}

CorruptedCodewordOracle CorruptedCodewordOracle::from_amplitude_table(const AmplitudeTable &table) {
    check_geometry(table.q, table.block_length, table.garbage_bits);
    uint64_t q = table.q;
    uint64_t m = table.block_length;
    size_t g_dim = table.garbage_dim();
    size_t b = q * g_dim;
    if (table.alpha.size() != m * q || table.phi.size() != m * q * g_dim) {
        throw InvalidTable("amplitude table arrays do not match q, M, l");
    }
    auto data = std::make_shared<Data>();
    data->q = q;
    data->block_length = m;
    data->garbage_bits = table.garbage_bits;
    data->table = table;
    data->blocks.resize(m);

    bool all_classical = true;
    for (uint64_t r = 0; r < m; r++) {
        double mass = 0;
        for (uint64_t s = 0; s < q; s++) {
            mass += std::norm(table.alpha[r * q + s]);
        }
        if (std::abs(mass - 1.0) > kNormTolerance) {
            throw InvalidTable("amplitude table row r=" + std::to_string(r) + " has squared norm " +
                               std::to_string(mass));
        }
        for (uint64_t s = 0; s < q; s++) {
            std::span<Complex> phi(data->table.phi.data() + (r * q + s) * g_dim, g_dim);
            if (table.alpha[r * q + s] == Complex{}) {
                std::fill(phi.begin(), phi.end(), Complex{});
                phi[0] = 1.0;
                continue;
            }
            double pn = kernels::norm2(phi);
            if (std::abs(pn - 1.0) > kNormTolerance) {
                throw InvalidTable("garbage state (r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                                   ") has squared norm " + std::to_string(pn));
            }
        }
        // Exactly classical rows keep the cheap shift form.
        Block &block = data->blocks[r];
        bool classical = false;
        for (uint64_t s = 0; s < q; s++) {
            if (table.alpha[r * q + s] == Complex{1.0, 0.0}) {
                std::span<const Complex> phi(data->table.phi.data() + (r * q + s) * g_dim, g_dim);
                classical = phi[0] == Complex{1.0, 0.0} &&
                            std::all_of(phi.begin() + 1, phi.end(), [](Complex c) { return c == Complex{}; });
                block.shift = static_cast<Symbol>(s);
            }
        }
        block.is_shift = classical;
        all_classical = all_classical && classical;
    }
    if (!all_classical) {
        check_dense_budget(m, b);
    }
    for (uint64_t r = 0; r < m; r++) {
        Block &block = data->blocks[r];
        if (block.is_shift) {
            continue;
        }
        std::vector<Complex> designated(b);
        for (uint64_t s = 0; s < q; s++) {
            Complex a = table.alpha[r * q + s];
            for (size_t g = 0; g < g_dim; g++) {
                designated[s * g_dim + g] = a * data->table.phi[(r * q + s) * g_dim + g];
            }
        }
        block.matrix = complete_block(designated, q, g_dim);
        if (unitarity_defect(block.matrix, b) > kNormTolerance) {
            throw InvalidTable("completed block r=" + std::to_string(r) + " is not unitary within 1e-9");
        }
    }
    return CorruptedCodewordOracle(std::move(data));
}

CorruptedCodewordOracle CorruptedCodewordOracle::from_predictor(const UnitaryMap &predictor, uint64_t q,
                                                                uint64_t block_length, size_t garbage_bits) {
    check_geometry(q, block_length, garbage_bits);
    size_t g_dim = size_t{1} << garbage_bits;
    size_t b = q * g_dim;
    size_t dim = block_length * b;
    if (predictor.dim() != dim) {
        throw DimensionMismatch("predictor dim " + std::to_string(predictor.dim()) + " != M*q*2^l = " +
                                std::to_string(dim));
    }
    if (dim > kMaxPredictorDim) {
        throw CapacityError("predictor dimension exceeds 2^16");
    }
    check_dense_budget(block_length, b);

    auto data = std::make_shared<Data>();
    data->q = q;
    data->block_length = block_length;
    data->garbage_bits = garbage_bits;
    data->blocks.resize(block_length);
    AmplitudeTable &t = data->table;
    t.q = q;
    t.block_length = block_length;
    t.garbage_bits = garbage_bits;
    t.alpha.assign(block_length * q, Complex{});
    t.phi.assign(block_length * q * g_dim, Complex{});

    std::vector<Complex> e(dim);
    for (uint64_t r = 0; r < block_length; r++) {
        Block &block = data->blocks[r];
        block.is_shift = false;
        block.matrix.assign(b * b, Complex{});
        for (size_t c = 0; c < b; c++) {
            e[r * b + c] = 1.0;
            std::vector<Complex> out = predictor.op().apply(e);
            e[r * b + c] = 0.0;
            double leak = 0;
            for (size_t i = 0; i < dim; i++) {
                if (i / b != r) {
                    leak += std::norm(out[i]);
                }
            }
            if (std::sqrt(leak) > kNormTolerance) {
                throw InvalidPredictor("predictor moves amplitude out of index block r=" + std::to_string(r));
            }
            for (size_t i = 0; i < b; i++) {
                block.matrix[i * b + c] = out[r * b + i];
            }
        }
        if (unitarity_defect(block.matrix, b) > kNormTolerance) {
            throw InvalidPredictor("predictor block r=" + std::to_string(r) + " is not unitary");
        }
        // Designated column |u=0, g=0> split into alpha_{r,s} |phi_{r,s}>.
        for (uint64_t s = 0; s < q; s++) {
            Complex *phi = t.phi.data() + (r * q + s) * g_dim;
            double n = 0;
            for (size_t g = 0; g < g_dim; g++) {
                phi[g] = block.matrix[(s * g_dim + g) * b];
                n += std::norm(phi[g]);
            }
            n = std::sqrt(n);
            if (n <= kOrthoTolerance) {
                std::fill(phi, phi + g_dim, Complex{});
                phi[0] = 1.0;
                continue;
            }
            if (g_dim == 1) {
                t.alpha[r * q + s] = phi[0];
                phi[0] = 1.0;
            } else {
                t.alpha[r * q + s] = n;
                for (size_t g = 0; g < g_dim; g++) {
                    phi[g] /= n;
                }
            }
        }
    }
    return CorruptedCodewordOracle(std::move(data));
}

Complex CorruptedCodewordOracle::alpha(uint64_t r, uint64_t s) const {
    if (r >= block_length() || s >= q()) {
        throw InvalidArgument("alpha: (r, s) out of range");
    }
    return data_->table.alpha[r * q() + s];
}

std::span<const Complex> CorruptedCodewordOracle::garbage_state(uint64_t r, uint64_t s) const {
    if (r >= block_length() || s >= q()) {
        throw InvalidArgument("garbage_state: (r, s) out of range");
    }
    size_t g_dim = garbage_dim();
    return {data_->table.phi.data() + (r * q() + s) * g_dim, g_dim};
}

std::optional<std::vector<Symbol>> CorruptedCodewordOracle::classical_symbols() const {
    std::vector<Symbol> out;
    out.reserve(block_length());
    for (const Block &b : data_->blocks) {
        if (!b.is_shift) {
            return std::nullopt;
        }
        out.push_back(b.shift);
    }
    return out;
}

std::vector<Complex> CorruptedCodewordOracle::block_matrix(uint64_t r) const {
    if (r >= block_length()) {
        throw InvalidArgument("block_matrix: r out of range");
    }
    const Block &block = data_->blocks[r];
    if (!block.is_shift) {
        return block.matrix;
    }
    size_t b = block_dim();
    size_t g_dim = garbage_dim();
    std::vector<Complex> m(b * b);
    for (uint64_t u = 0; u < q(); u++) {
        for (size_t g = 0; g < g_dim; g++) {
            size_t row = ((u + block.shift) % q()) * g_dim + g;
            m[row * b + u * g_dim + g] = 1.0;
        }
    }
    return m;
}

UnitaryMap CorruptedCodewordOracle::as_unitary() const {
    size_t b = block_dim();
    size_t g_dim = garbage_dim();
    std::vector<LinearOp> blocks;
    blocks.reserve(block_length());
    for (const Block &block : data_->blocks) {
        if (block.is_shift) {
            std::vector<size_t> image(b);
            for (uint64_t u = 0; u < q(); u++) {
                for (size_t g = 0; g < g_dim; g++) {
                    image[u * g_dim + g] = ((u + block.shift) % q()) * g_dim + g;
                }
            }
            blocks.push_back(LinearOp::permutation(std::move(image)));
        } else {
            blocks.push_back(LinearOp::dense(b, b, block.matrix));
        }
    }
    return UnitaryMap::trusted(LinearOp::block_diagonal(std::move(blocks)));
}

void CorruptedCodewordOracle::check_state(const StateVector &s) const {
    if (s.dim() != state_dim()) {
        throw DimensionMismatch("oracle expects a state of dim M*q*2^l = " + std::to_string(state_dim()) + ", got " +
                                std::to_string(s.dim()));
    }
}

StateVector CorruptedCodewordOracle::apply_oracle(const StateVector &s) const {
    check_state(s);
    counter_->fetch_add(1);
    size_t b = block_dim();
    size_t g_dim = garbage_dim();
    uint64_t qq = q();
    std::span<const Complex> in = s.amplitudes();
    std::vector<Complex> out(in.size());
    for (uint64_t r = 0; r < block_length(); r++) {
        const Block &block = data_->blocks[r];
        std::span<const Complex> vin = in.subspan(r * b, b);
        std::span<Complex> vout(out.data() + r * b, b);
        if (block.is_shift) {
            for (uint64_t u = 0; u < qq; u++) {
                uint64_t target = (u + block.shift) % qq;
                for (size_t g = 0; g < g_dim; g++) {
                    vout[target * g_dim + g] = vin[u * g_dim + g];
                }
            }
        } else {
            kernels::matvec(block.matrix, b, b, vin, vout);
        }
    }
    return StateVector(std::move(out), state_shape());
}

StateVector CorruptedCodewordOracle::apply_inverse(const StateVector &s) const {
    check_state(s);
    counter_->fetch_add(1);
    size_t b = block_dim();
    size_t g_dim = garbage_dim();
    uint64_t qq = q();
    std::span<const Complex> in = s.amplitudes();
    std::vector<Complex> out(in.size());
    for (uint64_t r = 0; r < block_length(); r++) {
        const Block &block = data_->blocks[r];
        std::span<const Complex> vin = in.subspan(r * b, b);
        std::span<Complex> vout(out.data() + r * b, b);
        if (block.is_shift) {
            for (uint64_t u = 0; u < qq; u++) {
                uint64_t source = (u + block.shift) % qq;
                for (size_t g = 0; g < g_dim; g++) {
                    vout[u * g_dim + g] = vin[source * g_dim + g];
                }
            }
        } else {
            kernels::matvec_adjoint(block.matrix, b, b, vin, vout);
        }
    }
    return StateVector(std::move(out), state_shape());
}

namespace {

void check_compatible(const CorruptedCodewordOracle &oracle, const CodeInstance &code) {
    if (oracle.q() != code.q() || oracle.block_length() != code.block_length()) {
        throw DimensionMismatch("oracle (q=" + std::to_string(oracle.q()) + ", M=" +
                                std::to_string(oracle.block_length()) + ") does not match code " + code.describe());
    }
}

}  // namespace

double presence(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x) {
    check_compatible(oracle, code);
    double acc = 0;
    for (uint64_t r = 0; r < code.block_length(); r++) {
        acc += std::norm(oracle.alpha(r, code.eval(x, r)));
    }
    return acc / static_cast<double>(code.block_length());
}

double presence_via_vector(const CorruptedCodewordOracle &oracle, const CodeInstance &code, uint64_t x) {
    check_compatible(oracle, code);
    uint64_t q = code.q();
    uint64_t m = code.block_length();
    std::vector<double> v(q * m);
    std::vector<double> c(q * m, 0.0);
    for (uint64_t r = 0; r < m; r++) {
        for (uint64_t s = 0; s < q; s++) {
            v[r * q + s] = std::norm(oracle.alpha(r, s));
        }
        c[r * q + code.eval(x, r)] = 1.0;
    }
    return std::inner_product(v.begin(), v.end(), c.begin(), 0.0) / static_cast<double>(m);
}

AmplitudeTable uniform_amplitude_table(uint64_t q, uint64_t block_length) {
    check_geometry(q, block_length, 0);
    AmplitudeTable t;
    t.q = q;
    t.block_length = block_length;
    t.garbage_bits = 0;
    t.alpha.assign(block_length * q, Complex(1.0 / std::sqrt(static_cast<double>(q)), 0.0));
    t.phi.assign(block_length * q, Complex(1.0, 0.0));
    return t;
}

UnitaryMap noisy_predictor(const CodeInstance &code, uint64_t x, double rho, Rng &rng) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw InvalidArgument("noise rate must lie in [0, 1]");
    }
    uint64_t q = code.q();
    uint64_t m = code.block_length();
    std::vector<uint64_t> perm(m);
    std::iota(perm.begin(), perm.end(), uint64_t{0});
    for (uint64_t i = m; i > 1; i--) {
        std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    }
    double base = 1.0 - rho;
    double half_spread = std::min(rho, 1.0 - rho) / 2.0;
    std::vector<double> p(m, base);
    for (uint64_t i = 0; i + 1 < m; i += 2) {
        p[perm[i]] = base + half_spread;
        p[perm[i + 1]] = base - half_spread;
    }
    AmplitudeTable t;
    t.q = q;
    t.block_length = m;
    t.garbage_bits = 0;
    t.alpha.assign(m * q, Complex{});
    t.phi.assign(m * q, Complex(1.0, 0.0));
    for (uint64_t r = 0; r < m; r++) {
        Symbol c = code.eval(x, r);
        double wrong = std::sqrt(std::max(0.0, 1.0 - p[r]) / static_cast<double>(q - 1));
        for (uint64_t s = 0; s < q; s++) {
            t.alpha[r * q + s] = s == c ? std::sqrt(p[r]) : wrong;
        }
    }
    return CorruptedCodewordOracle::from_amplitude_table(t).as_unitary();
}

UnitaryMap uniform_predictor(uint64_t q, uint64_t block_length) {
    check_geometry(q, block_length, 0);
    return UnitaryMap::trusted(LinearOp::tensor({LinearOp::identity(block_length), qft(q).op()}));
}

}  // namespace qld
