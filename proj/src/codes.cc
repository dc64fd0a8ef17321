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

#include "qld/codes.h"

#include <algorithm>
#include <sstream>

#include "qld/errors.h"
#include "qld/field.h"

namespace qld {

namespace {

constexpr uint64_t kMaxMinDistanceMessages = uint64_t{1} << 16;
// N^2 M / 2 symbol comparisons; keeps min_distance under a few seconds.
constexpr uint64_t kMaxMinDistanceWork = uint64_t{1} << 34;
constexpr uint64_t kMaxLabelSpace = uint64_t{1} << 32;

uint64_t checked_power(uint64_t base, size_t exponent) {
    uint64_t result = 1;
    for (size_t i = 0; i < exponent; i++) {
        if (result > kMaxLabelSpace / base) {
            throw CapacityError("code label space " + std::to_string(base) + "^" + std::to_string(exponent) +
                                " exceeds 2^32");
        }
        result *= base;
    }
    return result;
}

}  // namespace

std::string to_string(CodeFamily family) {
    switch (family) {
        case CodeFamily::hadamard:
            return "had";
        case CodeFamily::pairwise_equality:
            return "peq";
        case CodeFamily::shifted_legendre:
            return "sls";
        case CodeFamily::negated_legendre:
            return "sls-negated";
        case CodeFamily::table:
            return "table";
    }
    return "unknown";
}

std::vector<Symbol> to_digits(uint64_t label, uint64_t base, size_t length) {
    if (base < 2) {
        throw InvalidArgument("digit base must be >= 2");
    }
    std::vector<Symbol> digits(length);
    for (size_t i = 0; i < length; i++) {
        digits[i] = static_cast<Symbol>(label % base);
        label /= base;
    }
    if (label != 0) {
        throw InvalidArgument("label does not fit in the requested number of digits");
    }
    return digits;
}

uint64_t from_digits(std::span<const Symbol> digits, uint64_t base) {
    uint64_t label = 0;
    for (size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= base) {
            throw InvalidArgument("digit out of range for base " + std::to_string(base));
        }
        label = label * base + digits[i];
    }
    return label;
}

Symbol had_eval(std::span<const Symbol> x, std::span<const Symbol> r, uint64_t q) {
    if (x.size() != r.size()) {
        throw DimensionMismatch("had_eval: message has " + std::to_string(x.size()) + " digits, index has " +
                                std::to_string(r.size()));
    }
    uint64_t acc = 0;
    for (size_t i = 0; i < x.size(); i++) {
        acc = (acc + static_cast<uint64_t>(x[i] % q) * (r[i] % q)) % q;
    }
    return static_cast<Symbol>(acc);
}

Symbol peq_eval(uint64_t x, uint64_t r, size_t n) {
    if (n % 2 != 0) {
        throw InvalidArgument("peq_eval: n must be even, got " + std::to_string(n));
    }
    if (n > 62) {
        throw CapacityError("peq_eval: n > 62 not supported");
    }
    Symbol acc = 0;
    for (size_t i = 0; i < n / 2; i++) {
        uint64_t xp = (x >> (2 * i)) & 3;
        uint64_t rp = (r >> (2 * i)) & 3;
        acc ^= (xp == rp) ? 1 : 0;
    }
    return acc;
}

Symbol sls_eval(int64_t x, int64_t r, uint64_t p) {
    return legendre(x + r, p) == -1 ? 1 : 0;
}

CodeInstance CodeInstance::hadamard(uint64_t q, size_t n) {
    PrimeModulus modulus(q);
    if (n == 0) {
        throw InvalidArgument("hadamard: n must be >= 1");
    }
    CodeInstance c;
    c.family_ = CodeFamily::hadamard;
    c.q_ = modulus.value();
    c.n_ = n;
    c.block_length_ = checked_power(q, n);
    c.message_count_ = c.block_length_;
    return c;
}

CodeInstance CodeInstance::pairwise_equality(size_t n) {
    if (n == 0 || n % 2 != 0) {
        throw InvalidArgument("pairwise_equality: n must be even and >= 2, got " + std::to_string(n));
    }
    CodeInstance c;
    c.family_ = CodeFamily::pairwise_equality;
    c.q_ = 2;
    c.n_ = n;
    c.block_length_ = checked_power(2, n);
    c.message_count_ = c.block_length_;
    return c;
}

CodeInstance CodeInstance::shifted_legendre(uint64_t p) {
    PrimeModulus modulus(p);
    if (!modulus.is_odd()) {
        throw InvalidModulus("shifted Legendre code needs an odd prime");
    }
    CodeInstance c;
    c.family_ = CodeFamily::shifted_legendre;
    c.q_ = 2;
    // n = ceil(log2 p).
    size_t bits = 0;
    while ((uint64_t{1} << bits) < p) {
        bits++;
    }
    c.n_ = bits;
    c.block_length_ = p;
    c.message_count_ = p;
    return c;
}

CodeInstance CodeInstance::negated_legendre(uint64_t p) {
    CodeInstance c = shifted_legendre(p);
    c.family_ = CodeFamily::negated_legendre;
    return c;
}

CodeInstance CodeInstance::from_table(uint64_t q, std::vector<std::vector<Symbol>> codewords) {
    PrimeModulus modulus(q);
    if (codewords.empty()) {
        throw InvalidArgument("table code needs at least one codeword");
    }
    size_t m = codewords.front().size();
    if (m == 0) {
        throw InvalidArgument("table code codewords must be nonempty");
    }
    for (size_t x = 0; x < codewords.size(); x++) {
        if (codewords[x].size() != m) {
            throw DimensionMismatch("table code: codeword " + std::to_string(x) + " has length " +
                                    std::to_string(codewords[x].size()) + ", expected " + std::to_string(m));
        }
        for (Symbol s : codewords[x]) {
            if (s >= q) {
                throw InvalidArgument("table code: symbol " + std::to_string(s) + " outside [0, " +
                                      std::to_string(q) + ")");
            }
        }
    }
    CodeInstance c;
    c.family_ = CodeFamily::table;
    c.q_ = modulus.value();
    c.n_ = 0;
    c.block_length_ = m;
    c.message_count_ = codewords.size();
    c.table_ = std::make_shared<const std::vector<std::vector<Symbol>>>(std::move(codewords));
    return c;
}

CodeInstance CodeInstance::read_table(std::istream &in, uint64_t q) {
    std::vector<std::vector<Symbol>> rows;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::vector<Symbol> row;
        std::string token;
        while (ss >> token) {
            try {
                size_t used = 0;
                long long v = std::stoll(token, &used);
                if (used != token.size() || v < 0) {
                    throw std::invalid_argument(token);
                }
                row.push_back(static_cast<Symbol>(v));
            } catch (const std::logic_error &) {
                throw InvalidTable("table code line " + std::to_string(line_no) + ": bad symbol '" + token + "'");
            }
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    return from_table(q, std::move(rows));
}

Symbol CodeInstance::eval(uint64_t x, uint64_t r) const {
    if (x >= message_count_) {
        throw InvalidArgument("message " + std::to_string(x) + " out of range [0, " + std::to_string(message_count_) +
                              ")");
    }
    if (r >= block_length_) {
        throw InvalidArgument("index " + std::to_string(r) + " out of range [0, " + std::to_string(block_length_) +
                              ")");
    }
    switch (family_) {
        case CodeFamily::hadamard: {
            uint64_t acc = 0;
            for (size_t i = 0; i < n_; i++) {
                acc += (x % q_) * (r % q_);
                x /= q_;
                r /= q_;
            }
            return static_cast<Symbol>(acc % q_);
        }
        case CodeFamily::pairwise_equality:
            return peq_eval(x, r, n_);
        case CodeFamily::shifted_legendre:
            return sls_eval(static_cast<int64_t>(x), static_cast<int64_t>(r), block_length_);
        case CodeFamily::negated_legendre:
            return sls_eval(-static_cast<int64_t>(x), static_cast<int64_t>(r), block_length_);
        case CodeFamily::table:
            return (*table_)[x][r];
    }
    return 0;
}

std::string CodeInstance::describe() const {
    std::ostringstream out;
    switch (family_) {
        case CodeFamily::hadamard:
            out << "had(q=" << q_ << ",n=" << n_ << ")";
            break;
        case CodeFamily::pairwise_equality:
            out << "peq(n=" << n_ << ")";
            break;
        case CodeFamily::shifted_legendre:
            out << "sls(p=" << block_length_ << ")";
            break;
        case CodeFamily::negated_legendre:
            out << "sls-negated(p=" << block_length_ << ")";
            break;
        case CodeFamily::table:
            out << "table(q=" << q_ << ",M=" << block_length_ << ",N=" << message_count_ << ")";
            break;
    }
    return out.str();
}

std::vector<Symbol> codeword(const CodeInstance &code, uint64_t x) {
    if (x >= code.message_count()) {
        throw InvalidArgument("codeword: message " + std::to_string(x) + " out of range");
    }
    std::vector<Symbol> word(code.block_length());
    for (uint64_t r = 0; r < word.size(); r++) {
        word[r] = code.eval(x, r);
    }
    return word;
}

size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("hamming_distance: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    size_t d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d += a[i] != b[i];
    }
    return d;
}

double relative_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.empty()) {
        throw InvalidArgument("relative_distance of empty words");
    }
    return static_cast<double>(hamming_distance(a, b)) / static_cast<double>(a.size());
}

uint64_t min_distance(const CodeInstance &code) {
    uint64_t n = code.message_count();
    uint64_t m = code.block_length();
    if (n > kMaxMinDistanceMessages) {
        throw CapacityError("min_distance: " + std::to_string(n) + " messages exceeds the brute-force limit 2^16");
    }
    if (n > 1 && (n * (n - 1) / 2) > kMaxMinDistanceWork / m) {
        throw CapacityError("min_distance: N^2 M work too large for brute force");
    }
    if (n == 1) {
        return m;
    }
    std::vector<std::vector<Symbol>> words;
    words.reserve(n);
    for (uint64_t x = 0; x < n; x++) {
        words.push_back(codeword(code, x));
    }
    uint64_t best = m;
    for (uint64_t x = 0; x < n && best > 0; x++) {
        for (uint64_t y = x + 1; y < n; y++) {
            best = std::min<uint64_t>(best, hamming_distance(words[x], words[y]));
        }
    }
    return best;
}

bool is_circulant(const CodeInstance &code) {
    uint64_t m = code.block_length();
    if (m != code.message_count()) {
        throw InvalidArgument("is_circulant: needs M = N, got M=" + std::to_string(m) +
                              " N=" + std::to_string(code.message_count()));
    }
    std::vector<Symbol> first = codeword(code, 0);
    for (uint64_t i = 1; i < m; i++) {
        for (uint64_t j = 0; j < m; j++) {
            if (code.eval(i, j) != first[(j + m - i) % m]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qld
