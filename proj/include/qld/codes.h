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

#ifndef QLD_CODES_H
#define QLD_CODES_H

#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qld {

using Symbol = uint32_t;

enum class CodeFamily {
    hadamard,           // q-ary Hadamard, M = N = q^n
    pairwise_equality,  // PEQ, q = 2, M = N = 2^n
    shifted_legendre,   // SLS^p, q = 2, M = N = p
    negated_legendre,   // C_i(j) = SLS^p_{-i}(j); the circulant form of SLS^p
    table,              // explicit codeword list
};

std::string to_string(CodeFamily family);

/// Digit decomposition of a label, least-significant digit first.
std::vector<Symbol> to_digits(uint64_t label, uint64_t base, size_t length);
uint64_t from_digits(std::span<const Symbol> digits, uint64_t base);

/// sum_i x_i r_i mod q over digit vectors of equal length.
Symbol had_eval(std::span<const Symbol> x, std::span<const Symbol> r, uint64_t q);

/// XOR over the n/2 disjoint bit pairs (2i, 2i+1) of EQ(x pair, r pair).
/// Bit i of a label is (label >> i) & 1.
Symbol peq_eval(uint64_t x, uint64_t r, size_t n);

/// 1 iff (x + r / p) = -1.
Symbol sls_eval(int64_t x, int64_t r, uint64_t p);

/// An (M, n)_q block code: N messages, each mapped to a length-M word over [0, q).
///
/// Instances are immutable; share them through std::shared_ptr<const CodeInstance>
/// when several components need the same code.
class CodeInstance {
   public:
    static CodeInstance hadamard(uint64_t q, size_t n);
    static CodeInstance pairwise_equality(size_t n);
    static CodeInstance shifted_legendre(uint64_t p);
    static CodeInstance negated_legendre(uint64_t p);
    /// q must be prime; every codeword must have the same nonzero length.
    static CodeInstance from_table(uint64_t q, std::vector<std::vector<Symbol>> codewords);
    /// One codeword per line, whitespace-separated symbols; '#' starts a comment.
    static CodeInstance read_table(std::istream &in, uint64_t q);

    CodeFamily family() const {
        return family_;
    }
    uint64_t q() const {
        return q_;
    }
    size_t n() const {
        return n_;
    }
    /// Block length M = |I_n|.
    uint64_t block_length() const {
        return block_length_;
    }
    /// Message count N = |Sigma_n|.
    uint64_t message_count() const {
        return message_count_;
    }

    /// C_x(r). Throws InvalidArgument when x or r is out of range.
    Symbol eval(uint64_t x, uint64_t r) const;

    /// Textual form, e.g. "had(q=3,n=2)".
    std::string describe() const;

   private:
    CodeInstance() = default;

    CodeFamily family_ = CodeFamily::table;
    uint64_t q_ = 2;
    size_t n_ = 0;
    uint64_t block_length_ = 0;
    uint64_t message_count_ = 0;
    std::shared_ptr<const std::vector<std::vector<Symbol>>> table_;
};

using CodePtr = std::shared_ptr<const CodeInstance>;

/// Materializes C_x as a length-M symbol vector.
std::vector<Symbol> codeword(const CodeInstance &code, uint64_t x);

size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b);
double relative_distance(std::span<const Symbol> a, std::span<const Symbol> b);

/// Brute-force minimum distance; M for a single-message code. Needs N <= 2^16.
uint64_t min_distance(const CodeInstance &code);

/// True iff entry (i, j) of the N x M evaluation matrix equals entry (0, j - i mod M).
bool is_circulant(const CodeInstance &code);

}  // namespace qld

#endif
