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

#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "qld/errors.h"
#include "reference.h"

namespace qld {
namespace {

std::vector<Complex> random_unit(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(n);
    double s = 0;
    for (Complex &c : v) {
        c = {g(rng), g(rng)};
        s += std::norm(c);
    }
    for (Complex &c : v) {
        c /= std::sqrt(s);
    }
    return v;
}

std::vector<Complex> random_matrix(size_t r, size_t c, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(r * c);
    for (Complex &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

TEST(StateVector, NormCheck) {
    EXPECT_THROW(StateVector({1.0, 1.0}), InvalidArgument);
    EXPECT_NO_THROW(StateVector({1.0, 0.0}));
    StateVector n = StateVector::normalized({3.0, 4.0});
    EXPECT_NEAR(n[0].real(), 0.6, 1e-15);
    EXPECT_THROW(StateVector::normalized({0.0, 0.0}), InvalidArgument);
    EXPECT_THROW(StateVector({1.0, 0.0, 0.0}, {2, 2}), DimensionMismatch);
}

TEST(StateVector, FlatIndex) {
    StateVector s = StateVector::basis(24, 0, {2, 3, 4});
    std::vector<size_t> d{1, 2, 3};
    EXPECT_EQ(s.flat_index(d), 1u * 12 + 2 * 4 + 3);
}

TEST(Qft, Examples) {
    std::vector<Complex> f2 = qft(2).op().to_dense();
    double h = 1 / std::sqrt(2.0);
    EXPECT_LE(ref::max_abs_diff(f2, {h, h, h, -h}), 1e-15);
    std::vector<Complex> f4 = qft(4).op().to_dense();
    std::vector<Complex> col{f4[0 * 4 + 1], f4[1 * 4 + 1], f4[2 * 4 + 1], f4[3 * 4 + 1]};
    EXPECT_LE(ref::max_abs_diff(col, {0.5, Complex(0, 0.5), -0.5, Complex(0, -0.5)}), 1e-15);
}

TEST(Qft, UnitaryUpTo2048) {
    for (size_t m : {2, 3, 5, 7, 16, 101, 256, 1024, 2048}) {
        std::vector<Complex> f = qft(m).op().to_dense();
        EXPECT_LT(unitarity_defect(f, m), 1e-12) << m;
        if (m <= 128) {
            EXPECT_LE(ref::max_abs_diff(f, ref::dft(m)), 1e-13);
        }
    }
}

TEST(Apply, Examples) {
    std::mt19937_64 rng(1);
    StateVector s(random_unit(4, rng));
    StateVector out = apply(UnitaryMap(LinearOp::identity(4)), s);
    EXPECT_LE(ref::max_abs_diff(std::vector<Complex>(out.amplitudes().begin(), out.amplitudes().end()),
                                std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end())),
              0);
    StateVector plus = apply(qft(2), StateVector::basis(2, 0));
    EXPECT_NEAR(plus[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(plus[1].real(), 1 / std::sqrt(2.0), 1e-15);
    StateVector t(random_unit(2, rng));
    StateVector tt = apply(qft(2), apply(qft(2).adjoint(), t));
    EXPECT_LT(std::abs(tt[0] - t[0]) + std::abs(tt[1] - t[1]), 1e-12);
    EXPECT_THROW(apply(qft(3), t), DimensionMismatch);
}

TEST(LinearOp, StructuredFormsMatchDense) {
    std::mt19937_64 rng(7);
    LinearOp a = LinearOp::dense(3, 3, random_matrix(3, 3, rng));
    LinearOp b = LinearOp::dense(2, 2, random_matrix(2, 2, rng));
    LinearOp d = LinearOp::diagonal(random_unit(6, rng));
    LinearOp p = LinearOp::permutation({2, 0, 1, 5, 3, 4});
    std::vector<Complex> da = a.to_dense();
    std::vector<Complex> db = b.to_dense();

    // Kronecker product by definition.
    std::vector<Complex> kron(36);
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    kron[(i * 2 + k) * 6 + j * 2 + l] = da[i * 3 + j] * db[k * 2 + l];
                }
            }
        }
    }
    LinearOp t = LinearOp::tensor({a, b});
    EXPECT_LE(ref::max_abs_diff(t.to_dense(), kron), 1e-12);

    std::vector<Complex> x = random_unit(6, rng);
    EXPECT_LE(ref::max_abs_diff(t.apply(x), ref::matvec(kron, x, 6)), 1e-12);

    // sequence: ops[0] first.
    LinearOp seq = LinearOp::sequence({t, d, p});
    std::vector<Complex> expect = ref::matmul(p.to_dense(), ref::matmul(d.to_dense(), kron, 6), 6);
    EXPECT_LE(ref::max_abs_diff(seq.to_dense(), expect), 1e-12);
    EXPECT_LE(ref::max_abs_diff(seq.adjoint().to_dense(), ref::adjoint(expect, 6)), 1e-12);

    // permutation semantics |i> -> |image[i]>.
    std::vector<Complex> e1(6);
    e1[1] = 1;
    std::vector<Complex> moved = p.apply(e1);
    EXPECT_EQ(moved[0], Complex(1));

    LinearOp bd = LinearOp::block_diagonal({a, b});
    std::vector<Complex> dbd = bd.to_dense();
    EXPECT_EQ(bd.rows(), 5u);
    EXPECT_EQ(dbd[0 * 5 + 3], Complex(0));
    EXPECT_EQ(dbd[3 * 5 + 4], db[1]);
    EXPECT_EQ(dbd[1 * 5 + 2], da[1 * 3 + 2]);
}

TEST(LinearOp, RectangularDense) {
    std::mt19937_64 rng(8);
    std::vector<Complex> m = random_matrix(2, 4, rng);
    LinearOp op = LinearOp::dense(2, 4, m);
    std::vector<Complex> x = random_unit(4, rng);
    EXPECT_LE(ref::max_abs_diff(op.apply(x), ref::matvec(m, x, 2)), 1e-12);
    EXPECT_EQ(op.adjoint().rows(), 4u);
    EXPECT_THROW(op.apply(std::vector<Complex>(3)), DimensionMismatch);
    EXPECT_FALSE(op.is_unitary());
}

TEST(LinearOp, Validation) {
    EXPECT_THROW(LinearOp::permutation({0, 0}), InvalidArgument);
    EXPECT_THROW(LinearOp::dense(2, 2, std::vector<Complex>(3)), DimensionMismatch);
    EXPECT_THROW(LinearOp::dense(4096, 1, std::vector<Complex>(4096)), CapacityError);
    EXPECT_THROW(UnitaryMap(LinearOp::diagonal({1.0, 0.5})), InvalidArgument);
    EXPECT_TRUE(LinearOp::tensor({qft(3).op(), qft(5).op()}).is_unitary(1e-12));
}

TEST(Measure, BasisIsDeterministic) {
    Rng rng = make_rng(1, 0, 0);
    StateVector s = StateVector::basis(8, 5);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(measure(s, rng), 5u);
    }
}

TEST(Measure, BornRuleChiSquared) {
    Rng rng = make_rng(2024, 0, 0);
    std::vector<Complex> amps{Complex(0.5, 0), Complex(0, 0.5), Complex(0.3, 0.4), Complex(0, 0)};
    // Uniform dim-4 case from the examples plus a skewed one.
    for (int variant = 0; variant < 2; variant++) {
        StateVector s = variant == 0 ? StateVector::uniform(4) : StateVector::normalized(amps);
        const int trials = 10000;
        std::vector<double> counts(4);
        for (int i = 0; i < trials; i++) {
            counts[measure(s, rng)]++;
        }
        double chi = 0;
        int dof = -1;
        for (size_t i = 0; i < 4; i++) {
            double e = std::norm(s[i]) * trials;
            if (e > 0) {
                chi += (counts[i] - e) * (counts[i] - e) / e;
                dof++;
            } else {
                EXPECT_EQ(counts[i], 0);
            }
        }
        boost::math::chi_squared dist(dof);
        EXPECT_LT(chi, boost::math::quantile(dist, 1 - 1e-6));
        if (variant == 0) {
            for (double c : counts) {
                double sd = std::sqrt(trials * 0.25 * 0.75);
                EXPECT_LT(std::abs(c - trials * 0.25), 5 * sd);
            }
        }
    }
}

TEST(Measure, SeedDeterminism) {
    std::mt19937_64 g(3);
    StateVector s(random_unit(16, g));
    Rng a = make_rng(77, 3, 1);
    Rng b = make_rng(77, 3, 1);
    for (int i = 0; i < 200; i++) {
        EXPECT_EQ(measure(s, a), measure(s, b));
    }
}

TEST(SampleOutcome, ResidualAndOvershoot) {
    Rng rng = make_rng(5, 0, 0);
    std::vector<double> none{0.0, 0.0};
    EXPECT_FALSE(sample_outcome(none, rng).has_value());
    std::vector<double> over{0.7, 0.7};
    EXPECT_THROW(sample_outcome(over, rng), InvalidArgument);
    std::vector<double> half{0.5, 0.0};
    int rejected = 0;
    for (int i = 0; i < 4000; i++) {
        auto o = sample_outcome(half, rng);
        if (!o) {
            rejected++;
        } else {
            EXPECT_EQ(*o, 0u);
        }
    }
    EXPECT_NEAR(rejected / 4000.0, 0.5, 5 * std::sqrt(0.25 / 4000));
}

TEST(Fidelity, Examples) {
    std::mt19937_64 g(4);
    StateVector s(random_unit(5, g));
    EXPECT_NEAR(fidelity(s, s), 1, 1e-12);
    EXPECT_NEAR(fidelity(StateVector::basis(3, 0), StateVector::basis(3, 2)), 0, 0);
    EXPECT_NEAR(trace_distance(StateVector::basis(3, 0), StateVector::basis(3, 2)), 2, 1e-15);
    EXPECT_NEAR(trace_distance(s, s), 0, 1e-5);
}

TEST(CodewordState, Examples) {
    CodeInstance h = CodeInstance::hadamard(2, 1);
    double r = 1 / std::sqrt(2.0);
    StateVector s0 = codeword_state(h, 0, 1);
    StateVector s1 = codeword_state(h, 1, 1);
    EXPECT_NEAR(std::abs(s0[0] - r) + std::abs(s0[1] - r), 0, 1e-15);
    EXPECT_NEAR(std::abs(s1[0] - r) + std::abs(s1[1] + r), 0, 1e-15);
    EXPECT_THROW(codeword_state(h, 0, 0), InvalidArgument);
    EXPECT_THROW(codeword_state(h, 0, 2), InvalidArgument);
}

TEST(CodewordState, MatchesReference) {
    CodeInstance c = CodeInstance::hadamard(5, 2);
    for (uint64_t x = 0; x < c.message_count(); x += 3) {
        for (uint64_t k = 1; k < 5; k++) {
            StateVector s = codeword_state(c, x, k);
            std::vector<uint64_t> w;
            for (Symbol v : codeword(c, x)) {
                w.push_back(v);
            }
            std::vector<Complex> expect = ref::phase_state(w, 5, k);
            EXPECT_LE(ref::max_abs_diff(std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()), expect),
                      1e-13);
        }
    }
}

TEST(Overlap, HadamardIsPhaseOrthogonal) {
    CodeInstance c = CodeInstance::hadamard(2, 2);
    for (uint64_t x = 0; x < 4; x++) {
        for (uint64_t y = 0; y < 4; y++) {
            EXPECT_NEAR(pairwise_overlap(c, x, y, 1), x == y ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(Overlap, BinarySignedOverlapIsOneMinusTwoDelta) {
    // Delta = 1/2 gives overlap 0; Delta = 3/4 gives -1/2 with modulus 1/2.
    CodeInstance c = CodeInstance::from_table(2, {{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}});
    EXPECT_NEAR(std::abs(signed_overlap(c, 0, 1, 1)), 0, 1e-15);
    EXPECT_NEAR(signed_overlap(c, 0, 2, 1).real(), -0.5, 1e-15);
    EXPECT_NEAR(pairwise_overlap(c, 0, 2, 1), 0.5, 1e-15);
}

}  // namespace
}  // namespace qld
