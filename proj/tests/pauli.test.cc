// Copyright 2026 The qemlab Authors
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

#include "qemlab/pauli.h"

#include <random>

#include "gtest/gtest.h"
#include "oracle.h"

using namespace qemlab;

namespace {

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> letter(0, 3);
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_letter(q, static_cast<PauliLetter>(letter(rng)));
    }
    if (rng() & 1) {
        p.negate();
    }
    return p;
}

GateOp random_gate(size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<uint32_t> qubit(0, static_cast<uint32_t>(n - 1));
    uint32_t a = qubit(rng);
    uint32_t b = qubit(rng);
    while (n > 1 && b == a) {
        b = qubit(rng);
    }
    switch (rng() % 3) {
        case 0:
            if (n > 1) {
                return GateOp::cnot(a, b);
            }
            [[fallthrough]];
        case 1:
            return GateOp::single(static_cast<PauliLetter>(1 + rng() % 3), a);
        default:
            if (n > 1) {
                auto letters = random_pauli(2, rng);
                return GateOp::pauli_gate(letters, {a, b});
            }
            return GateOp::single(PauliLetter::Y, a);
    }
}

oracle::Matrix gate_matrix(size_t n, const GateOp &gate) {
    if (gate.kind == GateKind::CNOT) {
        return oracle::cnot(n, gate.qubits[0], gate.qubits[1]);
    }
    std::string text(n, 'I');
    for (size_t i = 0; i < gate.qubits.size(); i++) {
        text[gate.qubits[i]] = letter_char(gate.pauli.letter(i));
    }
    return oracle::pauli(text);
}

}  // namespace

TEST(pauli_string, text_round_trip_and_weight) {
    auto p = PauliString::from_text("-XIYZ");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.letter(2), PauliLetter::Y);
    EXPECT_EQ(p.str(), "-XIYZ");
    EXPECT_EQ(PauliString::from_text("ZZ").str(), "+ZZ");
    EXPECT_THROW(PauliString::from_text("XQ"), std::invalid_argument);
    EXPECT_TRUE(PauliString(5).is_identity());
    EXPECT_EQ(PauliString(5).weight(), 0u);
}

TEST(pauli_string, rank_is_lexicographic_with_qubit0_most_significant) {
    EXPECT_EQ(PauliString::from_text("I").index(), 0u);
    EXPECT_EQ(PauliString::from_text("X").index(), 1u);
    EXPECT_EQ(PauliString::from_text("Y").index(), 2u);
    EXPECT_EQ(PauliString::from_text("Z").index(), 3u);
    EXPECT_EQ(PauliString::from_text("XI").index(), 4u);
    EXPECT_EQ(PauliString::from_text("IX").index(), 1u);
    EXPECT_EQ(PauliString::from_text("ZZ").index(), 15u);
    for (uint64_t i = 0; i < 64; i++) {
        EXPECT_EQ(PauliString::from_index(3, i).index(), i);
    }
}

TEST(pauli_string, wide_registers_span_words) {
    PauliString p(130);
    p.set_letter(0, PauliLetter::X);
    p.set_letter(64, PauliLetter::Y);
    p.set_letter(129, PauliLetter::Z);
    EXPECT_EQ(p.weight(), 3u);
    PauliString q(130);
    q.set_letter(129, PauliLetter::X);
    EXPECT_FALSE(p.commutes_with(q));
    EXPECT_THROW(p.x(130), std::out_of_range);
}

TEST(conjugate, x_flips_z) {
    auto r = conjugate(PauliString::from_text("Z"), GateOp::single(PauliLetter::X, 0));
    EXPECT_EQ(r.str(), "-Z");
}

TEST(conjugate, cnot_maps_zz_to_iz) {
    // The dense oracle gives the reference value.
    oracle::Matrix g = oracle::cnot(2, 0, 1);
    EXPECT_EQ(oracle::identify_pauli(g.adjoint() * oracle::pauli("ZZ") * g, 2), "+IZ");
    EXPECT_EQ(conjugate(PauliString::from_text("ZZ"), GateOp::cnot(0, 1)).str(), "+IZ");
}

TEST(conjugate, identity_is_fixed) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; i++) {
        auto g = random_gate(3, rng);
        EXPECT_EQ(conjugate(PauliString(3), g).str(), "+III");
    }
}

TEST(conjugate, rejects_out_of_range_gates) {
    EXPECT_THROW(conjugate(PauliString(2), GateOp::cnot(0, 2)), std::out_of_range);
    EXPECT_THROW(conjugate(PauliString(2), GateOp::single(PauliLetter::X, 5)), std::out_of_range);
    EXPECT_THROW(conjugate(PauliString(2), GateOp::cnot(1, 1)), std::invalid_argument);
}

TEST(conjugate, matches_dense_matrix_conjugation) {
    std::mt19937_64 rng(2024);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 300; trial++) {
            auto p = random_pauli(n, rng);
            auto g = random_gate(n, rng);
            oracle::Matrix u = gate_matrix(n, g);
            oracle::Matrix expected = u.adjoint() * oracle::pauli(p.str()) * u;
            EXPECT_EQ(conjugate(p, g).str(), oracle::identify_pauli(expected, n)) << p.str() << " by " << g.str();
        }
    }
}

TEST(conjugate, self_inverse_round_trip) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 6;
        auto p = random_pauli(n, rng);
        auto g = random_gate(n, rng);
        auto once = conjugate(p, g);
        EXPECT_EQ(conjugate(once, g), p);
        EXPECT_TRUE(once.sign() == 1 || once.sign() == -1);
    }
}

TEST(compose, group_law_examples) {
    EXPECT_EQ(compose(PauliString::from_text("X"), PauliString::from_text("X")).str(), "+I");
    EXPECT_EQ(compose(PauliString::from_text("XI"), PauliString::from_text("IZ")).str(), "+XZ");
    auto xz = compose(PauliString::from_text("X"), PauliString::from_text("Z"));
    EXPECT_EQ(xz.letter(0), PauliLetter::Y);
    auto back = compose(xz, PauliString::from_text("Z"));
    EXPECT_EQ(back.letter(0), PauliLetter::X);
    EXPECT_THROW(compose(PauliString(1), PauliString(2)), std::invalid_argument);
}

TEST(compose, matches_dense_product) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; trial++) {
        size_t n = 1 + rng() % 3;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        auto c = compose(a, b);
        oracle::Matrix product = oracle::pauli(a.str()) * oracle::pauli(b.str());
        if (a.commutes_with(b)) {
            EXPECT_EQ(c.str(), oracle::identify_pauli(product, n));
        } else {
            // a*b = i * c under the folded-phase convention.
            EXPECT_LT((product - oracle::Complex(0, 1) * oracle::pauli(c.str())).norm(), 1e-9);
        }
        // Self-composition is the identity with sign +1.
        auto sq = compose(a, a);
        EXPECT_TRUE(sq.is_identity());
        EXPECT_EQ(sq.sign(), 1);
        // Undoing b recovers a up to sign, exactly when they commute.
        auto undo = compose(c, b);
        auto unsigned_a = a;
        unsigned_a.set_sign(1);
        auto unsigned_undo = undo;
        unsigned_undo.set_sign(1);
        EXPECT_EQ(unsigned_undo, unsigned_a);
        if (a.commutes_with(b)) {
            EXPECT_EQ(undo, a);
        }
    }
}

TEST(restrict, follows_index_list) {
    auto p = PauliString::from_text("ZIZ");
    std::vector<uint32_t> q01{0, 1}, q1{1};
    EXPECT_EQ(restrict(p, q01).str(), "+ZI");
    EXPECT_EQ(restrict(p, q1).str(), "+I");
    std::vector<uint32_t> rev{1, 0};
    EXPECT_EQ(restrict(PauliString::from_text("-YX"), rev).str(), "+XY");
    EXPECT_EQ(restricted_index(PauliString::from_text("YX"), rev), PauliString::from_text("XY").index());
    std::vector<uint32_t> bad{3};
    EXPECT_THROW(restrict(p, bad), std::out_of_range);
}

TEST(commutation_sign, agrees_with_string_commutation) {
    for (uint64_t a = 0; a < 16; a++) {
        for (uint64_t b = 0; b < 16; b++) {
            bool commute = PauliString::from_index(2, a).commutes_with(PauliString::from_index(2, b));
            EXPECT_EQ(commutation_sign(2, a, b), commute ? 1 : -1);
        }
    }
}

TEST(gate_op, validation) {
    EXPECT_NO_THROW(GateOp::cnot(0, 1).validate(2));
    EXPECT_THROW(GateOp::cnot(0, 0).validate(2), std::invalid_argument);
    EXPECT_THROW(GateOp::cnot(0, 3).validate(2), std::out_of_range);
    EXPECT_THROW(GateOp::pauli_gate(PauliString::from_text("XX"), {0}), std::invalid_argument);
    EXPECT_EQ(GateOp::cnot(1, 2).str(), "CNOT q1 q2");
    EXPECT_EQ(GateOp::single(PauliLetter::X, 3).str(), "X q3");
}
