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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qemlab {

namespace {

constexpr size_t word_count(size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

// Exponent e (mod 4) such that P1*P2 = i^e * P3 for single-qubit Paulis given
// in (x, z) form with Y = (1, 1).
int product_phase(bool x1, bool z1, bool x2, bool z2) {
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return int(z2) * (2 * int(x2) - 1);
    }
    if (z1) {
        return int(x2) * (1 - 2 * int(z2));
    }
    return 0;
}

PauliLetter letter_from_bits(bool x, bool z) {
    if (x) {
        return z ? PauliLetter::Y : PauliLetter::X;
    }
    return z ? PauliLetter::Z : PauliLetter::I;
}

}  // namespace

char letter_char(PauliLetter letter) {
    return "IXYZ"[static_cast<int>(letter)];
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(word_count(num_qubits), 0), zs_(word_count(num_qubits), 0) {
}

PauliString PauliString::from_text(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set_letter(q, PauliLetter::X);
                break;
            case 'Y':
                result.set_letter(q, PauliLetter::Y);
                break;
            case 'Z':
                result.set_letter(q, PauliLetter::Z);
                break;
            default:
                throw std::invalid_argument("Unrecognized Pauli character '" + std::string(1, text[q]) + "'.");
        }
    }
    result.negative_ = negative;
    return result;
}

PauliString PauliString::from_index(size_t num_qubits, uint64_t index) {
    if (num_qubits > 31) {
        throw std::invalid_argument("Pauli rank only defined for at most 31 qubits.");
    }
    if (index >> (2 * num_qubits)) {
        throw std::out_of_range("Pauli rank " + std::to_string(index) + " too large for " +
                                std::to_string(num_qubits) + " qubits.");
    }
    PauliString result(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        auto digit = (index >> (2 * (num_qubits - 1 - q))) & 3;
        result.set_letter(q, static_cast<PauliLetter>(digit));
    }
    return result;
}

void PauliString::set_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("Pauli sign must be +1 or -1.");
    }
    negative_ = sign < 0;
}

void PauliString::check_qubit(size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("Qubit " + std::to_string(q) + " out of range for a " + std::to_string(num_qubits_) +
                                "-qubit Pauli string.");
    }
}

bool PauliString::x(size_t q) const {
    check_qubit(q);
    return (xs_[q / 64] >> (q % 64)) & 1;
}

bool PauliString::z(size_t q) const {
    check_qubit(q);
    return (zs_[q / 64] >> (q % 64)) & 1;
}

void PauliString::flip_x(size_t q) {
    xs_[q / 64] ^= uint64_t{1} << (q % 64);
}

void PauliString::flip_z(size_t q) {
    zs_[q / 64] ^= uint64_t{1} << (q % 64);
}

PauliLetter PauliString::letter(size_t q) const {
    return letter_from_bits(x(q), z(q));
}

void PauliString::set_letter(size_t q, PauliLetter letter) {
    check_qubit(q);
    bool want_x = letter == PauliLetter::X || letter == PauliLetter::Y;
    bool want_z = letter == PauliLetter::Z || letter == PauliLetter::Y;
    if (x(q) != want_x) {
        flip_x(q);
    }
    if (z(q) != want_z) {
        flip_z(q);
    }
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliString::is_identity() const {
    return std::all_of(xs_.begin(), xs_.end(), [](uint64_t w) { return w == 0; }) &&
           std::all_of(zs_.begin(), zs_.end(), [](uint64_t w) { return w == 0; });
}

bool PauliString::is_diagonal() const {
    return std::all_of(xs_.begin(), xs_.end(), [](uint64_t w) { return w == 0; });
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli strings have different qubit counts.");
    }
    uint64_t parity = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        parity ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
    }
    return std::popcount(parity) % 2 == 0;
}

uint64_t PauliString::index() const {
    if (num_qubits_ > 31) {
        throw std::invalid_argument("Pauli rank only defined for at most 31 qubits.");
    }
    uint64_t result = 0;
    for (size_t q = 0; q < num_qubits_; q++) {
        result = (result << 2) | static_cast<uint64_t>(letter(q));
    }
    return result;
}

std::string PauliString::str() const {
    std::string result;
    result.reserve(num_qubits_ + 1);
    result.push_back(negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        result.push_back(letter_char(letter(q)));
    }
    return result;
}

GateOp GateOp::pauli_gate(const PauliString &letters, std::vector<uint32_t> qubits) {
    GateOp op;
    op.kind = GateKind::Pauli;
    op.qubits = std::move(qubits);
    op.pauli = letters;
    op.pauli.set_sign(1);
    if (op.pauli.num_qubits() != op.qubits.size()) {
        throw std::invalid_argument("Pauli gate letters do not match its qubit list.");
    }
    return op;
}

GateOp GateOp::single(PauliLetter letter, uint32_t qubit) {
    PauliString letters(1);
    letters.set_letter(0, letter);
    return pauli_gate(letters, {qubit});
}

GateOp GateOp::cnot(uint32_t control, uint32_t target) {
    GateOp op;
    op.kind = GateKind::CNOT;
    op.qubits = {control, target};
    return op;
}

void GateOp::validate(size_t num_qubits) const {
    if (qubits.empty()) {
        throw std::invalid_argument("Gate has no qubits.");
    }
    for (size_t i = 0; i < qubits.size(); i++) {
        if (qubits[i] >= num_qubits) {
            throw std::out_of_range("Gate " + str() + " targets qubit " + std::to_string(qubits[i]) + " but the register has " +
                                    std::to_string(num_qubits) + " qubits.");
        }
        for (size_t j = 0; j < i; j++) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("Gate " + str() + " repeats qubit " + std::to_string(qubits[i]) + ".");
            }
        }
    }
    if (kind == GateKind::CNOT && qubits.size() != 2) {
        throw std::invalid_argument("CNOT needs exactly two qubits.");
    }
    if (kind == GateKind::Pauli && pauli.num_qubits() != qubits.size()) {
        throw std::invalid_argument("Pauli gate letters do not match its qubit list.");
    }
}

std::string GateOp::str() const {
    std::string result;
    if (kind == GateKind::CNOT) {
        result = "CNOT";
    } else if (pauli.num_qubits() == 1) {
        result = std::string(1, letter_char(pauli.letter(0)));
    } else {
        result = "PAULI " + pauli.str().substr(1);
    }
    for (auto q : qubits) {
        result += " q" + std::to_string(q);
    }
    return result;
}

PauliString conjugate(const PauliString &observable, const GateOp &gate) {
    gate.validate(observable.num_qubits());
    PauliString result = observable;
    if (gate.kind == GateKind::CNOT) {
        size_t c = gate.qubits[0];
        size_t t = gate.qubits[1];
        bool xc = result.x(c), zc = result.z(c), xt = result.x(t), zt = result.z(t);
        if (xc && zt && !(xt ^ zc)) {
            result.negate();
        }
        if (xc) {
            result.flip_x(t);
        }
        if (zt) {
            result.flip_z(c);
        }
        return result;
    }
    bool anticommutes = false;
    for (size_t i = 0; i < gate.qubits.size(); i++) {
        size_t q = gate.qubits[i];
        anticommutes ^= (gate.pauli.x(i) && result.z(q)) ^ (gate.pauli.z(i) && result.x(q));
    }
    if (anticommutes) {
        result.negate();
    }
    return result;
}

PauliString compose(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Cannot compose Pauli strings of different sizes.");
    }
    PauliString result(a.num_qubits());
    int phase = 0;
    for (size_t q = 0; q < a.num_qubits(); q++) {
        phase += product_phase(a.x(q), a.z(q), b.x(q), b.z(q));
    }
    for (size_t w = 0; w < result.xs_.size(); w++) {
        result.xs_[w] = a.xs_[w] ^ b.xs_[w];
        result.zs_[w] = a.zs_[w] ^ b.zs_[w];
    }
    phase = ((phase % 4) + 4) % 4;
    bool flip = phase >= 2;
    result.negative_ = a.negative_ ^ b.negative_ ^ flip;
    return result;
}

PauliString restrict(const PauliString &p, std::span<const uint32_t> qubits) {
    PauliString result(qubits.size());
    for (size_t i = 0; i < qubits.size(); i++) {
        result.set_letter(i, p.letter(qubits[i]));
    }
    return result;
}

uint64_t restricted_index(const PauliString &p, std::span<const uint32_t> qubits) {
    uint64_t result = 0;
    for (auto q : qubits) {
        result = (result << 2) | static_cast<uint64_t>(p.letter(q));
    }
    return result;
}

int commutation_sign(size_t num_qubits, uint64_t a, uint64_t b) {
    int parity = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        auto la = (a >> (2 * q)) & 3;
        auto lb = (b >> (2 * q)) & 3;
        parity ^= int(la != 0 && lb != 0 && la != lb);
    }
    return parity ? -1 : 1;
}

}  // namespace qemlab
