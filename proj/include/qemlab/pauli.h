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

#ifndef QEMLAB_PAULI_H
#define QEMLAB_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qemlab {

/// Single-qubit Pauli letter. The numeric value is the lexicographic rank used
/// to index Pauli vectors (I, X, Y, Z).
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter letter);

struct GateOp;

/// An n-qubit Pauli operator carrying a real sign.
///
/// Letters are stored symplectically as packed x/z bit vectors: I=(0,0),
/// X=(1,0), Y=(1,1), Z=(0,1). Only the sign +1/-1 is tracked; the +-i phases
/// that can appear in products of non-commuting operators are folded into the
/// sign (see `compose`).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses "+XZI", "-ZZ" or "XZI" (implicit +). Qubit 0 is leftmost.
    static PauliString from_text(std::string_view text);

    /// The Pauli with lexicographic rank `index` on `num_qubits` qubits, qubit 0
    /// most significant. Inverse of `index()`.
    static PauliString from_index(size_t num_qubits, uint64_t index);

    size_t num_qubits() const {
        return num_qubits_;
    }
    int sign() const {
        return negative_ ? -1 : 1;
    }
    void set_sign(int sign);
    void negate() {
        negative_ = !negative_;
    }

    bool x(size_t q) const;
    bool z(size_t q) const;
    PauliLetter letter(size_t q) const;
    void set_letter(size_t q, PauliLetter letter);

    size_t weight() const;
    bool is_identity() const;
    /// True when every letter is I or Z, i.e. the operator is diagonal in the
    /// computational basis.
    bool is_diagonal() const;
    bool commutes_with(const PauliString &other) const;

    /// Lexicographic rank of the letters (sign ignored). Requires num_qubits <= 31.
    uint64_t index() const;

    /// "+ZIZZ" style rendering.
    std::string str() const;

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }

    bool operator==(const PauliString &other) const = default;

    friend PauliString compose(const PauliString &a, const PauliString &b);
    friend PauliString conjugate(const PauliString &observable, const GateOp &gate);

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    bool negative_ = false;

    void check_qubit(size_t q) const;
    void flip_x(size_t q);
    void flip_z(size_t q);
};

enum class GateKind : uint8_t { Pauli, CNOT };

/// One gate application. Pauli gates carry their letters on `qubits` (sign +1);
/// CNOT uses qubits[0] as control and qubits[1] as target.
struct GateOp {
    GateKind kind = GateKind::Pauli;
    std::vector<uint32_t> qubits;
    PauliString pauli;

    static GateOp pauli_gate(const PauliString &letters, std::vector<uint32_t> qubits);
    static GateOp single(PauliLetter letter, uint32_t qubit);
    static GateOp cnot(uint32_t control, uint32_t target);

    size_t arity() const {
        return qubits.size();
    }
    /// Throws std::invalid_argument unless the gate fits on `num_qubits` qubits.
    void validate(size_t num_qubits) const;
    std::string str() const;

    bool operator==(const GateOp &other) const = default;
};

/// Returns G^dagger P G.
PauliString conjugate(const PauliString &observable, const GateOp &gate);

/// Group product a*b with the phase reduced to a real sign. When a and b
/// commute the product is exact. Otherwise a*b = +-i*c and the returned sign
/// is + for +i and - for -i.
PauliString compose(const PauliString &a, const PauliString &b);

/// Sub-string on `qubits`, in list order, with sign +1.
PauliString restrict(const PauliString &p, std::span<const uint32_t> qubits);

/// Lexicographic rank of `restrict(p, qubits)` without materializing it.
uint64_t restricted_index(const PauliString &p, std::span<const uint32_t> qubits);

/// +1 if the k-qubit Paulis with ranks `a` and `b` commute, -1 otherwise.
int commutation_sign(size_t num_qubits, uint64_t a, uint64_t b);

}  // namespace qemlab

#endif
