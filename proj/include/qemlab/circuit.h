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

#ifndef QEMLAB_CIRCUIT_H
#define QEMLAB_CIRCUIT_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qemlab/channels.h"
#include "qemlab/pauli.h"

namespace qemlab {

/// An ordered list of gates on an n-qubit register. Every gate is followed by
/// the noise channel bound to its arity.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<GateOp> &ops() const {
        return ops_;
    }

    /// Validates the gate against the register before appending.
    void append(GateOp op);
    void append_x(uint32_t q) {
        append(GateOp::single(PauliLetter::X, q));
    }
    void append_cnot(uint32_t control, uint32_t target) {
        append(GateOp::cnot(control, target));
    }

    /// Text form: "n=<int>" header, then one gate per line ("X q3",
    /// "CNOT q1 q2"). '#' starts a comment.
    std::string str() const;
    static Circuit from_text(std::string_view text);
    static Circuit from_file(const std::string &path);

    bool operator==(const Circuit &other) const = default;

   private:
    size_t num_qubits_;
    std::vector<GateOp> ops_;
};

struct GateCensus {
    size_t one_qubit = 0;
    size_t two_qubit = 0;
    bool operator==(const GateCensus &) const = default;
};

GateCensus gate_census(const Circuit &circuit);

enum class BenchmarkKind { A, B, C };

std::string_view benchmark_name(BenchmarkKind kind);
std::optional<BenchmarkKind> parse_benchmark(std::string_view name);

/// The three benchmark circuits.
///  A: 200 columns of X on every qubit.
///  B: 8 layers of ring brickwork CNOTs, (0,1)(2,3)... then (1,2)(3,4)...(n-1,0).
///  C: 8 layers of [X column, even CNOTs, X column, odd CNOTs].
/// Every CNOT points around the ring: control q, target (q + 1) mod n. With
/// that orientation each CNOT of B lies in the support of the back-propagated
/// Z...Z observable, which the builder checks. n must be even and >= 2.
Circuit build_benchmark(BenchmarkKind kind, size_t num_qubits = 8);

/// Error rates bound to 1-qubit (p1) and 2-qubit (p2) gates.
struct NoiseRates {
    std::optional<double> p1;
    std::optional<double> p2;
};

/// Pauli-diagonal noise bound per gate arity (1 or 2).
class NoiseModel {
   public:
    NoiseModel() = default;

    static NoiseModel depolarizing(const NoiseRates &rates);

    void bind(PauliDiagonalChannel channel);
    bool has(size_t arity) const;
    /// Throws std::invalid_argument ("unbound noise") when nothing is bound.
    const PauliDiagonalChannel &channel(size_t arity) const;

    /// Throws unless every gate arity in `circuit` has a bound channel.
    void check_covers(const Circuit &circuit) const;

   private:
    std::array<std::optional<PauliDiagonalChannel>, 2> channels_;
};

/// Z on every qubit.
PauliString all_z_observable(size_t num_qubits);

}  // namespace qemlab

#endif
