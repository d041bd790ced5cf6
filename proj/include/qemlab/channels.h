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

#ifndef QEMLAB_CHANNELS_H
#define QEMLAB_CHANNELS_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qemlab/pauli.h"
#include "qemlab/rng.h"

namespace qemlab {

/// A Pauli error channel on k qubits: rho -> sum_P probs[P] * P rho P.
///
/// Probabilities are indexed by lexicographic Pauli rank (I...I first, qubit 0
/// most significant). The channel is diagonal in the Pauli transfer basis; its
/// diagonal entries ("damping factors") are computed once at construction.
class PauliDiagonalChannel {
   public:
    /// Validates that the vector has length 4^arity, entries are non-negative
    /// and the total is 1 within 1e-12.
    PauliDiagonalChannel(size_t arity, std::vector<double> error_probs);

    static PauliDiagonalChannel noiseless(size_t arity);

    /// Reconstructs the error probabilities from damping factors by the inverse
    /// symplectic Walsh-Hadamard transform.
    static PauliDiagonalChannel from_damping(size_t arity, std::span<const double> damping);

    size_t arity() const {
        return arity_;
    }
    size_t size() const {
        return probs_.size();
    }
    std::span<const double> error_probs() const {
        return probs_;
    }
    std::span<const double> damping_factors() const {
        return damping_;
    }

    /// Factor the channel applies to the Pauli component with rank `q`.
    double damping_factor(uint64_t q) const;
    double damping_factor(const PauliString &q) const;

    /// Draws an error Pauli rank. `u` is uniform on [0, 1).
    uint64_t sample_index(double u) const;
    PauliString sample_error(Xoshiro256pp &rng) const;

    /// Depolarizing rate when the channel was built by `depolarizing`.
    std::optional<double> depolarizing_rate() const {
        return depolarizing_rate_;
    }

    bool operator==(const PauliDiagonalChannel &other) const {
        return arity_ == other.arity_ && probs_ == other.probs_;
    }

   private:
    friend PauliDiagonalChannel depolarizing(double p, size_t arity);

    size_t arity_;
    std::vector<double> probs_;
    std::vector<double> damping_;
    std::vector<double> cumulative_;
    std::optional<double> depolarizing_rate_;
};

/// Identity weight 1 - (4^k - 1) p / 4^k, every other Pauli p / 4^k.
PauliDiagonalChannel depolarizing(double p, size_t arity);

/// Sequential composition; damping factors multiply, so the order is
/// irrelevant.
PauliDiagonalChannel compose(const PauliDiagonalChannel &a, const PauliDiagonalChannel &b);

}  // namespace qemlab

#endif
