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

#include "qemlab/channels.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qemlab {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

size_t pauli_count(size_t arity) {
    if (arity == 0 || arity > 8) {
        throw std::invalid_argument("Channel arity must be between 1 and 8, got " + std::to_string(arity) + ".");
    }
    return size_t{1} << (2 * arity);
}

std::vector<double> transform(size_t arity, std::span<const double> values) {
    size_t n = values.size();
    std::vector<double> out(n, 0.0);
    for (size_t q = 0; q < n; q++) {
        double acc = 0;
        for (size_t p = 0; p < n; p++) {
            acc += values[p] * commutation_sign(arity, p, q);
        }
        out[q] = acc;
    }
    return out;
}

}  // namespace

PauliDiagonalChannel::PauliDiagonalChannel(size_t arity, std::vector<double> error_probs)
    : arity_(arity), probs_(std::move(error_probs)) {
    if (probs_.size() != pauli_count(arity)) {
        throw std::invalid_argument("A " + std::to_string(arity) + "-qubit Pauli channel needs " +
                                    std::to_string(pauli_count(arity)) + " probabilities, got " +
                                    std::to_string(probs_.size()) + ".");
    }
    double total = 0;
    for (double v : probs_) {
        if (!(v >= 0)) {
            throw std::invalid_argument("Pauli channel probabilities must be non-negative.");
        }
        total += v;
    }
    if (std::abs(total - 1) > kProbabilityTolerance) {
        throw std::invalid_argument("Pauli channel probabilities sum to " + std::to_string(total) + ", not 1.");
    }
    damping_ = transform(arity_, probs_);
    cumulative_.resize(probs_.size());
    double running = 0;
    for (size_t i = 0; i < probs_.size(); i++) {
        running += probs_[i];
        cumulative_[i] = running;
    }
    cumulative_.back() = 1.0;
}

PauliDiagonalChannel PauliDiagonalChannel::noiseless(size_t arity) {
    std::vector<double> probs(pauli_count(arity), 0.0);
    probs[0] = 1;
    return PauliDiagonalChannel(arity, std::move(probs));
}

PauliDiagonalChannel PauliDiagonalChannel::from_damping(size_t arity, std::span<const double> damping) {
    if (damping.size() != pauli_count(arity)) {
        throw std::invalid_argument("Damping vector has the wrong length for the channel arity.");
    }
    auto probs = transform(arity, damping);
    double scale = 1.0 / static_cast<double>(damping.size());
    for (auto &v : probs) {
        v *= scale;
        // Round-off from the transform can leave tiny negatives on exact zeros.
        if (v < 0 && v > -kProbabilityTolerance) {
            v = 0;
        }
    }
    return PauliDiagonalChannel(arity, std::move(probs));
}

double PauliDiagonalChannel::damping_factor(uint64_t q) const {
    if (q >= damping_.size()) {
        throw std::out_of_range("Pauli rank out of range for the channel arity.");
    }
    return damping_[q];
}

double PauliDiagonalChannel::damping_factor(const PauliString &q) const {
    if (q.num_qubits() != arity_) {
        throw std::invalid_argument("Pauli " + q.str() + " does not match channel arity " + std::to_string(arity_) + ".");
    }
    return damping_[q.index()];
}

uint64_t PauliDiagonalChannel::sample_index(double u) const {
    if (u < cumulative_[0]) {
        return 0;
    }
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<uint64_t>(it - cumulative_.begin());
}

PauliString PauliDiagonalChannel::sample_error(Xoshiro256pp &rng) const {
    return PauliString::from_index(arity_, sample_index(rng.uniform()));
}

PauliDiagonalChannel depolarizing(double p, size_t arity) {
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("Depolarizing rate must lie in [0, 1), got " + std::to_string(p) + ".");
    }
    size_t n = pauli_count(arity);
    double each = p / static_cast<double>(n);
    std::vector<double> probs(n, each);
    probs[0] = 1 - static_cast<double>(n - 1) * each;
    PauliDiagonalChannel result(arity, std::move(probs));
    result.depolarizing_rate_ = p;
    return result;
}

PauliDiagonalChannel compose(const PauliDiagonalChannel &a, const PauliDiagonalChannel &b) {
    if (a.arity() != b.arity()) {
        throw std::invalid_argument("Cannot compose Pauli channels of different arity.");
    }
    std::vector<double> damping(a.size());
    for (size_t q = 0; q < damping.size(); q++) {
        damping[q] = a.damping_factor(q) * b.damping_factor(q);
    }
    return PauliDiagonalChannel::from_damping(a.arity(), damping);
}

}  // namespace qemlab
