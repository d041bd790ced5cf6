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

#include "qemlab/quasiprob.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qemlab {

namespace {

constexpr double kSumTolerance = 1e-12;

double check_rate(double p) {
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("Error rate must lie in [0, 1), got " + std::to_string(p) + ".");
    }
    return p;
}

size_t check_arity(size_t arity) {
    if (arity != 1 && arity != 2) {
        throw std::invalid_argument("Closed-form decompositions exist for 1- and 2-qubit noise only.");
    }
    return arity;
}

// Identity term 1 - (4^k - 1) q / 4^k, every other Pauli q / 4^k.
std::vector<QuasiProbTerm> uniform_terms(size_t arity, double q) {
    size_t n = size_t{1} << (2 * arity);
    double each = q / static_cast<double>(n);
    std::vector<QuasiProbTerm> terms;
    terms.reserve(n);
    terms.push_back({0, 1 - static_cast<double>(n - 1) * each});
    for (uint64_t r = 1; r < n; r++) {
        terms.push_back({r, each});
    }
    return terms;
}

}  // namespace

std::string_view method_name(Method method) {
    switch (method) {
        case Method::None:
            return "none";
        case Method::PEC:
            return "pec";
        case Method::FFPEC:
            return "ffpec";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "none") {
        return Method::None;
    }
    if (name == "pec") {
        return Method::PEC;
    }
    if (name == "ffpec") {
        return Method::FFPEC;
    }
    return std::nullopt;
}

QuasiProbDecomposition::QuasiProbDecomposition(Method method, size_t arity, std::vector<QuasiProbTerm> terms,
                                               std::optional<PauliDiagonalChannel> recovery_noise)
    : method_(method), arity_(arity), recovery_noise_(std::move(recovery_noise)) {
    if (arity == 0 || arity > 8) {
        throw std::invalid_argument("Decomposition arity must be between 1 and 8.");
    }
    if (recovery_noise_ && recovery_noise_->arity() != arity) {
        throw std::invalid_argument("Recovery noise arity does not match the decomposition.");
    }
    uint64_t limit = uint64_t{1} << (2 * arity);
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) { return a.recovery < b.recovery; });
    double total = 0;
    for (size_t i = 0; i < terms.size(); i++) {
        if (terms[i].recovery >= limit) {
            throw std::invalid_argument("Recovery rank out of range for the decomposition arity.");
        }
        if (i > 0 && terms[i].recovery == terms[i - 1].recovery) {
            throw std::invalid_argument("Decomposition repeats a recovery Pauli.");
        }
        if (!std::isfinite(terms[i].q)) {
            throw std::invalid_argument("Decomposition coefficient is not finite.");
        }
        total += terms[i].q;
    }
    if (std::abs(total - 1) > kSumTolerance) {
        throw std::invalid_argument("Quasi-probabilities sum to " + std::to_string(total) + ", not 1.");
    }
    for (const auto &t : terms) {
        if (t.q != 0 || t.recovery == 0) {
            terms_.push_back(t);
        }
    }
    if (terms_.empty() || terms_.front().recovery != 0) {
        terms_.insert(terms_.begin(), QuasiProbTerm{0, 0.0});
    }
    for (const auto &t : terms_) {
        gamma_ += std::abs(t.q);
    }
    double running = 0;
    for (const auto &t : terms_) {
        sigmas_.push_back(std::abs(t.q) / gamma_);
        running += sigmas_.back();
        cumulative_.push_back(running);
    }
    cumulative_.back() = 1.0;
}

PauliString QuasiProbDecomposition::recovery_pauli(size_t term) const {
    return PauliString::from_index(arity_, terms_.at(term).recovery);
}

double QuasiProbDecomposition::q_of(uint64_t recovery) const {
    for (const auto &t : terms_) {
        if (t.recovery == recovery) {
            return t.q;
        }
    }
    return 0;
}

size_t QuasiProbDecomposition::sample_term(double u) const {
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<size_t>(it - cumulative_.begin());
}

double QuasiProbDecomposition::effective_factor(uint64_t q, const PauliDiagonalChannel *physical_noise,
                                                RecoveryNoiseScope scope) const {
    if (physical_noise != nullptr && physical_noise->arity() != arity_) {
        throw std::invalid_argument("Recovery noise arity does not match the decomposition.");
    }
    double identity_part = 0;
    double recovery_part = 0;
    for (const auto &t : terms_) {
        if (t.recovery == 0) {
            identity_part += t.q;
        } else {
            recovery_part += t.q * commutation_sign(arity_, t.recovery, q);
        }
    }
    double damping = physical_noise != nullptr ? physical_noise->damping_factor(q) : 1.0;
    if (scope == RecoveryNoiseScope::AllBranches) {
        return damping * (identity_part + recovery_part);
    }
    return identity_part + damping * recovery_part;
}

QuasiProbDecomposition pec_decomposition(double p, size_t arity) {
    check_rate(p);
    check_arity(arity);
    double q = -p / (1 - p);
    return QuasiProbDecomposition(Method::PEC, arity, uniform_terms(arity, q));
}

QuasiProbDecomposition ffpec_decomposition(double p, size_t arity) {
    check_rate(p);
    check_arity(arity);
    double dim = arity == 1 ? 4.0 : 16.0;
    double q = -dim * p / ((1 - p) * (dim - p));
    return QuasiProbDecomposition(Method::FFPEC, arity, uniform_terms(arity, q), depolarizing(p, arity));
}

QuasiProbDecomposition solve_noisy_inverse(const PauliDiagonalChannel &noise,
                                           const PauliDiagonalChannel &recovery_noise) {
    if (noise.arity() != recovery_noise.arity()) {
        throw std::invalid_argument("Noise and recovery noise must have the same arity.");
    }
    size_t k = noise.arity();
    auto n = static_cast<Eigen::Index>(noise.size());
    // Row Q: noise(Q) * [q_I + sum_{P != I} q_P sgn(P, Q) recovery_noise(Q)] = 1.
    Eigen::MatrixXd system(n, n);
    for (Eigen::Index row = 0; row < n; row++) {
        auto q = static_cast<uint64_t>(row);
        double gate_damping = noise.damping_factor(q);
        double recovery_damping = recovery_noise.damping_factor(q);
        system(row, 0) = gate_damping;
        for (Eigen::Index col = 1; col < n; col++) {
            system(row, col) = gate_damping * commutation_sign(k, static_cast<uint64_t>(col), q) * recovery_damping;
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    if (!lu.isInvertible()) {
        throw std::domain_error("Noisy inverse system is singular; the noise channel cannot be inverted with this "
                                "recovery basis.");
    }
    Eigen::VectorXd coefficients = lu.solve(Eigen::VectorXd::Ones(n));

    std::vector<QuasiProbTerm> terms;
    terms.reserve(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; i++) {
        terms.push_back({static_cast<uint64_t>(i), coefficients(i)});
    }
    bool ideal_recovery = recovery_noise == PauliDiagonalChannel::noiseless(k);
    return QuasiProbDecomposition(ideal_recovery ? Method::PEC : Method::FFPEC, k, std::move(terms),
                                  ideal_recovery ? std::nullopt : std::optional(recovery_noise));
}

double total_insertion_probability(const QuasiProbDecomposition &d) {
    double total = 0;
    for (size_t i = 0; i < d.terms().size(); i++) {
        if (d.terms()[i].recovery != 0) {
            total += d.sigma(i);
        }
    }
    return total;
}

double relative_difference(double pec_prob, double ffpec_prob) {
    if (pec_prob == 0) {
        throw std::domain_error("Relative difference is undefined when the PEC value is zero.");
    }
    return (ffpec_prob - pec_prob) / pec_prob;
}

MitigationPlan::MitigationPlan(Method method, const NoiseModel &noise) : method_(method) {
    if (method == Method::None) {
        return;
    }
    for (size_t arity = 1; arity <= per_arity_.size(); arity++) {
        if (!noise.has(arity)) {
            continue;
        }
        const auto &channel = noise.channel(arity);
        if (auto rate = channel.depolarizing_rate()) {
            per_arity_[arity - 1] =
                method == Method::PEC ? pec_decomposition(*rate, arity) : ffpec_decomposition(*rate, arity);
        } else {
            per_arity_[arity - 1] = solve_noisy_inverse(
                channel, method == Method::PEC ? PauliDiagonalChannel::noiseless(arity) : channel);
        }
    }
}

bool MitigationPlan::has(size_t arity) const {
    return arity >= 1 && arity <= per_arity_.size() && per_arity_[arity - 1].has_value();
}

const QuasiProbDecomposition &MitigationPlan::decomposition(size_t arity) const {
    if (!has(arity)) {
        throw std::invalid_argument("No " + std::string(method_name(method_)) + " decomposition for " +
                                    std::to_string(arity) + "-qubit gates.");
    }
    return *per_arity_[arity - 1];
}

double MitigationPlan::gamma(size_t arity) const {
    if (method_ == Method::None) {
        return 1.0;
    }
    return decomposition(arity).gamma();
}

double gamma_total(const Circuit &circuit, const MitigationPlan &plan) {
    auto census = gate_census(circuit);
    double result = 1.0;
    if (census.one_qubit > 0) {
        result *= std::pow(plan.gamma(1), static_cast<double>(census.one_qubit));
    }
    if (census.two_qubit > 0) {
        result *= std::pow(plan.gamma(2), static_cast<double>(census.two_qubit));
    }
    return result;
}

double gamma_total(const Circuit &circuit, const NoiseModel &noise, Method method) {
    noise.check_covers(circuit);
    return gamma_total(circuit, MitigationPlan(method, noise));
}

}  // namespace qemlab
