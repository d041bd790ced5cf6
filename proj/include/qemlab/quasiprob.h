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

#ifndef QEMLAB_QUASIPROB_H
#define QEMLAB_QUASIPROB_H

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qemlab/channels.h"
#include "qemlab/circuit.h"
#include "qemlab/pauli.h"

namespace qemlab {

enum class Method { None, PEC, FFPEC };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Which branches of a mitigation mixture suffer the physical noise of the
/// inserted recovery gate.
enum class RecoveryNoiseScope {
    /// Only inserted (non-identity) recoveries are noisy. The identity branch
    /// inserts nothing and stays noiseless. This is the model FFPEC is solved
    /// against.
    NonIdentityOnly,
    /// The recovery noise follows every branch, including identity.
    AllBranches,
};

struct QuasiProbTerm {
    /// Recovery Pauli rank on the gate's k qubits (0 = identity).
    uint64_t recovery;
    double q;
};

/// A signed mixture sum_i q_i R_i approximating the inverse of a noise
/// channel, together with its sampling data: gamma = sum |q_i|,
/// sigma_i = |q_i| / gamma and sgn(q_i).
class QuasiProbDecomposition {
   public:
    /// Terms with q == 0 are dropped (the identity term is always kept).
    /// Throws unless the coefficients sum to 1 within 1e-12 and recoveries are
    /// distinct.
    QuasiProbDecomposition(Method method, size_t arity, std::vector<QuasiProbTerm> terms,
                           std::optional<PauliDiagonalChannel> recovery_noise = std::nullopt);

    Method method() const {
        return method_;
    }
    size_t arity() const {
        return arity_;
    }
    const std::vector<QuasiProbTerm> &terms() const {
        return terms_;
    }
    PauliString recovery_pauli(size_t term) const;
    double gamma() const {
        return gamma_;
    }
    double sigma(size_t term) const {
        return sigmas_.at(term);
    }
    int sign(size_t term) const {
        return terms_.at(term).q < 0 ? -1 : 1;
    }
    /// Coefficient of the given recovery rank (0 when absent).
    double q_of(uint64_t recovery) const;
    double q_identity() const {
        return q_of(0);
    }
    /// Noise the coefficients were solved against (none for ideal recovery).
    const std::optional<PauliDiagonalChannel> &recovery_noise() const {
        return recovery_noise_;
    }

    /// Index of the term selected by uniform `u` in [0, 1) with probability
    /// sigma_i.
    size_t sample_term(double u) const;

    /// Transfer-matrix diagonal entry of the mixture on Pauli component `q`
    /// when the physically inserted recoveries are followed by
    /// `physical_noise` (nullptr: ideal recoveries).
    double effective_factor(uint64_t q, const PauliDiagonalChannel *physical_noise,
                            RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly) const;

   private:
    Method method_;
    size_t arity_;
    std::vector<QuasiProbTerm> terms_;
    std::vector<double> sigmas_;
    std::vector<double> cumulative_;
    double gamma_ = 0;
    std::optional<PauliDiagonalChannel> recovery_noise_;
};

/// Standard PEC inverse of depolarizing(p, k): q = -p / (1 - p).
QuasiProbDecomposition pec_decomposition(double p, size_t arity);

/// Inverse of depolarizing(p, k) built from recoveries that are themselves
/// followed by depolarizing(p, k): q = -4p/((1-p)(4-p)) for k = 1,
/// -16p/((1-p)(16-p)) for k = 2.
QuasiProbDecomposition ffpec_decomposition(double p, size_t arity);

/// Solves for coefficients {q_P} with
///   [q_I id + sum_{P != I} q_P (recovery_noise o P)] o noise = id
/// on every Pauli component. The identity branch carries no recovery noise.
/// Throws std::domain_error when the linear system is singular.
QuasiProbDecomposition solve_noisy_inverse(const PauliDiagonalChannel &noise,
                                           const PauliDiagonalChannel &recovery_noise);

/// Probability that some physical recovery gate is inserted after one noisy
/// gate: the sigma mass of the non-identity terms.
double total_insertion_probability(const QuasiProbDecomposition &d);

/// (ffpec - pec) / pec. Throws std::domain_error when pec == 0.
double relative_difference(double pec_prob, double ffpec_prob);

/// Per-arity decompositions used to mitigate one circuit. Depolarizing
/// channels use the closed forms; other Pauli channels go through the solver.
class MitigationPlan {
   public:
    MitigationPlan(Method method, const NoiseModel &noise);

    Method method() const {
        return method_;
    }
    bool has(size_t arity) const;
    const QuasiProbDecomposition &decomposition(size_t arity) const;
    /// 1 for Method::None.
    double gamma(size_t arity) const;

   private:
    Method method_;
    std::array<std::optional<QuasiProbDecomposition>, 2> per_arity_;
};

/// Product of the per-gate sampling overheads over the whole circuit.
double gamma_total(const Circuit &circuit, const NoiseModel &noise, Method method);
double gamma_total(const Circuit &circuit, const MitigationPlan &plan);

}  // namespace qemlab

#endif
