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

#ifndef QEMLAB_REPORT_H
#define QEMLAB_REPORT_H

#include <string>

#include "json.hpp"
#include "qemlab/channels.h"
#include "qemlab/quasiprob.h"
#include "qemlab/sampler.h"

namespace qemlab {

/// Numeric formatting shared by every emitted file: 10 significant digits,
/// round-half-even, shortest of fixed/exponent notation.
std::string format_number(double value);

/// {arity, p} for depolarizing channels, {arity, error_probs} otherwise.
nlohmann::json channel_json(const PauliDiagonalChannel &channel);

/// {method, arity, p, q_identity, q_pauli, gamma, sigma_identity, sigma_pauli,
/// total_insertion_prob}. q_pauli/sigma_pauli are scalars when every
/// non-identity term shares one coefficient, else arrays indexed by
/// recovery rank.
nlohmann::json decomposition_json(const QuasiProbDecomposition &d, std::optional<double> p);

nlohmann::json estimator_json(const EstimatorResult &result);

}  // namespace qemlab

#endif
