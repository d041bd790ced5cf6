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

#ifndef QEMLAB_ENGINES_H
#define QEMLAB_ENGINES_H

#include "qemlab/circuit.h"
#include "qemlab/pauli.h"
#include "qemlab/quasiprob.h"

namespace qemlab {

/// Largest register the dense density-matrix oracle accepts.
constexpr size_t kDenseMaxQubits = 6;

/// <observable> after running `circuit` on |0...0> with `noise` after every
/// gate. Evaluated by propagating the observable backward through the circuit
/// and multiplying in each channel's damping factor on the running Pauli.
double exact_noisy_expectation(const Circuit &circuit, const NoiseModel &noise, const PauliString &observable);

/// Infinite-shot value of the mitigated estimator. After every gate the gate
/// noise acts, then the plan's signed recovery mixture, where inserted
/// recoveries are themselves followed by the gate's noise channel (`scope`
/// selects whether the identity branch is noisy too).
double exact_mitigated_expectation(const Circuit &circuit, const NoiseModel &noise, const MitigationPlan &plan,
                                   const PauliString &observable,
                                   RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly);
double exact_mitigated_expectation(const Circuit &circuit, const NoiseModel &noise, Method method,
                                   const PauliString &observable,
                                   RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly);

/// Brute-force oracle on a 2^n x 2^n density matrix. Gates are applied as
/// explicit unitaries, channels in Kraus form, and mitigation as an explicit
/// signed mixture of (noisy) Pauli conjugations. Method::None gives the plain
/// noisy value. Throws std::invalid_argument when n > kDenseMaxQubits.
double dense_expectation(const Circuit &circuit, const NoiseModel &noise, Method method,
                         const PauliString &observable,
                         RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly);

}  // namespace qemlab

#endif
