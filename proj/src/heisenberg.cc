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

#include <stdexcept>

#include "qemlab/engines.h"

namespace qemlab {

namespace {

// Value of a Pauli on |0...0>.
double vacuum_value(const PauliString &p) {
    return p.is_diagonal() ? static_cast<double>(p.sign()) : 0.0;
}

void check_inputs(const Circuit &circuit, const NoiseModel &noise, const PauliString &observable) {
    if (observable.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("Observable " + observable.str() + " does not match the " +
                                    std::to_string(circuit.num_qubits()) + "-qubit circuit.");
    }
    noise.check_covers(circuit);
}

}  // namespace

double exact_noisy_expectation(const Circuit &circuit, const NoiseModel &noise, const PauliString &observable) {
    check_inputs(circuit, noise, observable);
    PauliString running = observable;
    double factor = 1.0;
    const auto &ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        factor *= noise.channel(it->arity()).damping_factor(restricted_index(running, it->qubits));
        running = conjugate(running, *it);
    }
    return factor * vacuum_value(running);
}

double exact_mitigated_expectation(const Circuit &circuit, const NoiseModel &noise, const MitigationPlan &plan,
                                   const PauliString &observable, RecoveryNoiseScope scope) {
    check_inputs(circuit, noise, observable);
    if (plan.method() == Method::None) {
        return exact_noisy_expectation(circuit, noise, observable);
    }
    PauliString running = observable;
    double factor = 1.0;
    const auto &ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const auto &channel = noise.channel(it->arity());
        auto q = restricted_index(running, it->qubits);
        factor *= channel.damping_factor(q);
        factor *= plan.decomposition(it->arity()).effective_factor(q, &channel, scope);
        running = conjugate(running, *it);
    }
    return factor * vacuum_value(running);
}

double exact_mitigated_expectation(const Circuit &circuit, const NoiseModel &noise, Method method,
                                   const PauliString &observable, RecoveryNoiseScope scope) {
    return exact_mitigated_expectation(circuit, noise, MitigationPlan(method, noise), observable, scope);
}

}  // namespace qemlab
