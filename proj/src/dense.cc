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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qemlab/engines.h"

namespace qemlab {

namespace {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

Matrix single_qubit_matrix(PauliLetter letter) {
    Matrix m(2, 2);
    switch (letter) {
        case PauliLetter::I:
            m << 1, 0, 0, 1;
            break;
        case PauliLetter::X:
            m << 0, 1, 1, 0;
            break;
        case PauliLetter::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case PauliLetter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Full-register operator with `factors[q]` on qubit q. Basis index bit q is
// qubit q, so qubit 0 is the rightmost Kronecker factor.
Matrix embed(const std::vector<Matrix> &factors) {
    Matrix out = factors.back();
    for (size_t q = factors.size() - 1; q-- > 0;) {
        out = kron(out, factors[q]);
    }
    return out;
}

Matrix pauli_matrix(size_t n, const PauliString &letters, std::span<const uint32_t> qubits) {
    std::vector<Matrix> factors(n, single_qubit_matrix(PauliLetter::I));
    for (size_t i = 0; i < qubits.size(); i++) {
        factors[qubits[i]] = single_qubit_matrix(letters.letter(i));
    }
    return static_cast<double>(letters.sign()) * embed(factors);
}

Matrix gate_matrix(size_t n, const GateOp &gate) {
    if (gate.kind == GateKind::Pauli) {
        return pauli_matrix(n, gate.pauli, gate.qubits);
    }
    Matrix p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    std::vector<Matrix> keep(n, single_qubit_matrix(PauliLetter::I));
    std::vector<Matrix> flip = keep;
    keep[gate.qubits[0]] = p0;
    flip[gate.qubits[0]] = p1;
    flip[gate.qubits[1]] = single_qubit_matrix(PauliLetter::X);
    return embed(keep) + embed(flip);
}

// Kraus operators sqrt(p_P) P for every Pauli with non-zero weight.
class DenseChannel {
   public:
    DenseChannel(size_t n, const PauliDiagonalChannel &channel, std::span<const uint32_t> qubits) {
        for (size_t r = 0; r < channel.size(); r++) {
            double weight = channel.error_probs()[r];
            if (weight != 0) {
                terms_.emplace_back(weight, pauli_matrix(n, PauliString::from_index(channel.arity(), r), qubits));
            }
        }
    }

    Matrix apply(const Matrix &rho) const {
        Matrix out = Matrix::Zero(rho.rows(), rho.cols());
        for (const auto &[weight, op] : terms_) {
            out += weight * (op * rho * op.adjoint());
        }
        return out;
    }

   private:
    std::vector<std::pair<double, Matrix>> terms_;
};

}  // namespace

double dense_expectation(const Circuit &circuit, const NoiseModel &noise, Method method,
                         const PauliString &observable, RecoveryNoiseScope scope) {
    size_t n = circuit.num_qubits();
    if (n > kDenseMaxQubits) {
        throw std::invalid_argument("Dense oracle supports at most " + std::to_string(kDenseMaxQubits) +
                                    " qubits, got " + std::to_string(n) + ".");
    }
    if (observable.num_qubits() != n) {
        throw std::invalid_argument("Observable does not match the circuit register.");
    }
    noise.check_covers(circuit);
    MitigationPlan plan(method, noise);

    auto dim = Eigen::Index{1} << n;
    Matrix rho = Matrix::Zero(dim, dim);
    rho(0, 0) = 1;
    for (const auto &gate : circuit.ops()) {
        Matrix u = gate_matrix(n, gate);
        rho = u * rho * u.adjoint();
        const auto &channel = noise.channel(gate.arity());
        DenseChannel gate_noise(n, channel, gate.qubits);
        rho = gate_noise.apply(rho);
        if (method == Method::None) {
            continue;
        }
        const auto &decomposition = plan.decomposition(gate.arity());
        Matrix mixed = Matrix::Zero(dim, dim);
        for (size_t t = 0; t < decomposition.terms().size(); t++) {
            const auto &term = decomposition.terms()[t];
            Matrix branch;
            if (term.recovery == 0) {
                branch = scope == RecoveryNoiseScope::AllBranches ? gate_noise.apply(rho) : rho;
            } else {
                Matrix r = pauli_matrix(n, decomposition.recovery_pauli(t), gate.qubits);
                branch = gate_noise.apply(r * rho * r.adjoint());
            }
            mixed += term.q * branch;
        }
        rho = std::move(mixed);
    }
    Matrix o = pauli_matrix(n, observable, [&] {
        std::vector<uint32_t> all(n);
        for (uint32_t q = 0; q < n; q++) {
            all[q] = q;
        }
        return all;
    }());
    return (o * rho).trace().real();
}

}  // namespace qemlab
