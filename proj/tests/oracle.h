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

// Test-only dense matrix helpers. Deliberately independent of the library's
// symplectic Pauli algebra: operators are assembled from 2x2 matrices.

#ifndef QEMLAB_TESTS_ORACLE_H
#define QEMLAB_TESTS_ORACLE_H

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace qemlab::oracle {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline Matrix letter_matrix(char c) {
    Matrix m(2, 2);
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// "+XZ" style text to a matrix with qubit 0 as the leftmost Kronecker factor.
inline Matrix pauli(const std::string &text) {
    double sign = 1;
    size_t start = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-' ? -1 : 1;
        start = 1;
    }
    Matrix out = Matrix::Identity(1, 1);
    for (size_t i = start; i < text.size(); i++) {
        out = kron(out, letter_matrix(text[i]));
    }
    return sign * out;
}

/// CNOT on an n-qubit register (qubit 0 leftmost factor).
inline Matrix cnot(size_t n, size_t control, size_t target) {
    Matrix p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    Matrix keep = Matrix::Identity(1, 1), flip = Matrix::Identity(1, 1);
    for (size_t q = 0; q < n; q++) {
        keep = kron(keep, q == control ? p0 : letter_matrix('I'));
        flip = kron(flip, q == control ? p1 : (q == target ? letter_matrix('X') : letter_matrix('I')));
    }
    return keep + flip;
}

/// Finds the signed Pauli text equal to `m`, or "" when `m` is not +-1 times
/// a Pauli.
inline std::string identify_pauli(const Matrix &m, size_t n) {
    const char letters[] = "IXYZ";
    size_t count = size_t{1} << (2 * n);
    for (size_t idx = 0; idx < count; idx++) {
        std::string text;
        for (size_t q = 0; q < n; q++) {
            text.push_back(letters[(idx >> (2 * (n - 1 - q))) & 3]);
        }
        Matrix p = pauli(text);
        if ((m - p).norm() < 1e-9) {
            return "+" + text;
        }
        if ((m + p).norm() < 1e-9) {
            return "-" + text;
        }
    }
    return "";
}

/// Random density matrix of dimension d (Wishart-style).
inline Matrix random_density(Eigen::Index d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Matrix a(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    Matrix rho = a * a.adjoint();
    return rho / rho.trace();
}

}  // namespace qemlab::oracle

#endif
