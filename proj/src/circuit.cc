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

#include "qemlab/circuit.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qemlab {

namespace {

constexpr size_t kBenchmarkLayers = 8;
constexpr size_t kBenchmarkAColumns = 200;

void append_x_column(Circuit &c) {
    for (uint32_t q = 0; q < c.num_qubits(); q++) {
        c.append_x(q);
    }
}

void append_even_cnots(Circuit &c) {
    for (uint32_t q = 0; q + 1 < c.num_qubits(); q += 2) {
        c.append_cnot(q, q + 1);
    }
}

void append_odd_cnots(Circuit &c) {
    auto n = static_cast<uint32_t>(c.num_qubits());
    for (uint32_t q = 1; q < n; q += 2) {
        c.append_cnot(q, (q + 1) % n);
    }
}

// Back-propagates Z...Z and checks every CNOT sees a non-identity restriction.
bool every_cnot_hit(const Circuit &c) {
    PauliString running = all_z_observable(c.num_qubits());
    const auto &ops = c.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->kind == GateKind::CNOT && restricted_index(running, it->qubits) == 0) {
            return false;
        }
        running = conjugate(running, *it);
    }
    return true;
}

uint32_t parse_qubit(std::string_view token, size_t line_number) {
    if (token.size() < 2 || token.front() != 'q') {
        throw std::invalid_argument("line " + std::to_string(line_number) + ": expected a qubit like 'q3', got '" +
                                    std::string(token) + "'.");
    }
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("line " + std::to_string(line_number) + ": bad qubit index '" + std::string(token) +
                                    "'.");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

}  // namespace

Circuit::Circuit(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("A circuit needs at least one qubit.");
    }
}

void Circuit::append(GateOp op) {
    op.validate(num_qubits_);
    ops_.push_back(std::move(op));
}

std::string Circuit::str() const {
    std::string out = "n=" + std::to_string(num_qubits_) + "\n";
    for (const auto &op : ops_) {
        out += op.str();
        out += '\n';
    }
    return out;
}

Circuit Circuit::from_text(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_number = 0;
    while (!text.empty()) {
        line_number++;
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (!circuit) {
            if (tokens.size() != 1 || !tokens[0].starts_with("n=")) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": expected header 'n=<qubits>'.");
            }
            size_t n = 0;
            auto body = tokens[0].substr(2);
            auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
            if (ec != std::errc{} || ptr != body.data() + body.size() || n == 0) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": bad qubit count '" +
                                            std::string(body) + "'.");
            }
            circuit.emplace(n);
            continue;
        }
        auto name = tokens[0];
        std::vector<uint32_t> qubits;
        for (size_t i = 1; i < tokens.size(); i++) {
            qubits.push_back(parse_qubit(tokens[i], line_number));
        }
        try {
            if (name == "CNOT" || name == "CX") {
                if (qubits.size() != 2) {
                    throw std::invalid_argument("CNOT takes two qubits.");
                }
                circuit->append_cnot(qubits[0], qubits[1]);
            } else if (name == "X" || name == "Y" || name == "Z") {
                if (qubits.size() != 1) {
                    throw std::invalid_argument(std::string(name) + " takes one qubit.");
                }
                circuit->append(GateOp::pauli_gate(PauliString::from_text(name), qubits));
            } else {
                throw std::invalid_argument("unknown gate '" + std::string(name) + "'.");
            }
        } catch (const std::exception &e) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    if (!circuit) {
        throw std::invalid_argument("Circuit text is missing its 'n=<qubits>' header.");
    }
    return *std::move(circuit);
}

Circuit Circuit::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Failed to open circuit file '" + path + "'.");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str());
}

GateCensus gate_census(const Circuit &circuit) {
    GateCensus census;
    for (const auto &op : circuit.ops()) {
        if (op.arity() == 1) {
            census.one_qubit++;
        } else if (op.arity() == 2) {
            census.two_qubit++;
        }
    }
    return census;
}

std::string_view benchmark_name(BenchmarkKind kind) {
    switch (kind) {
        case BenchmarkKind::A:
            return "a";
        case BenchmarkKind::B:
            return "b";
        case BenchmarkKind::C:
            return "c";
    }
    return "?";
}

std::optional<BenchmarkKind> parse_benchmark(std::string_view name) {
    if (name == "a" || name == "A") {
        return BenchmarkKind::A;
    }
    if (name == "b" || name == "B") {
        return BenchmarkKind::B;
    }
    if (name == "c" || name == "C") {
        return BenchmarkKind::C;
    }
    return std::nullopt;
}

Circuit build_benchmark(BenchmarkKind kind, size_t num_qubits) {
    if (num_qubits < 2 || num_qubits % 2 != 0) {
        throw std::invalid_argument("Benchmark circuits need an even qubit count >= 2, got " +
                                    std::to_string(num_qubits) + ".");
    }
    Circuit c(num_qubits);
    switch (kind) {
        case BenchmarkKind::A:
            for (size_t col = 0; col < kBenchmarkAColumns; col++) {
                append_x_column(c);
            }
            break;
        case BenchmarkKind::B:
            for (size_t layer = 0; layer < kBenchmarkLayers; layer++) {
                append_even_cnots(c);
                append_odd_cnots(c);
            }
            if (!every_cnot_hit(c)) {
                throw std::logic_error("Benchmark B layout leaves a CNOT outside the observable's support.");
            }
            break;
        case BenchmarkKind::C:
            for (size_t layer = 0; layer < kBenchmarkLayers; layer++) {
                append_x_column(c);
                append_even_cnots(c);
                append_x_column(c);
                append_odd_cnots(c);
            }
            break;
    }
    return c;
}

NoiseModel NoiseModel::depolarizing(const NoiseRates &rates) {
    NoiseModel model;
    if (rates.p1) {
        model.bind(qemlab::depolarizing(*rates.p1, 1));
    }
    if (rates.p2) {
        model.bind(qemlab::depolarizing(*rates.p2, 2));
    }
    return model;
}

void NoiseModel::bind(PauliDiagonalChannel channel) {
    if (channel.arity() < 1 || channel.arity() > channels_.size()) {
        throw std::invalid_argument("Only 1- and 2-qubit channels can be bound to gates.");
    }
    channels_[channel.arity() - 1] = std::move(channel);
}

bool NoiseModel::has(size_t arity) const {
    return arity >= 1 && arity <= channels_.size() && channels_[arity - 1].has_value();
}

const PauliDiagonalChannel &NoiseModel::channel(size_t arity) const {
    if (!has(arity)) {
        throw std::invalid_argument("Unbound noise: no error rate bound to " + std::to_string(arity) + "-qubit gates.");
    }
    return *channels_[arity - 1];
}

void NoiseModel::check_covers(const Circuit &circuit) const {
    auto census = gate_census(circuit);
    if (census.one_qubit > 0) {
        channel(1);
    }
    if (census.two_qubit > 0) {
        channel(2);
    }
}

PauliString all_z_observable(size_t num_qubits) {
    PauliString p(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        p.set_letter(q, PauliLetter::Z);
    }
    return p;
}

}  // namespace qemlab
