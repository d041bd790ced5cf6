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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "qemlab/engines.h"

using namespace qemlab;

TEST(gate_census, benchmarks) {
    EXPECT_EQ(gate_census(build_benchmark(BenchmarkKind::A)), (GateCensus{1600, 0}));
    EXPECT_EQ(gate_census(build_benchmark(BenchmarkKind::B)), (GateCensus{0, 64}));
    EXPECT_EQ(gate_census(build_benchmark(BenchmarkKind::C)), (GateCensus{128, 64}));
    EXPECT_EQ(gate_census(Circuit(8)), (GateCensus{0, 0}));
    EXPECT_EQ(gate_census(build_benchmark(BenchmarkKind::C, 4)), (GateCensus{64, 32}));
}

TEST(build_benchmark, noiseless_value_is_one) {
    for (auto kind : {BenchmarkKind::A, BenchmarkKind::B, BenchmarkKind::C}) {
        for (size_t n : {2, 4, 8, 10}) {
            Circuit c = build_benchmark(kind, n);
            NoiseModel ideal = NoiseModel::depolarizing({0.0, 0.0});
            double value = exact_noisy_expectation(c, ideal, all_z_observable(n));
            // The X columns of C interleave with CNOTs, so only the sizes used
            // here are pinned to +1; any size gives a basis state.
            if (n == 4 || n == 8 || kind != BenchmarkKind::C) {
                EXPECT_EQ(value, 1.0) << n;
            } else {
                EXPECT_EQ(std::abs(value), 1.0) << n;
            }
        }
    }
    for (auto kind : {BenchmarkKind::A, BenchmarkKind::B, BenchmarkKind::C}) {
        Circuit c = build_benchmark(kind, 4);
        EXPECT_NEAR(dense_expectation(c, NoiseModel::depolarizing({0.0, 0.0}), Method::None, all_z_observable(4)), 1.0,
                    1e-12);
    }
}

TEST(build_benchmark, every_x_column_touches_each_qubit_evenly) {
    for (auto kind : {BenchmarkKind::A, BenchmarkKind::C}) {
        Circuit c = build_benchmark(kind);
        std::vector<int> hits(8);
        for (const auto &op : c.ops()) {
            if (op.kind == GateKind::Pauli) {
                hits[op.qubits[0]]++;
            }
        }
        for (int h : hits) {
            EXPECT_EQ(h % 2, 0);
        }
    }
}

// Every CNOT of B sits on the support of the back-propagated Z string. Tracked
// here with a plain Z-support vector: backward through CNOT(c, t), Z_t picks
// up Z_c.
TEST(build_benchmark, b_cnots_lie_in_observable_support) {
    for (size_t n : {2, 4, 6, 8, 12}) {
        Circuit c = build_benchmark(BenchmarkKind::B, n);
        std::vector<bool> z(n, true);
        for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
            ASSERT_EQ(it->kind, GateKind::CNOT);
            uint32_t ctl = it->qubits[0], tgt = it->qubits[1];
            EXPECT_TRUE(z[ctl] || z[tgt]) << "n=" << n;
            z[ctl] = z[ctl] != z[tgt];
        }
    }
}

TEST(build_benchmark, cnots_point_around_the_ring) {
    Circuit b = build_benchmark(BenchmarkKind::B);
    ASSERT_EQ(b.ops().size(), 64u);
    for (size_t i = 0; i < 8; i++) {
        const auto &op = b.ops()[i];
        EXPECT_EQ(op.qubits[0], i < 4 ? 2 * i : 2 * (i - 4) + 1);
        EXPECT_EQ(op.qubits[1], (op.qubits[0] + 1) % 8);
    }
    EXPECT_EQ(b.ops()[7].str(), "CNOT q7 q0");
}

TEST(build_benchmark, rejects_odd_registers) {
    EXPECT_THROW(build_benchmark(BenchmarkKind::B, 3), std::invalid_argument);
    EXPECT_THROW(build_benchmark(BenchmarkKind::A, 0), std::invalid_argument);
}

TEST(circuit, rejects_invalid_gates) {
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    Circuit c(3);
    EXPECT_THROW(c.append_x(3), std::out_of_range);
    EXPECT_THROW(c.append_cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(c.append_cnot(0, 5), std::out_of_range);
    EXPECT_TRUE(c.ops().empty());
}

TEST(circuit_text, round_trip) {
    for (auto kind : {BenchmarkKind::A, BenchmarkKind::B, BenchmarkKind::C}) {
        Circuit c = build_benchmark(kind, 4);
        EXPECT_EQ(Circuit::from_text(c.str()), c);
    }
    Circuit c(3);
    c.append(GateOp::single(PauliLetter::Y, 2));
    c.append(GateOp::single(PauliLetter::Z, 0));
    c.append_cnot(2, 0);
    EXPECT_EQ(c.str(), "n=3\nY q2\nZ q0\nCNOT q2 q0\n");
    EXPECT_EQ(Circuit::from_text(c.str()), c);
}

TEST(circuit_text, parses_comments_and_aliases) {
    Circuit c = Circuit::from_text("# demo\n\nn=2\nX q0   # flip\nCX q0 q1\n");
    ASSERT_EQ(c.ops().size(), 2u);
    EXPECT_EQ(c.num_qubits(), 2u);
    EXPECT_EQ(c.ops()[1], GateOp::cnot(0, 1));
}

TEST(circuit_text, errors_name_the_line) {
    auto message = [](const std::string &text) {
        try {
            Circuit::from_text(text);
        } catch (const std::invalid_argument &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message("n=2\nX q0\nH q1\n").find("line 3"), std::string::npos);
    EXPECT_NE(message("n=2\nX q7\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("n=2\nCNOT q0\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("X q0\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("n=zero\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("# only a comment\n").find("header"), std::string::npos);
}

TEST(circuit_text, reads_files) {
    auto path = std::filesystem::temp_directory_path() / "qemlab_circuit_test.txt";
    {
        std::ofstream out(path);
        out << build_benchmark(BenchmarkKind::C, 4).str();
    }
    EXPECT_EQ(Circuit::from_file(path.string()), build_benchmark(BenchmarkKind::C, 4));
    std::filesystem::remove(path);
    EXPECT_THROW(Circuit::from_file(path.string()), std::runtime_error);
}

TEST(noise_model, binding) {
    auto model = NoiseModel::depolarizing({0.001, std::nullopt});
    EXPECT_TRUE(model.has(1));
    EXPECT_FALSE(model.has(2));
    EXPECT_EQ(model.channel(1).depolarizing_rate(), 0.001);
    EXPECT_THROW(model.channel(2), std::invalid_argument);
    EXPECT_NO_THROW(model.check_covers(build_benchmark(BenchmarkKind::A)));
    EXPECT_THROW(model.check_covers(build_benchmark(BenchmarkKind::C)), std::invalid_argument);
    model.bind(depolarizing(0.01, 2));
    EXPECT_NO_THROW(model.check_covers(build_benchmark(BenchmarkKind::C)));
    EXPECT_THROW(model.bind(depolarizing(0.01, 3)), std::invalid_argument);
}

TEST(benchmark_names, parse) {
    EXPECT_EQ(parse_benchmark("a"), BenchmarkKind::A);
    EXPECT_EQ(parse_benchmark("c"), BenchmarkKind::C);
    EXPECT_FALSE(parse_benchmark("d").has_value());
    EXPECT_EQ(benchmark_name(BenchmarkKind::B), "b");
    EXPECT_EQ(all_z_observable(3).str(), "+ZZZ");
}
