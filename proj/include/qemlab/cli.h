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

#ifndef QEMLAB_CLI_H
#define QEMLAB_CLI_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qemlab/circuit.h"
#include "qemlab/quasiprob.h"

namespace qemlab::cli {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

/// Invalid user configuration (exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failure reading or writing files (exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string command = "sample";
    /// "a", "b", "c" or a path to a circuit file.
    std::string circuit = "b";
    std::optional<double> p1;
    std::optional<double> p2;
    std::vector<Method> methods{Method::PEC, Method::FFPEC};
    uint64_t shots = 1000000;
    uint64_t batches = 10;
    uint64_t seed = 1;
    bool clamp = false;
    std::filesystem::path out = "out";
    bool gnuplot = false;
    bool extended = false;
    /// Pauli letters; empty means Z on every qubit.
    std::string observable;
    RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly;
    unsigned threads = 0;
};

/// Throws ConfigError when rates are outside [0, 1) or counts are zero.
void validate(const ExperimentConfig &config);

/// Parses a JSON experiment description. Errors name the offending line.
ExperimentConfig parse_config_json(const std::string &text);

/// Benchmark or circuit file named by `config.circuit`.
Circuit load_circuit(const std::string &spec);

/// One (p1, p2) point per row of the default rate grid for a benchmark, or the
/// explicit rates when given.
std::vector<NoiseRates> rate_grid(const std::string &circuit, const ExperimentConfig &config);

struct InsertionRow {
    std::string type;
    double p;
    double pec;
    double ffpec;
    std::optional<double> relative_difference;
};

struct OverheadRow {
    std::string type;
    NoiseRates rates;
    double pec;
    double ffpec;
};

std::vector<InsertionRow> insertion_table(bool extended = false);
std::vector<OverheadRow> overhead_table(bool extended = false);

/// Each command writes into `config.out` and returns the paths it wrote.
std::vector<std::filesystem::path> cmd_tables(const ExperimentConfig &config);
std::vector<std::filesystem::path> cmd_noisy(const ExperimentConfig &config);
std::vector<std::filesystem::path> cmd_analytic(const ExperimentConfig &config);
std::vector<std::filesystem::path> cmd_sample(const ExperimentConfig &config);
std::vector<std::filesystem::path> run_command(const ExperimentConfig &config);

/// Entry point; returns the process exit code.
int run_cli(int argc, char **argv);

}  // namespace qemlab::cli

#endif
