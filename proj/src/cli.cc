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

#include "qemlab/cli.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qemlab/engines.h"
#include "qemlab/report.h"
#include "qemlab/sampler.h"

#ifndef QEMLAB_VERSION
#define QEMLAB_VERSION "dev"
#endif

namespace qemlab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<double> kSingleRates{0.001, 0.0015, 0.002};
const std::vector<double> kTwoRates{0.01, 0.015, 0.02};

// Unmitigated values reported for the benchmarks at the default grid points.
const std::vector<double> kReportedNoisyA{0.2017, 0.0906, 0.0406};
const std::vector<double> kReportedNoisyB{0.5256, 0.3801, 0.2745};
const std::vector<double> kReportedNoisyC{0.4832, 0.3351, 0.2320};

constexpr const char *kLayoutNote = "layout reconstructed from published gate counts";

std::string opt_number(std::optional<double> v) {
    return v ? format_number(*v) : std::string();
}

std::string rates_label(const NoiseRates &r) {
    if (r.p1 && r.p2) {
        return format_number(*r.p1) + "/" + format_number(*r.p2);
    }
    return opt_number(r.p1 ? r.p1 : r.p2);
}

void check_rate(std::optional<double> p, const char *name) {
    if (p && !(*p >= 0 && *p < 1)) {
        throw ConfigError(std::string(name) + " must lie in [0, 1), got " + format_number(*p) + ".");
    }
}

fs::path prepare_out(const ExperimentConfig &config) {
    std::error_code ec;
    fs::create_directories(config.out, ec);
    if (ec) {
        throw IoError("Cannot create output directory '" + config.out.string() + "': " + ec.message());
    }
    return config.out;
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("Cannot open '" + path.string() + "' for writing.");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("Failed writing '" + path.string() + "'.");
    }
}

std::string circuit_tag(const std::string &spec) {
    if (parse_benchmark(spec)) {
        return std::string(benchmark_name(*parse_benchmark(spec)));
    }
    return fs::path(spec).stem().string();
}

PauliString observable_for(const ExperimentConfig &config, const Circuit &circuit) {
    if (config.observable.empty()) {
        return all_z_observable(circuit.num_qubits());
    }
    PauliString p;
    try {
        p = PauliString::from_text(config.observable);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("observable: ") + e.what());
    }
    if (p.num_qubits() != circuit.num_qubits()) {
        throw ConfigError("observable has " + std::to_string(p.num_qubits()) + " letters but the circuit has " +
                          std::to_string(circuit.num_qubits()) + " qubits.");
    }
    return p;
}

std::optional<double> reported_noisy(const std::string &circuit, const NoiseRates &r) {
    auto kind = parse_benchmark(circuit);
    if (!kind) {
        return std::nullopt;
    }
    for (size_t i = 0; i < kSingleRates.size(); i++) {
        switch (*kind) {
            case BenchmarkKind::A:
                if (r.p1 == kSingleRates[i]) {
                    return kReportedNoisyA[i];
                }
                break;
            case BenchmarkKind::B:
                if (r.p2 == kTwoRates[i]) {
                    return kReportedNoisyB[i];
                }
                break;
            case BenchmarkKind::C:
                if (r.p1 == kSingleRates[i] && r.p2 == kTwoRates[i]) {
                    return kReportedNoisyC[i];
                }
                break;
        }
    }
    return std::nullopt;
}

size_t line_of_key(const std::string &text, const std::string &key) {
    auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) {
        return 1;
    }
    return 1 + static_cast<size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

Method method_or_throw(const std::string &name) {
    auto m = parse_method(name);
    if (!m) {
        throw ConfigError("unknown method '" + name + "' (expected none, pec or ffpec).");
    }
    return *m;
}

RecoveryNoiseScope scope_or_throw(const std::string &name) {
    if (name == "non-identity") {
        return RecoveryNoiseScope::NonIdentityOnly;
    }
    if (name == "all-branches") {
        return RecoveryNoiseScope::AllBranches;
    }
    throw ConfigError("unknown recovery noise scope '" + name + "' (expected non-identity or all-branches).");
}

}  // namespace

void validate(const ExperimentConfig &config) {
    check_rate(config.p1, "p1");
    check_rate(config.p2, "p2");
    if (config.shots == 0) {
        throw ConfigError("shots must be at least 1.");
    }
    if (config.batches == 0) {
        throw ConfigError("batches must be at least 1.");
    }
    if (config.methods.empty()) {
        throw ConfigError("at least one method is required.");
    }
    if (config.circuit.empty()) {
        throw ConfigError("circuit must name a benchmark (a, b, c) or a circuit file.");
    }
}

ExperimentConfig parse_config_json(const std::string &text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config line 1: top level must be a JSON object.");
    }
    ExperimentConfig config;
    for (const auto &[key, value] : root.items()) {
        auto fail = [&](const std::string &message) {
            throw ConfigError("config line " + std::to_string(line_of_key(text, key)) + ": '" + key + "' " + message);
        };
        auto need_count = [&]() -> uint64_t {
            if (!value.is_number_unsigned() || value.get<uint64_t>() == 0) {
                fail("must be a positive integer.");
            }
            return value.get<uint64_t>();
        };
        auto need_rate = [&]() -> double {
            if (!value.is_number() || !(value.get<double>() >= 0 && value.get<double>() < 1)) {
                fail("must be a number in [0, 1).");
            }
            return value.get<double>();
        };
        auto need_string = [&]() -> std::string {
            if (!value.is_string()) {
                fail("must be a string.");
            }
            return value.get<std::string>();
        };
        auto need_bool = [&]() -> bool {
            if (!value.is_boolean()) {
                fail("must be true or false.");
            }
            return value.get<bool>();
        };
        try {
            if (key == "command") {
                config.command = need_string();
                if (config.command != "tables" && config.command != "noisy" && config.command != "analytic" &&
                    config.command != "sample") {
                    fail("must be one of tables, noisy, analytic, sample.");
                }
            } else if (key == "circuit") {
                config.circuit = need_string();
            } else if (key == "p1") {
                config.p1 = need_rate();
            } else if (key == "p2") {
                config.p2 = need_rate();
            } else if (key == "method" || key == "methods") {
                config.methods.clear();
                if (value.is_string()) {
                    config.methods.push_back(method_or_throw(value.get<std::string>()));
                } else if (value.is_array() && !value.empty()) {
                    for (const auto &m : value) {
                        if (!m.is_string()) {
                            fail("entries must be strings.");
                        }
                        config.methods.push_back(method_or_throw(m.get<std::string>()));
                    }
                } else {
                    fail("must be a method name or a non-empty list of them.");
                }
            } else if (key == "shots") {
                config.shots = need_count();
            } else if (key == "batches") {
                config.batches = need_count();
            } else if (key == "seed") {
                if (!value.is_number_unsigned()) {
                    fail("must be a non-negative integer.");
                }
                config.seed = value.get<uint64_t>();
            } else if (key == "clamp") {
                config.clamp = need_bool();
            } else if (key == "gnuplot") {
                config.gnuplot = need_bool();
            } else if (key == "extended") {
                config.extended = need_bool();
            } else if (key == "out") {
                config.out = need_string();
            } else if (key == "observable") {
                config.observable = need_string();
            } else if (key == "recovery_noise") {
                config.scope = scope_or_throw(need_string());
            } else if (key == "threads") {
                config.threads = static_cast<unsigned>(need_count());
            } else {
                fail("is not a recognized setting.");
            }
        } catch (const ConfigError &e) {
            std::string message = e.what();
            if (message.rfind("config line", 0) == 0) {
                throw;
            }
            throw ConfigError("config line " + std::to_string(line_of_key(text, key)) + ": " + message);
        }
    }
    validate(config);
    return config;
}

Circuit load_circuit(const std::string &spec) {
    if (auto kind = parse_benchmark(spec)) {
        return build_benchmark(*kind);
    }
    if (!fs::exists(spec)) {
        throw ConfigError("circuit '" + spec + "' is neither a benchmark (a, b, c) nor an existing file.");
    }
    try {
        return Circuit::from_file(spec);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("circuit file '" + spec + "' " + e.what());
    } catch (const std::runtime_error &e) {
        throw IoError(e.what());
    }
}

std::vector<NoiseRates> rate_grid(const std::string &circuit, const ExperimentConfig &config) {
    if (config.p1 || config.p2) {
        return {NoiseRates{config.p1, config.p2}};
    }
    auto kind = parse_benchmark(circuit);
    if (!kind) {
        throw ConfigError("circuit files need explicit --p1/--p2 rates.");
    }
    std::vector<NoiseRates> grid;
    for (size_t i = 0; i < kSingleRates.size(); i++) {
        switch (*kind) {
            case BenchmarkKind::A:
                grid.push_back({kSingleRates[i], std::nullopt});
                break;
            case BenchmarkKind::B:
                grid.push_back({std::nullopt, kTwoRates[i]});
                break;
            case BenchmarkKind::C:
                grid.push_back({kSingleRates[i], kTwoRates[i]});
                break;
        }
    }
    return grid;
}

std::vector<InsertionRow> insertion_table(bool extended) {
    std::vector<InsertionRow> rows;
    auto add = [&](const char *type, size_t arity, const std::vector<double> &grid) {
        std::vector<double> rates = grid;
        if (extended) {
            rates.insert(rates.begin(), 0.0);
        }
        for (double p : rates) {
            double pec = total_insertion_probability(pec_decomposition(p, arity));
            double ffpec = total_insertion_probability(ffpec_decomposition(p, arity));
            std::optional<double> rel;
            if (pec != 0) {
                rel = relative_difference(pec, ffpec);
            }
            rows.push_back({type, p, pec, ffpec, rel});
        }
    };
    add("single", 1, kSingleRates);
    add("two", 2, kTwoRates);
    return rows;
}

std::vector<OverheadRow> overhead_table(bool extended) {
    std::vector<OverheadRow> rows;
    std::vector<std::pair<double, double>> pairs;
    if (extended) {
        pairs.emplace_back(0.0, 0.0);
    }
    for (size_t i = 0; i < kSingleRates.size(); i++) {
        pairs.emplace_back(kSingleRates[i], kTwoRates[i]);
    }
    for (auto [p1, p2] : pairs) {
        rows.push_back({"gamma_single", {p1, std::nullopt}, pec_decomposition(p1, 1).gamma(),
                        ffpec_decomposition(p1, 1).gamma()});
    }
    for (auto [p1, p2] : pairs) {
        rows.push_back({"gamma_two", {std::nullopt, p2}, pec_decomposition(p2, 2).gamma(),
                        ffpec_decomposition(p2, 2).gamma()});
    }
    const std::array<std::pair<BenchmarkKind, const char *>, 3> circuits{
        {{BenchmarkKind::A, "gamma_tot_a"}, {BenchmarkKind::B, "gamma_tot_b"}, {BenchmarkKind::C, "gamma_tot_c"}}};
    for (const auto &[kind, type] : circuits) {
        Circuit circuit = build_benchmark(kind);
        for (auto [p1, p2] : pairs) {
            NoiseRates rates{p1, p2};
            if (kind == BenchmarkKind::A) {
                rates.p2.reset();
            } else if (kind == BenchmarkKind::B) {
                rates.p1.reset();
            }
            auto noise = NoiseModel::depolarizing(rates);
            rows.push_back({type, rates, gamma_total(circuit, noise, Method::PEC),
                            gamma_total(circuit, noise, Method::FFPEC)});
        }
    }
    return rows;
}

std::vector<fs::path> cmd_tables(const ExperimentConfig &config) {
    auto dir = prepare_out(config);
    std::string t1 = "type,p,pec,ffpec,relative_difference\n";
    for (const auto &row : insertion_table(config.extended)) {
        t1 += row.type + "," + format_number(row.p) + "," + format_number(row.pec) + "," + format_number(row.ffpec) +
              "," + opt_number(row.relative_difference) + "\n";
    }
    std::string t2 = "type,p,pec,ffpec\n";
    for (const auto &row : overhead_table(config.extended)) {
        t2 += row.type + "," + rates_label(row.rates) + "," + format_number(row.pec) + "," +
              format_number(row.ffpec) + "\n";
    }
    std::vector<fs::path> written{dir / "table1_insertion.csv", dir / "table2_overheads.csv"};
    write_file(written[0], t1);
    write_file(written[1], t2);
    return written;
}

std::vector<fs::path> cmd_noisy(const ExperimentConfig &config) {
    validate(config);
    Circuit circuit = load_circuit(config.circuit);
    auto observable = observable_for(config, circuit);
    auto dir = prepare_out(config);
    bool layout_specific = parse_benchmark(config.circuit) == BenchmarkKind::C;

    std::string csv = "circuit,p1,p2,analytic_noisy,paper_value,note\n";
    std::string dat = "# p1 p2 analytic_noisy\n";
    for (const auto &rates : rate_grid(config.circuit, config)) {
        double value = exact_noisy_expectation(circuit, NoiseModel::depolarizing(rates), observable);
        auto reported = reported_noisy(config.circuit, rates);
        csv += circuit_tag(config.circuit) + "," + opt_number(rates.p1) + "," + opt_number(rates.p2) + "," +
               format_number(value) + "," + opt_number(reported) + "," +
               (layout_specific && reported ? kLayoutNote : "") + "\n";
        dat += (rates.p1 ? format_number(*rates.p1) : "nan") + " " + (rates.p2 ? format_number(*rates.p2) : "nan") +
               " " + format_number(value) + "\n";
    }
    std::vector<fs::path> written{dir / ("noisy_" + circuit_tag(config.circuit) + ".csv")};
    write_file(written[0], csv);
    if (config.gnuplot) {
        written.push_back(dir / ("noisy_" + circuit_tag(config.circuit) + ".dat"));
        write_file(written.back(), dat);
    }
    return written;
}

std::vector<fs::path> cmd_analytic(const ExperimentConfig &config) {
    validate(config);
    Circuit circuit = load_circuit(config.circuit);
    auto observable = observable_for(config, circuit);
    auto dir = prepare_out(config);
    NoiseModel noiseless = NoiseModel::depolarizing({0.0, 0.0});
    double ideal = exact_noisy_expectation(circuit, noiseless, observable);

    std::string csv = "circuit,p1,p2,ideal,noisy,pec,ffpec\n";
    std::string dat = "# p1 p2 ideal noisy pec ffpec\n";
    for (const auto &rates : rate_grid(config.circuit, config)) {
        auto noise = NoiseModel::depolarizing(rates);
        double noisy = exact_noisy_expectation(circuit, noise, observable);
        double pec = exact_mitigated_expectation(circuit, noise, Method::PEC, observable, config.scope);
        double ffpec = exact_mitigated_expectation(circuit, noise, Method::FFPEC, observable, config.scope);
        csv += circuit_tag(config.circuit) + "," + opt_number(rates.p1) + "," + opt_number(rates.p2) + "," +
               format_number(ideal) + "," + format_number(noisy) + "," + format_number(pec) + "," +
               format_number(ffpec) + "\n";
        dat += (rates.p1 ? format_number(*rates.p1) : "nan") + " " + (rates.p2 ? format_number(*rates.p2) : "nan") +
               " " + format_number(ideal) + " " + format_number(noisy) + " " + format_number(pec) + " " +
               format_number(ffpec) + "\n";
    }
    std::vector<fs::path> written{dir / ("analytic_" + circuit_tag(config.circuit) + ".csv")};
    write_file(written[0], csv);
    if (config.gnuplot) {
        written.push_back(dir / ("analytic_" + circuit_tag(config.circuit) + ".dat"));
        write_file(written.back(), dat);
    }
    return written;
}

std::vector<fs::path> cmd_sample(const ExperimentConfig &config) {
    validate(config);
    Circuit circuit = load_circuit(config.circuit);
    auto observable = observable_for(config, circuit);
    auto grid = rate_grid(config.circuit, config);
    auto dir = prepare_out(config);
    NoiseModel noiseless = NoiseModel::depolarizing({0.0, 0.0});
    double ideal = exact_noisy_expectation(circuit, noiseless, observable);
    std::string tag_circuit = circuit_tag(config.circuit);

    std::vector<fs::path> written;
    for (const auto &rates : grid) {
        auto noise = NoiseModel::depolarizing(rates);
        try {
            noise.check_covers(circuit);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        for (auto method : config.methods) {
            SamplerOptions options;
            options.shots_per_batch = config.shots;
            options.batches = config.batches;
            options.seed = config.seed;
            options.clamp = config.clamp;
            options.threads = config.threads;
            options.scope = config.scope;
            auto result = sample_mitigated(circuit, noise, method, observable, options);

            double analytic = method == Method::None
                                  ? exact_noisy_expectation(circuit, noise, observable)
                                  : exact_mitigated_expectation(circuit, noise, method, observable, config.scope);
            double predicted_std = theoretical_std(result.gamma_tot, analytic, config.shots);

            std::string tag = tag_circuit + "_" + std::string(method_name(method)) + "_p1-" +
                              (rates.p1 ? format_number(*rates.p1) : "na") + "_p2-" +
                              (rates.p2 ? format_number(*rates.p2) : "na");
            std::string csv =
                "row,batch,value,method,circuit,p1,p2,gamma_tot,mean,std,theoretical_std,abs_error_vs_ideal,"
                "abs_error_vs_analytic\n";
            std::string dat = "# batch mean\n";
            for (size_t b = 0; b < result.batch_means.size(); b++) {
                csv += "batch," + std::to_string(b) + "," + format_number(result.batch_means[b]) + ",,,,,,,,,,\n";
                dat += std::to_string(b) + " " + format_number(result.batch_means[b]) + "\n";
            }
            csv += "summary,,," + std::string(method_name(method)) + "," + tag_circuit + "," + opt_number(rates.p1) +
                   "," + opt_number(rates.p2) + "," + format_number(result.gamma_tot) + "," +
                   format_number(result.mean) + "," + format_number(result.std_of_batch_means) + "," +
                   format_number(predicted_std) + "," + format_number(std::abs(result.mean - ideal)) + "," +
                   format_number(std::abs(result.mean - analytic)) + "\n";

            json meta;
            meta["tool"] = "qemlab";
            meta["version"] = QEMLAB_VERSION;
            meta["command"] = "sample";
            meta["config"] = {
                {"circuit", config.circuit},
                {"p1", rates.p1 ? json(*rates.p1) : json(nullptr)},
                {"p2", rates.p2 ? json(*rates.p2) : json(nullptr)},
                {"method", method_name(method)},
                {"shots", config.shots},
                {"batches", config.batches},
                {"seed", config.seed},
                {"clamp", config.clamp},
                {"observable", observable.str()},
                {"recovery_noise",
                 config.scope == RecoveryNoiseScope::AllBranches ? "all-branches" : "non-identity"},
            };
            meta["threads"] = resolve_thread_count(config.threads);
            meta["noise"] = json::array();
            meta["decompositions"] = json::array();
            MitigationPlan plan(method, noise);
            for (size_t arity = 1; arity <= 2; arity++) {
                if (!noise.has(arity)) {
                    continue;
                }
                meta["noise"].push_back(channel_json(noise.channel(arity)));
                if (plan.has(arity)) {
                    meta["decompositions"].push_back(
                        decomposition_json(plan.decomposition(arity), noise.channel(arity).depolarizing_rate()));
                }
            }
            meta["result"] = estimator_json(result);
            meta["analytic"] = analytic;
            meta["ideal"] = ideal;
            meta["theoretical_std"] = predicted_std;

            written.push_back(dir / ("samples_" + tag + ".csv"));
            write_file(written.back(), csv);
            written.push_back(dir / ("samples_" + tag + ".json"));
            write_file(written.back(), meta.dump(2) + "\n");
            if (config.gnuplot) {
                written.push_back(dir / ("samples_" + tag + ".dat"));
                write_file(written.back(), dat);
            }
        }
    }
    return written;
}

std::vector<fs::path> run_command(const ExperimentConfig &config) {
    if (config.command == "tables") {
        return cmd_tables(config);
    }
    if (config.command == "noisy") {
        return cmd_noisy(config);
    }
    if (config.command == "analytic") {
        return cmd_analytic(config);
    }
    if (config.command == "sample") {
        return cmd_sample(config);
    }
    throw ConfigError("unknown command '" + config.command + "'.");
}

int run_cli(int argc, char **argv) {
    CLI::App app{"qemlab: probabilistic error cancellation laboratory"};
    app.require_subcommand(1);

    ExperimentConfig config;
    double p1 = std::nan(""), p2 = std::nan("");
    std::vector<std::string> methods;
    std::string scope = "non-identity";
    std::string config_path;
    std::string out = config.out.string();

    auto add_common = [&](CLI::App *sub, bool sampling) {
        sub->add_option("--out", out, "Output directory")->capture_default_str();
        sub->add_flag("--gnuplot", config.gnuplot, "Also write whitespace-separated .dat series");
        if (sub->get_name() == "tables") {
            sub->add_flag("--extended", config.extended, "Prepend a p = 0 row to every table");
            return;
        }
        sub->add_option("--circuit", config.circuit, "Benchmark a|b|c or a circuit file")->capture_default_str();
        sub->add_option("--p1", p1, "Error rate of 1-qubit gates");
        sub->add_option("--p2", p2, "Error rate of 2-qubit gates");
        sub->add_option("--observable", config.observable, "Pauli observable letters (default Z on every qubit)");
        sub->add_option("--recovery-noise", scope,
                        "Which mixture branches carry recovery noise: non-identity | all-branches")
            ->capture_default_str();
        if (sampling) {
            sub->add_option("--method", methods, "none|pec|ffpec (repeatable or comma separated)")->delimiter(',');
            sub->add_option("--shots", config.shots, "Shots per batch")->capture_default_str();
            sub->add_option("--batches", config.batches, "Number of batches")->capture_default_str();
            sub->add_option("--seed", config.seed, "Master seed")->capture_default_str();
            sub->add_flag("--clamp", config.clamp, "Clamp batch means to [-1, 1]");
            sub->add_option("--threads", config.threads, "Worker threads (0: auto, capped by QEMLAB_THREADS)");
        }
    };
    add_common(app.add_subcommand("tables", "Insertion probabilities and sampling overheads"), false);
    add_common(app.add_subcommand("noisy", "Analytic unmitigated expectation values"), false);
    add_common(app.add_subcommand("analytic", "Analytic PEC and FFPEC expectation values"), false);
    add_common(app.add_subcommand("sample", "Monte Carlo quasi-probability sampling"), true);
    auto *run = app.add_subcommand("run", "Run an experiment described by a JSON file");
    run->add_option("--config", config_path, "JSON experiment file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) {
            std::ifstream in(config_path);
            if (!in) {
                throw IoError("Cannot read config file '" + config_path + "'.");
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            config = parse_config_json(buffer.str());
        } else {
            config.command = app.get_subcommands().front()->get_name();
            config.out = out;
            if (!std::isnan(p1)) {
                config.p1 = p1;
            }
            if (!std::isnan(p2)) {
                config.p2 = p2;
            }
            if (!methods.empty()) {
                config.methods.clear();
                for (const auto &m : methods) {
                    config.methods.push_back(method_or_throw(m));
                }
            }
            config.scope = scope_or_throw(scope);
            validate(config);
        }
        for (const auto &path : run_command(config)) {
            std::cout << path.string() << "\n";
        }
        return kExitOk;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qemlab::cli
