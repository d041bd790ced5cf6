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

#include "qemlab/report.h"

#include <algorithm>
#include <cfenv>
#include <cstdio>

namespace qemlab {

std::string format_number(double value) {
    if (value == 0) {
        return "0";
    }
    // printf rounds the exact binary value under the current rounding mode;
    // FE_TONEAREST gives round-half-even on ties.
    int saved = std::fegetround();
    std::fesetround(FE_TONEAREST);
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    std::fesetround(saved);
    return buffer;
}

nlohmann::json channel_json(const PauliDiagonalChannel &channel) {
    nlohmann::json out;
    out["arity"] = channel.arity();
    if (auto p = channel.depolarizing_rate()) {
        out["p"] = *p;
    } else {
        out["error_probs"] = std::vector<double>(channel.error_probs().begin(), channel.error_probs().end());
    }
    return out;
}

nlohmann::json decomposition_json(const QuasiProbDecomposition &d, std::optional<double> p) {
    nlohmann::json out;
    out["method"] = method_name(d.method());
    out["arity"] = d.arity();
    out["p"] = p ? nlohmann::json(*p) : nlohmann::json(nullptr);
    out["q_identity"] = d.q_identity();
    out["gamma"] = d.gamma();
    out["sigma_identity"] = d.sigma(0);

    size_t count = size_t{1} << (2 * d.arity());
    std::vector<double> q(count - 1, 0.0), sigma(count - 1, 0.0);
    for (size_t t = 0; t < d.terms().size(); t++) {
        auto r = d.terms()[t].recovery;
        if (r != 0) {
            q[r - 1] = d.terms()[t].q;
            sigma[r - 1] = d.sigma(t);
        }
    }
    bool uniform = std::all_of(q.begin(), q.end(), [&](double v) { return v == q.front(); });
    out["q_pauli"] = uniform ? nlohmann::json(q.front()) : nlohmann::json(q);
    out["sigma_pauli"] = uniform ? nlohmann::json(sigma.front()) : nlohmann::json(sigma);
    out["total_insertion_prob"] = total_insertion_probability(d);
    if (d.recovery_noise()) {
        out["recovery_noise"] = channel_json(*d.recovery_noise());
    }
    return out;
}

nlohmann::json estimator_json(const EstimatorResult &result) {
    return {
        {"method", method_name(result.method)},
        {"mean", result.mean},
        {"std_of_batch_means", result.std_of_batch_means},
        {"shots_per_batch", result.shots_per_batch},
        {"batches", result.batches},
        {"gamma_tot", result.gamma_tot},
        {"seed", result.seed},
        {"clamped", result.clamped},
    };
}

}  // namespace qemlab
