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

#include "qemlab/sampler.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace qemlab {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
   public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            carry_ += (sum_ - t) + v;
        } else {
            carry_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const {
        return sum_ + carry_;
    }

   private:
    double sum_ = 0;
    double carry_ = 0;
};

// Probability that stage i is the first non-identity draw, given that at least
// one of stages i.. is non-identity.
double conditional_hit(std::span<const double> rates, size_t i) {
    double all_miss = 1;
    for (size_t j = i; j < rates.size(); j++) {
        all_miss *= 1 - rates[j];
    }
    double any = 1 - all_miss;
    return any > 0 ? rates[i] / any : 0;
}

}  // namespace

void TrajectorySampler::Table::add(uint64_t value, double weight) {
    if (weight <= 0) {
        return;
    }
    values.push_back(value);
    cumulative.push_back((cumulative.empty() ? 0.0 : cumulative.back()) + weight);
}

void TrajectorySampler::Table::finish() {
    if (cumulative.empty()) {
        return;
    }
    double total = cumulative.back();
    for (auto &c : cumulative) {
        c /= total;
    }
    cumulative.back() = 1.0;
}

uint64_t TrajectorySampler::Table::sample(double u) const {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        --it;
    }
    return values[static_cast<size_t>(it - cumulative.begin())];
}

TrajectorySampler::TrajectorySampler(const Circuit &circuit, const NoiseModel &noise, Method method,
                                     const PauliString &observable, RecoveryNoiseScope scope)
    : circuit_(circuit), method_(method), scope_(scope), observable_(observable) {
    if (observable.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("Observable does not match the circuit register.");
    }
    noise.check_covers(circuit);
    MitigationPlan plan(method, noise);
    gamma_total_ = qemlab::gamma_total(circuit, plan);

    std::array<int, 2> model_of_arity{-1, -1};
    for (size_t arity = 1; arity <= 2; arity++) {
        if (!noise.has(arity)) {
            continue;
        }
        ArityModel m;
        m.arity = arity;
        const auto &channel = noise.channel(arity);
        for (size_t r = 0; r < channel.size(); r++) {
            double w = channel.error_probs()[r];
            m.noise_any.add(r, w);
            if (r != 0) {
                m.noise_hit.add(r, w);
                m.noise_rate += w;
            }
        }
        m.noise_any.finish();
        m.noise_hit.finish();
        if (method != Method::None) {
            const auto &d = plan.decomposition(arity);
            for (size_t t = 0; t < d.terms().size(); t++) {
                m.term_sign.push_back(d.sign(t));
                m.term_recovery.push_back(d.terms()[t].recovery);
                m.recovery_any.add(t, d.sigma(t));
                if (d.terms()[t].recovery != 0) {
                    m.recovery_hit.add(t, d.sigma(t));
                    m.recovery_rate += d.sigma(t);
                }
            }
            m.recovery_any.finish();
            m.recovery_hit.finish();
            m.identity_sign = d.q_identity() < 0 ? -1 : 1;
        }
        double miss = 1 - m.noise_rate;
        if (method != Method::None) {
            miss *= 1 - m.recovery_rate;
            if (scope == RecoveryNoiseScope::AllBranches) {
                miss *= 1 - m.noise_rate;
            }
        }
        m.event_rate = 1 - miss;
        model_of_arity[arity - 1] = static_cast<int>(models_.size());
        models_.push_back(std::move(m));
    }

    for (const auto &m : models_) {
        max_rate_ = std::max(max_rate_, m.event_rate);
    }
    log_miss_ = max_rate_ < 1 ? std::log1p(-max_rate_) : 0;

    const auto &ops = circuit.ops();
    slots_.resize(ops.size());
    PauliString running = observable;
    for (size_t g = ops.size(); g-- > 0;) {
        auto model = model_of_arity.at(ops[g].arity() - 1);
        const auto &m = models_[static_cast<size_t>(model)];
        slots_[g] = GateSlot{static_cast<uint8_t>(model), restricted_index(running, ops[g].qubits),
                             max_rate_ > 0 ? m.event_rate / max_rate_ : 0};
        base_sign_ *= m.identity_sign;
        running = conjugate(running, ops[g]);
    }
    ideal_value_ = running.is_diagonal() ? running.sign() : 0;
}

template <bool Record>
int TrajectorySampler::sample_event(const ArityModel &m, uint32_t gate, uint64_t observable, Xoshiro256pp &rng,
                                    Trajectory *trajectory, int &sign) const {
    bool mitigated = method_ != Method::None;
    bool noisy_identity = mitigated && scope_ == RecoveryNoiseScope::AllBranches;
    std::array<double, 3> rates{m.noise_rate, mitigated ? m.recovery_rate : 0.0, noisy_identity ? m.noise_rate : 0.0};
    size_t stages = noisy_identity ? 3 : (mitigated ? 2 : 1);

    bool forced = true;
    std::array<uint64_t, 3> draws{0, 0, 0};
    for (size_t s = 0; s < stages; s++) {
        const Table &any = s == 1 ? m.recovery_any : m.noise_any;
        const Table &hit = s == 1 ? m.recovery_hit : m.noise_hit;
        if (forced) {
            if (rng.uniform() < conditional_hit(std::span(rates).first(stages), s)) {
                draws[s] = hit.sample(rng.uniform());
                forced = false;
            }
        } else {
            draws[s] = any.sample(rng.uniform());
        }
    }

    TrajectoryEvent event;
    event.gate = gate;
    event.noise = draws[0];
    if (mitigated) {
        // draws[1] is a term index; forced-miss leaves the identity term (0).
        size_t term = static_cast<size_t>(draws[1]);
        event.recovery = m.term_recovery[term];
        sign *= m.identity_sign * m.term_sign[term];
        if (noisy_identity) {
            event.recovery_noise = draws[2];
        } else if (event.recovery != 0) {
            event.recovery_noise = m.noise_any.sample(rng.uniform());
        }
    }

    int parity = 1;
    for (auto e : {event.noise, event.recovery, event.recovery_noise}) {
        if (e != 0) {
            parity *= commutation_sign(m.arity, e, observable);
        }
    }
    if constexpr (Record) {
        trajectory->events.push_back(event);
    }
    return parity;
}

template <bool Record>
int TrajectorySampler::walk(Xoshiro256pp &rng, Trajectory *trajectory) const {
    int sign = base_sign_;
    int parity = 1;
    size_t g = 0;
    size_t count = slots_.size();
    while (max_rate_ > 0 && g < count) {
        if (max_rate_ < 1) {
            double u = 1.0 - rng.uniform();
            double gap = std::floor(std::log(u) / log_miss_);
            if (gap >= static_cast<double>(count - g)) {
                break;
            }
            g += static_cast<size_t>(gap);
        }
        const auto &slot = slots_[g];
        if (slot.accept >= 1 || rng.uniform() < slot.accept) {
            parity *= sample_event<Record>(models_[slot.model], static_cast<uint32_t>(g), slot.observable, rng,
                                           trajectory, sign);
        }
        g++;
    }
    int coin = 1;
    if (ideal_value_ == 0) {
        coin = (rng() >> 63) ? -1 : 1;
    }
    if constexpr (Record) {
        trajectory->sign = sign;
        trajectory->coin = coin;
    }
    return (ideal_value_ != 0 ? ideal_value_ * parity : coin) * sign;
}

int TrajectorySampler::sample_shot(Xoshiro256pp &rng) const {
    return walk<false>(rng, nullptr);
}

Trajectory TrajectorySampler::sample_trajectory(Xoshiro256pp &rng) const {
    Trajectory trajectory;
    walk<true>(rng, &trajectory);
    return trajectory;
}

int TrajectorySampler::outcome(const Trajectory &trajectory) const {
    if (ideal_value_ == 0) {
        return trajectory.coin * trajectory.sign;
    }
    int parity = 1;
    for (const auto &event : trajectory.events) {
        const auto &slot = slots_.at(event.gate);
        size_t arity = models_[slot.model].arity;
        for (auto e : {event.noise, event.recovery, event.recovery_noise}) {
            if (e != 0) {
                parity *= commutation_sign(arity, e, slot.observable);
            }
        }
    }
    return ideal_value_ * parity * trajectory.sign;
}

int TrajectorySampler::frame_outcome(const Trajectory &trajectory) const {
    size_t n = circuit_.num_qubits();
    PauliString frame(n);
    std::vector<bool> basis(n, false);
    const auto &ops = circuit_.ops();
    size_t next = 0;
    for (size_t g = 0; g < ops.size(); g++) {
        const auto &op = ops[g];
        // Pauli and CNOT gates are self-inverse, so G^dagger F G = G F G^dagger.
        frame = conjugate(frame, op);
        if (op.kind == GateKind::CNOT) {
            basis[op.qubits[1]] = basis[op.qubits[1]] ^ basis[op.qubits[0]];
        } else {
            for (size_t i = 0; i < op.qubits.size(); i++) {
                if (op.pauli.x(i)) {
                    basis[op.qubits[i]] = !basis[op.qubits[i]];
                }
            }
        }
        for (; next < trajectory.events.size() && trajectory.events[next].gate == g; next++) {
            const auto &event = trajectory.events[next];
            for (auto e : {event.noise, event.recovery, event.recovery_noise}) {
                auto letters = PauliString::from_index(op.arity(), e);
                PauliString full(n);
                for (size_t i = 0; i < op.arity(); i++) {
                    full.set_letter(op.qubits[i], letters.letter(i));
                }
                frame = compose(frame, full);
            }
        }
    }
    if (!observable_.is_diagonal()) {
        return trajectory.coin * trajectory.sign;
    }
    int value = observable_.sign();
    for (size_t q = 0; q < n; q++) {
        if (observable_.z(q) && (basis[q] ^ frame.x(q))) {
            value = -value;
        }
    }
    return value * trajectory.sign;
}

unsigned resolve_thread_count(unsigned requested) {
    unsigned count = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("QEMLAB_THREADS")) {
        char *end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            count = std::min(count, static_cast<unsigned>(cap));
        }
    }
    return count;
}

double theoretical_std(double gamma_tot, double analytic_mean, uint64_t shots) {
    if (shots == 0) {
        throw std::domain_error("theoretical_std needs at least one shot.");
    }
    if (!(std::abs(analytic_mean) <= gamma_tot * (1 + 1e-12))) {
        throw std::domain_error("Analytic mean " + std::to_string(analytic_mean) + " exceeds gamma_tot " +
                                std::to_string(gamma_tot) + ".");
    }
    double variance = std::max(0.0, gamma_tot * gamma_tot - analytic_mean * analytic_mean);
    return std::sqrt(variance) / std::sqrt(static_cast<double>(shots));
}

EstimatorResult sample_mitigated(const Circuit &circuit, const NoiseModel &noise, Method method,
                                 const PauliString &observable, const SamplerOptions &options) {
    if (options.shots_per_batch == 0 || options.batches == 0) {
        throw std::invalid_argument("Sampling needs at least one shot and one batch.");
    }
    TrajectorySampler sampler(circuit, noise, method, observable, options.scope);
    unsigned threads = static_cast<unsigned>(
        std::min<uint64_t>(resolve_thread_count(options.threads), options.shots_per_batch));

    EstimatorResult result;
    result.method = method;
    result.shots_per_batch = options.shots_per_batch;
    result.batches = options.batches;
    result.gamma_tot = sampler.gamma_total();
    result.seed = options.seed;
    result.clamped = options.clamp;
    result.batch_means.reserve(options.batches);

    auto run_range = [&](uint64_t batch, uint64_t begin, uint64_t end) {
        int64_t total = 0;
        for (uint64_t shot = begin; shot < end; shot++) {
            auto rng = shot_stream(options.seed, batch, shot);
            total += sampler.sample_shot(rng);
        }
        return total;
    };

    std::vector<int64_t> partial(threads);
    for (uint64_t batch = 0; batch < options.batches; batch++) {
        int64_t total = 0;
        if (threads <= 1) {
            total = run_range(batch, 0, options.shots_per_batch);
        } else {
            uint64_t chunk = (options.shots_per_batch + threads - 1) / threads;
            {
                std::vector<std::jthread> workers;
                for (unsigned t = 0; t < threads; t++) {
                    uint64_t begin = std::min(options.shots_per_batch, t * chunk);
                    uint64_t end = std::min(options.shots_per_batch, begin + chunk);
                    workers.emplace_back([&, t, begin, end] { partial[t] = run_range(batch, begin, end); });
                }
            }
            for (auto v : partial) {
                total += v;
            }
        }
        double mean = result.gamma_tot * (static_cast<double>(total) / static_cast<double>(options.shots_per_batch));
        if (options.clamp) {
            mean = std::clamp(mean, -1.0, 1.0);
        }
        result.batch_means.push_back(mean);
    }

    CompensatedSum sum;
    for (double v : result.batch_means) {
        sum.add(v);
    }
    result.mean = sum.value() / static_cast<double>(options.batches);
    if (options.batches > 1) {
        CompensatedSum squares;
        for (double v : result.batch_means) {
            squares.add((v - result.mean) * (v - result.mean));
        }
        result.std_of_batch_means = std::sqrt(squares.value() / static_cast<double>(options.batches - 1));
    }
    return result;
}

}  // namespace qemlab
