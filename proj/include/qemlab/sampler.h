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

#ifndef QEMLAB_SAMPLER_H
#define QEMLAB_SAMPLER_H

#include <cstdint>
#include <span>
#include <vector>

#include "qemlab/circuit.h"
#include "qemlab/pauli.h"
#include "qemlab/quasiprob.h"
#include "qemlab/rng.h"

namespace qemlab {

struct SamplerOptions {
    uint64_t shots_per_batch = 1;
    uint64_t batches = 1;
    uint64_t seed = 0;
    /// Clamp each batch mean to [-1, 1] before averaging.
    bool clamp = false;
    /// 0 picks the hardware concurrency, capped by QEMLAB_THREADS.
    unsigned threads = 0;
    RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly;
};

struct EstimatorResult {
    Method method = Method::None;
    double mean = 0;
    std::vector<double> batch_means;
    /// Sample standard deviation of the batch means (0 for a single batch).
    double std_of_batch_means = 0;
    uint64_t shots_per_batch = 0;
    uint64_t batches = 0;
    double gamma_tot = 1;
    uint64_t seed = 0;
    bool clamped = false;

    bool operator==(const EstimatorResult &) const = default;
};

/// Non-identity Paulis that hit the register right after one gate, as ranks
/// over that gate's qubits. Zero means "nothing happened" for that slot.
struct TrajectoryEvent {
    uint32_t gate = 0;
    uint64_t noise = 0;
    uint64_t recovery = 0;
    uint64_t recovery_noise = 0;
    bool operator==(const TrajectoryEvent &) const = default;
};

struct Trajectory {
    std::vector<TrajectoryEvent> events;
    /// Product of sgn(q) over every chosen recovery term.
    int sign = 1;
    /// Outcome used when the observable has no definite value on the ideal
    /// output state.
    int coin = 1;
};

/// Monte Carlo shot sampler for Clifford circuits with Pauli noise.
///
/// A shot walks the circuit with a Pauli frame: after each gate the gate's
/// noise error, the sampled recovery and (for inserted recoveries) the
/// recovery's own noise are multiplied in. Because frames only ever flip the
/// sign of the observable, the walk jumps straight between gates where
/// something non-identity happens (geometric skipping with thinning) and
/// scores each event against the observable propagated back to that gate.
class TrajectorySampler {
   public:
    TrajectorySampler(const Circuit &circuit, const NoiseModel &noise, Method method, const PauliString &observable,
                      RecoveryNoiseScope scope = RecoveryNoiseScope::NonIdentityOnly);

    double gamma_total() const {
        return gamma_total_;
    }
    Method method() const {
        return method_;
    }

    /// One shot; returns sgn * m in {-1, +1}.
    int sample_shot(Xoshiro256pp &rng) const;

    /// Draws the full event list of one shot using the same random stream
    /// consumption as `sample_shot`.
    Trajectory sample_trajectory(Xoshiro256pp &rng) const;

    /// Outcome of a trajectory scored against the back-propagated observable.
    int outcome(const Trajectory &trajectory) const;

    /// Reference outcome: pushes an explicit Pauli frame forward through every
    /// gate and measures the observable on the frame-flipped ideal output
    /// basis state.
    int frame_outcome(const Trajectory &trajectory) const;

   private:
    struct Table {
        std::vector<uint64_t> values;
        std::vector<double> cumulative;
        void add(uint64_t value, double weight);
        void finish();
        uint64_t sample(double u) const;
    };
    struct ArityModel {
        size_t arity = 0;
        double noise_rate = 0;
        Table noise_any;
        Table noise_hit;
        double recovery_rate = 0;
        Table recovery_any;
        Table recovery_hit;
        std::vector<int> term_sign;
        std::vector<uint64_t> term_recovery;
        int identity_sign = 1;
        double event_rate = 0;
    };
    struct GateSlot {
        uint8_t model;
        uint64_t observable;
        double accept;
    };

    template <bool Record>
    int walk(Xoshiro256pp &rng, Trajectory *trajectory) const;
    template <bool Record>
    int sample_event(const ArityModel &m, uint32_t gate, uint64_t observable, Xoshiro256pp &rng,
                     Trajectory *trajectory, int &sign) const;

    Circuit circuit_;
    Method method_;
    RecoveryNoiseScope scope_;
    PauliString observable_;
    std::vector<ArityModel> models_;
    std::vector<GateSlot> slots_;
    double max_rate_ = 0;
    double log_miss_ = 0;
    int base_sign_ = 1;
    int ideal_value_ = 0;
    double gamma_total_ = 1;
};

/// Runs `options.batches` batches of `options.shots_per_batch` shots. Results
/// depend only on the inputs and the seed, never on the thread count.
EstimatorResult sample_mitigated(const Circuit &circuit, const NoiseModel &noise, Method method,
                                 const PauliString &observable, const SamplerOptions &options);

/// Standard deviation of the mean of `shots` draws of a +-gamma_tot variable
/// with expectation `analytic_mean`.
double theoretical_std(double gamma_tot, double analytic_mean, uint64_t shots);

/// Thread count honoring the QEMLAB_THREADS cap; `requested` 0 means auto.
unsigned resolve_thread_count(unsigned requested);

}  // namespace qemlab

#endif
