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

#ifndef QEMLAB_RNG_H
#define QEMLAB_RNG_H

#include <array>
#include <cstdint>

namespace qemlab {

/// Philox4x32-10 counter-based bijection (Salmon et al., SC'11).
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// SplitMix64 step; used to expand a 64-bit seed into generator state.
uint64_t splitmix64(uint64_t &state);

/// xoshiro256++ 1.0. Satisfies UniformRandomBitGenerator.
class Xoshiro256pp {
   public:
    using result_type = uint64_t;

    explicit Xoshiro256pp(uint64_t seed);
    Xoshiro256pp(uint64_t seed_a, uint64_t seed_b);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return ~result_type{0};
    }

    result_type operator()();

    /// Uniform double on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    std::array<uint64_t, 4> s_;
};

/// Independent stream for one Monte Carlo shot, keyed by the master seed and
/// addressed by (batch, shot). Streams do not depend on how shots are
/// scheduled across threads.
Xoshiro256pp shot_stream(uint64_t seed, uint64_t batch, uint64_t shot);

}  // namespace qemlab

#endif
