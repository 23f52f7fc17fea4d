// Copyright 2026 The mrb Authors
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

#ifndef MRB_RNG_HPP
#define MRB_RNG_HPP

#include <array>
#include <cstdint>

namespace mrb {

/// SplitMix64 step (Steele, Lea & Flood). Advances `state` and returns the
/// next output. Used for seed expansion and counter-mode seed derivation.
inline constexpr uint64_t split_mix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent randomness streams. Every consumer of randomness derives its
/// seed from a parent seed, a stream tag, and a counter, so that distinct
/// subsystems never share a stream even when they share a master seed.
enum class SeedStream : uint64_t {
    CircuitSampling = 1,
    ShotSimulation = 2,
    ModelSampling = 3,
    EpsilonEstimation = 4,
    Bootstrap = 5,
    Validation = 6,
};

/// Counter-mode seed derivation, frozen for reproducibility:
/// two chained SplitMix64 rounds keyed by (stream + 1) and (counter + 1).
/// Multi-index counters are packed by the caller, e.g. (depth_index << 32) | circuit_index.
inline constexpr uint64_t derive_seed(uint64_t base, SeedStream stream, uint64_t counter) {
    uint64_t s = base + 0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(stream) + 1);
    uint64_t mixed = split_mix64(s);
    s = mixed + 0x9E3779B97F4A7C15ULL * (counter + 1);
    return split_mix64(s);
}

/// xoshiro256** (Blackman & Vigna, public domain), seeded via SplitMix64.
/// Self-contained so that streams are bit-identical across platforms and
/// standard library implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t s = seed;
        for (auto& word : state_) {
            word = split_mix64(s);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double real01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * real01();
    }

    bool bernoulli(double p) {
        return real01() < p;
    }

    /// Unbiased uniform integer in [0, bound) (Lemire's method with rejection).
    uint32_t below(uint32_t bound) {
        uint32_t x = static_cast<uint32_t>(next());
        uint64_t m = static_cast<uint64_t>(x) * bound;
        auto low = static_cast<uint32_t>(m);
        if (low < bound) {
            const uint32_t threshold = (0u - bound) % bound;
            while (low < threshold) {
                x = static_cast<uint32_t>(next());
                m = static_cast<uint64_t>(x) * bound;
                low = static_cast<uint32_t>(m);
            }
        }
        return static_cast<uint32_t>(m >> 32);
    }

  private:
    static constexpr uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<uint64_t, 4> state_{};
};

}  // namespace mrb

#endif
