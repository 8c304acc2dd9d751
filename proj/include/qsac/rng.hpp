// Copyright 2026 The qsac authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qsac {

/// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive the seed of a named sub-stream from a root seed. Tags are small
/// integers; two distinct tags give statistically independent streams.
inline std::uint64_t substream_seed(std::uint64_t root, std::uint64_t tag) {
    return mix_seed(root ^ (0xd1b54a32d192ed03ULL * (tag + 1)));
}

/**
 * @brief Deterministic random stream.
 *
 * Wraps std::mt19937_64 (whose sequence is fixed by the standard) with
 * hand-rolled distributions, because the standard library's distribution
 * objects are implementation-defined. Every draw consumes a fixed number of
 * engine outputs, so sequences are reproducible across platforms.
 */
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) {
        // Modulo bias is < 2^-40 for any n this project uses (n <= 2^24).
        return static_cast<std::size_t>(engine_() % n);
    }

    /// Standard normal draw (Box-Muller, trigonometric form). Consumes two
    /// engine outputs every second call.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1]: avoids log(0).
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace qsac
