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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsac/rng.hpp"

namespace qsac::sac {

struct Transition {
    std::array<double, 6> obs{};
    std::array<double, 2> action{}; // raw torques
    double reward = 0.0;
    std::array<double, 6> next_obs{};
    double done = 0.0; // 1 => no bootstrapping through next_obs
};

/**
 * @brief Fixed-capacity ring of transitions with uniform sampling.
 *
 * Slots fill in push order; once full, the oldest entry is overwritten.
 * Sampling is uniform with replacement over the stored items.
 */
class ReplayBuffer {
  public:
    explicit ReplayBuffer(std::size_t capacity);

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return data_.size(); }
    /// Total pushes ever (exceeds size() once eviction starts).
    std::uint64_t pushed() const { return pushed_; }

    void push(const Transition &t);

    /// False (and `out` untouched) while size() < batch_size; otherwise
    /// fills `out` with batch_size uniform draws.
    bool sample(std::size_t batch_size, RandomStream &rng,
                std::vector<Transition> &out) const;

    /// Item by age: at(0) is the oldest stored transition.
    const Transition &at(std::size_t i) const;

  private:
    std::size_t capacity_;
    std::vector<Transition> data_;
    std::size_t next_ = 0; // overwrite cursor once data_ is full
    std::uint64_t pushed_ = 0;
};

} // namespace qsac::sac
