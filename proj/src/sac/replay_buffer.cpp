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

#include "qsac/replay_buffer.hpp"

#include "qsac/errors.hpp"

namespace qsac::sac {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw ConfigError("replay capacity must be positive");
    }
}

void ReplayBuffer::push(const Transition &t) {
    if (data_.size() < capacity_) {
        data_.push_back(t);
    } else {
        data_[next_] = t;
        next_ = (next_ + 1) % capacity_;
    }
    ++pushed_;
}

bool ReplayBuffer::sample(std::size_t batch_size, RandomStream &rng,
                          std::vector<Transition> &out) const {
    if (data_.size() < batch_size) {
        return false;
    }
    out.resize(batch_size);
    for (std::size_t i = 0; i < batch_size; ++i) {
        out[i] = data_[rng.uniform_index(data_.size())];
    }
    return true;
}

const Transition &ReplayBuffer::at(std::size_t i) const {
    if (i >= data_.size()) {
        throw DimensionError("replay index out of range");
    }
    // Before the first eviction next_ is 0 and push order is slot order;
    // afterwards next_ points at the oldest slot.
    return data_[(next_ + i) % data_.size()];
}

} // namespace qsac::sac
