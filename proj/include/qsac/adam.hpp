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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsac::nn {

/**
 * @brief Adam optimizer over one flat parameter vector.
 *
 * Standard update with bias correction:
 *   m <- b1 m + (1 - b1) g
 *   v <- b2 v + (1 - b2) g^2
 *   p <- p - lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
 *
 * The elementwise loop runs through the kernel table so the scalar and AVX2
 * builds stay bit-identical (both use separate mul + add).
 */
class Adam {
  public:
    Adam() = default;
    Adam(std::size_t n, double lr, double beta1 = 0.9, double beta2 = 0.999,
         double eps = 1e-8);

    /// One update. `params` and `grads` must hold size() entries.
    void step(double *params, const double *grads);

    std::size_t size() const { return n_; }
    double lr() const { return lr_; }
    std::uint64_t steps_taken() const { return t_; }

    const std::vector<double> &first_moment() const { return m_; }
    const std::vector<double> &second_moment() const { return v_; }

  private:
    std::size_t n_ = 0;
    double lr_ = 0.0;
    double b1_ = 0.9;
    double b2_ = 0.999;
    double eps_ = 1e-8;
    std::uint64_t t_ = 0;
    std::vector<double> m_;
    std::vector<double> v_;
};

} // namespace qsac::nn
