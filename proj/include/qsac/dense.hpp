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
#include <vector>

#include "qsac/rng.hpp"

namespace qsac::nn {

enum class Activation { linear = 0, relu = 1 };

const char *activation_name(Activation act);

/**
 * @brief One affine layer (y = act(W x + b)) viewed over an external flat
 * parameter block.
 *
 * The layer owns no storage. Its weights live at `offset` inside a parameter
 * vector owned by the enclosing network, laid out as [W row-major
 * (out_dim * in_dim), b (out_dim)]. Gradients use the same layout inside a
 * parallel gradient vector. This keeps every network a single contiguous
 * parameter array, which is what the Adam / polyak kernels and the
 * checkpoint format operate on.
 */
struct DenseLayer {
    int in_dim = 0;
    int out_dim = 0;
    Activation act = Activation::linear;
    std::size_t offset = 0;

    std::size_t weight_count() const {
        return static_cast<std::size_t>(in_dim) *
               static_cast<std::size_t>(out_dim);
    }
    std::size_t param_count() const {
        return weight_count() + static_cast<std::size_t>(out_dim);
    }

    /// Fills W and b with U(-1/sqrt(in_dim), 1/sqrt(in_dim)) draws.
    void init(double *base, RandomStream &rs) const;

    /// y = act(W x + b). x has in_dim entries, y has out_dim.
    void forward(const double *base, const double *x, double *y) const;

    /**
     * @brief Backward pass for one sample.
     *
     * Inputs are the cached forward pair (x, y) and the upstream derivative
     * dy = dL/dy. Accumulates dL/dW and dL/db into `gbase` (same layout as
     * `base`; pass nullptr to skip parameter gradients) and, when `dx` is
     * non-null, accumulates dL/dx into it; the caller zeroes dx beforehand.
     * `scratch` is resized to out_dim and holds the pre-activation
     * derivative.
     */
    void backward(const double *base, double *gbase, const double *x,
                  const double *y, const double *dy, double *dx,
                  std::vector<double> &scratch) const;
};

} // namespace qsac::nn
