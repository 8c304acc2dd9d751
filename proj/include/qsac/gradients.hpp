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

#include <vector>

#include "qsac/circuit.hpp"

namespace qsac::sim {

/**
 * @brief Gradient of sum_q upstream_q * <Z_q> w.r.t. the flattened circuit
 * parameters (encode weights first, then rotation angles), via the
 * parameter-shift rule.
 *
 * Every parameterized gate is a rotation, so each occurrence obeys the exact
 * +/- pi/2 shift identity with coefficient 1/2. Encoding weights enter as the
 * product angle w_q * x_q; their derivative is the shifted difference scaled
 * by x_q, summed over all occurrences of the weight.
 */
std::vector<double> grad_parameter_shift(const CircuitSpec &spec,
                                         const CircuitParams &params,
                                         const std::vector<double> &x,
                                         const std::vector<double> &upstream);

struct AdjointGradients {
    std::vector<double> params; // d/d flatten(params); empty if not requested
    std::vector<double> inputs; // d/d x_q; empty if not requested
};

/**
 * @brief Adjoint-mode gradient of sum_q upstream_q * <Z_q>.
 *
 * Single forward pass plus one reverse sweep over the gate plan; O(gates)
 * statevector operations total. Returns gradients w.r.t. the flattened
 * parameters and w.r.t. the input features (both restricted by the `need_*`
 * flags; input gradients flow through the encoding angles).
 */
AdjointGradients grad_adjoint(const CircuitSpec &spec,
                              const CircuitParams &params,
                              const std::vector<double> &x,
                              const std::vector<double> &upstream,
                              bool need_params = true,
                              bool need_inputs = false);

} // namespace qsac::sim
