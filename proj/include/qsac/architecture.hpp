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
#include <string>
#include <vector>

#include "qsac/circuit.hpp"
#include "qsac/dense.hpp"

namespace qsac::hybrid {

enum class Role { actor = 0, critic = 1 };

/**
 * @brief Executable realization of an architecture string.
 *
 * Architecture strings use the notation of the experiment tables:
 * parenthesized width lists with an optional `VQA(k layers)` token, e.g.
 * `(6,7)(8,(1,1))` or `(8,VQA(20 layers),8,1)`. Parentheses group only;
 * width sequences are flattened and equal widths merge across group
 * boundaries, so `(8,64)(64,64)(64,1)` and `(8,64,64,1)` are the same net.
 *
 * Role-specific rules:
 *  - Actors end in two linear heads (mean, log-std) of action_dim outputs
 *    each. The head marker is a trailing nested `(1,1)` group or, absent
 *    that, the trailing width token. A VQC directly after the input width
 *    consumes the raw observation (one qubit per feature).
 *  - Critics end in a width-1 output layer. A VQC after the input width
 *    gets a linear input->n_qubits projection inserted ahead of it: the
 *    critic keeps classical layers on both sides of the circuit.
 */
struct NetworkPlan {
    struct Item {
        enum class Kind { dense = 0, vqc = 1 };
        Kind kind = Kind::dense;
        // dense
        int in_dim = 0;
        int out_dim = 0;
        nn::Activation act = nn::Activation::linear;
        // vqc (output width = n_qubits, one <Z> per qubit)
        sim::CircuitSpec circuit;
    };

    Role role = Role::critic;
    int input_dim = 0;
    int action_dim = 0; // actors only
    std::vector<Item> items;
    bool has_heads = false; // true iff role == actor
    int head_in_dim = 0;    // trunk output width feeding the heads
    std::string source;     // original architecture string
};

/// Parses and realizes an architecture string. action_dim is ignored for
/// critics. Throws ParseError on malformed text and ConfigError when the
/// string contradicts the declared dimensions.
NetworkPlan parse_architecture(const std::string &text, Role role,
                               int input_dim, int action_dim);

/// True number of learnable scalars (dense weights and biases, circuit
/// encoding weights and rotation angles, head weights and biases).
std::size_t parameter_count(const NetworkPlan &plan);

/// Reference-table counting convention for critic sizes: weight-matrix
/// entries of the hidden dense transitions only (final output layer and all
/// biases excluded). Used for reporting against the published per-critic
/// figures, never for training.
std::size_t hidden_weight_count(const NetworkPlan &plan);

/// One-line summary, e.g. "dense 6->7 linear | dense 7->8 relu | heads 8->2x2".
std::string describe(const NetworkPlan &plan);

} // namespace qsac::hybrid
