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
#include "qsac/statevector.hpp"

namespace qsac::sim {

/**
 * @brief Structure of the variational circuit.
 *
 * The gate sequence is:
 *   encode(x), then for each middle layer: per-qubit RX,RY,RZ rotations, a
 *   CNOT ring (control i -> target (i+1) mod n), and a re-encode of x when
 *   `reupload` is set; finally a per-qubit RY,RZ layer (RX,RY,RZ when
 *   `last_layer_yz_only` is false) followed by one more CNOT ring.
 *
 * Encoding is an RX(w_q * x_q) on each qubit q; the weights w are learnable
 * and shared by every encoding occurrence. Readout is the per-qubit <Z>.
 */
struct CircuitSpec {
    int n_qubits = 1;
    int n_layers = 1;
    bool reupload = true;
    bool last_layer_yz_only = true;

    void validate() const;
    /// Number of encoding occurrences in the gate sequence.
    int encode_occurrences() const {
        return reupload ? n_layers : 1;
    }
    bool operator==(const CircuitSpec &) const = default;
};

/**
 * @brief Learnable circuit parameters.
 *
 * `encode_weights` has one entry per qubit (shared across re-uploads).
 * `rot` is laid out middle layers first ((layer, qubit, axis) with axes
 * x,y,z), then the final layer ((qubit, axis) with axes y,z when the final
 * layer drops RX). flatten() concatenates encode_weights then rot.
 */
struct CircuitParams {
    std::vector<double> encode_weights;
    std::vector<double> rot;

    static std::size_t rot_size(const CircuitSpec &spec);
    static std::size_t size(const CircuitSpec &spec);
    static CircuitParams zeros(const CircuitSpec &spec);
    /// Angles drawn uniformly from [0, pi).
    static CircuitParams random(const CircuitSpec &spec, RandomStream &rng);

    std::vector<double> flatten() const;
    static CircuitParams unflatten(const CircuitSpec &spec,
                                   const std::vector<double> &flat);
    void check_shape(const CircuitSpec &spec) const;
};

/**
 * @brief One gate of the expanded plan, with its parameter source.
 */
struct PlanOp {
    enum class Source { encode, rot, fixed };
    GateKind kind;
    int qubit;
    int control = -1;    // CNOT only
    Source source = Source::fixed;
    int index = -1;      // encode: qubit/feature index; rot: index into rot
};

/// Deterministic expansion of the gate sequence described by `spec`.
std::vector<PlanOp> expand_plan(const CircuitSpec &spec);

/// Angle of a plan op under (params, x). CNOTs have no angle.
double resolve_angle(const PlanOp &op, const CircuitParams &params,
                     const std::vector<double> &x);

/// Applies the encoding layer RX(weights_q * x_q) to each qubit.
void encode_input(StateVector &state, const std::vector<double> &x,
                  const std::vector<double> &weights);

/// Runs the circuit from |0...0> and returns the per-qubit <Z> readout.
std::vector<double> run_circuit(const CircuitSpec &spec,
                                const CircuitParams &params,
                                const std::vector<double> &x);

/// Same as run_circuit but returns the final state.
StateVector run_circuit_state(const CircuitSpec &spec,
                              const CircuitParams &params,
                              const std::vector<double> &x);

} // namespace qsac::sim
