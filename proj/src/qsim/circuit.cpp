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

#include "qsac/circuit.hpp"

#include <string>

namespace qsac::sim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void CircuitSpec::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("circuit n_qubits must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
    }
    if (n_layers < 1) {
        throw ConfigError("circuit n_layers must be >= 1, got " +
                          std::to_string(n_layers));
    }
}

std::size_t CircuitParams::rot_size(const CircuitSpec &spec) {
    const std::size_t n = static_cast<std::size_t>(spec.n_qubits);
    const std::size_t middle = 3 * n * static_cast<std::size_t>(spec.n_layers - 1);
    const std::size_t last = (spec.last_layer_yz_only ? 2 : 3) * n;
    return middle + last;
}

std::size_t CircuitParams::size(const CircuitSpec &spec) {
    return static_cast<std::size_t>(spec.n_qubits) + rot_size(spec);
}

CircuitParams CircuitParams::zeros(const CircuitSpec &spec) {
    spec.validate();
    CircuitParams p;
    p.encode_weights.assign(static_cast<std::size_t>(spec.n_qubits), 0.0);
    p.rot.assign(rot_size(spec), 0.0);
    return p;
}

CircuitParams CircuitParams::random(const CircuitSpec &spec,
                                    RandomStream &rng) {
    CircuitParams p = zeros(spec);
    for (double &w : p.encode_weights) {
        w = rng.uniform(0.0, kPi);
    }
    for (double &a : p.rot) {
        a = rng.uniform(0.0, kPi);
    }
    return p;
}

std::vector<double> CircuitParams::flatten() const {
    std::vector<double> flat;
    flat.reserve(encode_weights.size() + rot.size());
    flat.insert(flat.end(), encode_weights.begin(), encode_weights.end());
    flat.insert(flat.end(), rot.begin(), rot.end());
    return flat;
}

CircuitParams CircuitParams::unflatten(const CircuitSpec &spec,
                                       const std::vector<double> &flat) {
    if (flat.size() != size(spec)) {
        throw DimensionError("flattened circuit parameter vector has size " +
                             std::to_string(flat.size()) + ", expected " +
                             std::to_string(size(spec)));
    }
    CircuitParams p;
    const std::size_t n = static_cast<std::size_t>(spec.n_qubits);
    p.encode_weights.assign(flat.begin(), flat.begin() + n);
    p.rot.assign(flat.begin() + n, flat.end());
    return p;
}

void CircuitParams::check_shape(const CircuitSpec &spec) const {
    if (encode_weights.size() != static_cast<std::size_t>(spec.n_qubits) ||
        rot.size() != rot_size(spec)) {
        throw DimensionError("circuit parameters do not match spec shape");
    }
}

std::vector<PlanOp> expand_plan(const CircuitSpec &spec) {
    spec.validate();
    const int n = spec.n_qubits;
    std::vector<PlanOp> plan;

    auto add_encode = [&] {
        for (int q = 0; q < n; ++q) {
            plan.push_back({GateKind::RX, q, -1, PlanOp::Source::encode, q});
        }
    };
    auto add_ring = [&] {
        for (int i = 0; i < n && n >= 2; ++i) {
            plan.push_back({GateKind::CNOT, (i + 1) % n, i,
                            PlanOp::Source::fixed, -1});
        }
    };

    add_encode();
    int rot_index = 0;
    for (int layer = 1; layer < spec.n_layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            plan.push_back(
                {GateKind::RX, q, -1, PlanOp::Source::rot, rot_index++});
            plan.push_back(
                {GateKind::RY, q, -1, PlanOp::Source::rot, rot_index++});
            plan.push_back(
                {GateKind::RZ, q, -1, PlanOp::Source::rot, rot_index++});
        }
        add_ring();
        if (spec.reupload) {
            add_encode();
        }
    }
    for (int q = 0; q < n; ++q) {
        if (!spec.last_layer_yz_only) {
            plan.push_back(
                {GateKind::RX, q, -1, PlanOp::Source::rot, rot_index++});
        }
        plan.push_back({GateKind::RY, q, -1, PlanOp::Source::rot, rot_index++});
        plan.push_back({GateKind::RZ, q, -1, PlanOp::Source::rot, rot_index++});
    }
    add_ring();
    return plan;
}

double resolve_angle(const PlanOp &op, const CircuitParams &params,
                     const std::vector<double> &x) {
    switch (op.source) {
    case PlanOp::Source::encode:
        return params.encode_weights[static_cast<std::size_t>(op.index)] *
               x[static_cast<std::size_t>(op.index)];
    case PlanOp::Source::rot:
        return params.rot[static_cast<std::size_t>(op.index)];
    case PlanOp::Source::fixed:
        return 0.0;
    }
    return 0.0;
}

void encode_input(StateVector &state, const std::vector<double> &x,
                  const std::vector<double> &weights) {
    const std::size_t n = static_cast<std::size_t>(state.n_qubits());
    if (x.size() != n || weights.size() != n) {
        throw DimensionError(
            "encode_input expects one feature and one weight per qubit");
    }
    for (std::size_t q = 0; q < n; ++q) {
        state.apply_rx(static_cast<int>(q), weights[q] * x[q]);
    }
}

StateVector run_circuit_state(const CircuitSpec &spec,
                              const CircuitParams &params,
                              const std::vector<double> &x) {
    spec.validate();
    params.check_shape(spec);
    if (x.size() != static_cast<std::size_t>(spec.n_qubits)) {
        throw DimensionError("input vector size " + std::to_string(x.size()) +
                             " does not match n_qubits " +
                             std::to_string(spec.n_qubits));
    }
    StateVector state = init_state(spec.n_qubits);
    for (const PlanOp &op : expand_plan(spec)) {
        if (op.kind == GateKind::CNOT) {
            state.apply_cnot(op.control, op.qubit);
        } else {
            state.apply({op.kind, op.qubit, -1, resolve_angle(op, params, x)});
        }
    }
    return state;
}

std::vector<double> run_circuit(const CircuitSpec &spec,
                                const CircuitParams &params,
                                const std::vector<double> &x) {
    const StateVector state = run_circuit_state(spec, params, x);
    std::vector<double> out(static_cast<std::size_t>(spec.n_qubits));
    for (int q = 0; q < spec.n_qubits; ++q) {
        out[static_cast<std::size_t>(q)] = state.expectation_z(q);
    }
    return out;
}

} // namespace qsac::sim
