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

#include "qsac/statevector.hpp"

#include <cmath>
#include <string>

#include "qsac/kernels.hpp"

namespace qsac::sim {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("statevector width must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
    }
    const std::size_t len = std::size_t{1} << n_qubits;
    re_.assign(len, 0.0);
    im_.assign(len, 0.0);
    re_[0] = 1.0;
}

std::vector<std::complex<double>> StateVector::amplitudes() const {
    std::vector<std::complex<double>> amps(size());
    for (std::size_t k = 0; k < size(); ++k) {
        amps[k] = {re_[k], im_[k]};
    }
    return amps;
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw DimensionError("qubit index " + std::to_string(qubit) +
                             " out of range for " + std::to_string(n_qubits_) +
                             " qubits");
    }
}

void StateVector::apply_rx(int qubit, double angle) {
    check_qubit(qubit);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    // [[c, -i s], [-i s, c]]
    kernels::active().apply2x2(re(), im(), size(), qubit, c, 0.0, 0.0, -s,
                               0.0, -s, c, 0.0);
}

void StateVector::apply_ry(int qubit, double angle) {
    check_qubit(qubit);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    // [[c, -s], [s, c]]
    kernels::active().apply2x2(re(), im(), size(), qubit, c, 0.0, -s, 0.0, s,
                               0.0, c, 0.0);
}

void StateVector::apply_rz(int qubit, double angle) {
    check_qubit(qubit);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    // diag(e^{-i a/2}, e^{+i a/2})
    kernels::active().apply_diag2(re(), im(), size(), qubit, c, -s, c, s);
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw DimensionError("cnot control equals target: " +
                             std::to_string(control));
    }
    kernels::active().apply_cnot(re(), im(), size(), control, target);
}

void StateVector::apply_pauli_of(GateKind kind, int qubit) {
    check_qubit(qubit);
    switch (kind) {
    case GateKind::RX: // X = [[0,1],[1,0]]
        kernels::active().apply2x2(re(), im(), size(), qubit, 0, 0, 1, 0, 1, 0,
                                   0, 0);
        return;
    case GateKind::RY: // Y = [[0,-i],[i,0]]
        kernels::active().apply2x2(re(), im(), size(), qubit, 0, 0, 0, -1, 0,
                                   1, 0, 0);
        return;
    case GateKind::RZ: // Z = diag(1,-1)
        kernels::active().apply_diag2(re(), im(), size(), qubit, 1, 0, -1, 0);
        return;
    case GateKind::CNOT:
        break;
    }
    throw DimensionError("no Pauli generator for CNOT");
}

void StateVector::apply(const GateOp &gate) {
    switch (gate.kind) {
    case GateKind::RX:
        apply_rx(gate.qubit, gate.angle);
        return;
    case GateKind::RY:
        apply_ry(gate.qubit, gate.angle);
        return;
    case GateKind::RZ:
        apply_rz(gate.qubit, gate.angle);
        return;
    case GateKind::CNOT:
        apply_cnot(gate.control, gate.qubit);
        return;
    }
    throw DimensionError("unknown gate kind");
}

double StateVector::expectation_z(int qubit) const {
    check_qubit(qubit);
    return kernels::active().expectation_z(re(), im(), size(), qubit);
}

double StateVector::norm_sq() const {
    return kernels::active().sum_sq(re(), im(), size());
}

StateVector init_state(int n_qubits) { return StateVector(n_qubits); }

void apply_gate(StateVector &state, const GateOp &gate) { state.apply(gate); }

double expectation_z(const StateVector &state, int qubit) {
    return state.expectation_z(qubit);
}

} // namespace qsac::sim
