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

#include <complex>
#include <cstddef>
#include <vector>

#include "qsac/errors.hpp"

namespace qsac::sim {

enum class GateKind { RX, RY, RZ, CNOT };

/**
 * @brief One gate application: a rotation R_a(angle) = exp(-i*angle*A/2) on
 * `qubit`, or a CNOT with `control` -> `qubit`.
 */
struct GateOp {
    GateKind kind;
    int qubit;
    int control = -1; // CNOT only
    double angle = 0.0;

    static GateOp rx(int q, double angle) {
        return {GateKind::RX, q, -1, angle};
    }
    static GateOp ry(int q, double angle) {
        return {GateKind::RY, q, -1, angle};
    }
    static GateOp rz(int q, double angle) {
        return {GateKind::RZ, q, -1, angle};
    }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, target, control, 0.0};
    }
};

/**
 * @brief n-qubit statevector with split real/imag storage.
 *
 * Amplitude index bit q holds the basis state of qubit q (qubit 0 is the
 * least significant bit). Construction yields |0...0>.
 */
class StateVector {
  public:
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return re_.size(); }

    std::complex<double> amplitude(std::size_t k) const {
        return {re_.at(k), im_.at(k)};
    }
    std::vector<std::complex<double>> amplitudes() const;

    void apply(const GateOp &gate);
    void apply_rx(int qubit, double angle);
    void apply_ry(int qubit, double angle);
    void apply_rz(int qubit, double angle);
    void apply_cnot(int control, int target);
    /// Applies the Pauli generator of `kind` (X for RX, ...); used by the
    /// adjoint differentiation path.
    void apply_pauli_of(GateKind kind, int qubit);

    double expectation_z(int qubit) const;
    double norm_sq() const;

    double *re() { return re_.data(); }
    double *im() { return im_.data(); }
    const double *re() const { return re_.data(); }
    const double *im() const { return im_.data(); }

  private:
    void check_qubit(int qubit) const;

    int n_qubits_;
    std::vector<double> re_, im_;
};

/// Maximum simulated register width.
inline constexpr int kMaxQubits = 12;

/// |0...0> on n qubits. Throws ConfigError unless 1 <= n <= 12.
StateVector init_state(int n_qubits);

/// Applies one gate in place. Throws DimensionError on bad indices.
void apply_gate(StateVector &state, const GateOp &gate);

/// <Z_qubit> of the current state.
double expectation_z(const StateVector &state, int qubit);

} // namespace qsac::sim
