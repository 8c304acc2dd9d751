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

#include "qsac/gradients.hpp"

#include <cmath>

#include "qsac/kernels.hpp"

namespace qsac::sim {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

void check_io(const CircuitSpec &spec, const CircuitParams &params,
              const std::vector<double> &x,
              const std::vector<double> &upstream) {
    spec.validate();
    params.check_shape(spec);
    const std::size_t n = static_cast<std::size_t>(spec.n_qubits);
    if (x.size() != n) {
        throw DimensionError("gradient input size does not match n_qubits");
    }
    if (upstream.size() != n) {
        throw DimensionError("upstream size does not match n_qubits");
    }
}

std::vector<double> run_with_angles(int n_qubits,
                                    const std::vector<PlanOp> &plan,
                                    const std::vector<double> &angles) {
    StateVector state = init_state(n_qubits);
    for (std::size_t j = 0; j < plan.size(); ++j) {
        const PlanOp &op = plan[j];
        if (op.kind == GateKind::CNOT) {
            state.apply_cnot(op.control, op.qubit);
        } else {
            state.apply({op.kind, op.qubit, -1, angles[j]});
        }
    }
    std::vector<double> out(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) {
        out[static_cast<std::size_t>(q)] = state.expectation_z(q);
    }
    return out;
}

kernels::Pauli pauli_of(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return kernels::Pauli::X;
    case GateKind::RY:
        return kernels::Pauli::Y;
    default:
        return kernels::Pauli::Z;
    }
}

} // namespace

std::vector<double> grad_parameter_shift(const CircuitSpec &spec,
                                         const CircuitParams &params,
                                         const std::vector<double> &x,
                                         const std::vector<double> &upstream) {
    check_io(spec, params, x, upstream);
    const std::vector<PlanOp> plan = expand_plan(spec);
    const std::size_t n = static_cast<std::size_t>(spec.n_qubits);

    std::vector<double> base(plan.size(), 0.0);
    for (std::size_t j = 0; j < plan.size(); ++j) {
        base[j] = resolve_angle(plan[j], params, x);
    }

    std::vector<double> grad(CircuitParams::size(spec), 0.0);
    std::vector<double> shifted = base;
    for (std::size_t j = 0; j < plan.size(); ++j) {
        const PlanOp &op = plan[j];
        if (op.source == PlanOp::Source::fixed) {
            continue;
        }
        shifted[j] = base[j] + kHalfPi;
        const std::vector<double> plus =
            run_with_angles(spec.n_qubits, plan, shifted);
        shifted[j] = base[j] - kHalfPi;
        const std::vector<double> minus =
            run_with_angles(spec.n_qubits, plan, shifted);
        shifted[j] = base[j];

        double weighted = 0.0;
        for (std::size_t q = 0; q < n; ++q) {
            weighted += upstream[q] * 0.5 * (plus[q] - minus[q]);
        }
        const std::size_t feat = static_cast<std::size_t>(op.index);
        if (op.source == PlanOp::Source::encode) {
            // d(w*x)/dw = x: the shift applies to the product angle.
            grad[feat] += x[feat] * weighted;
        } else {
            grad[n + feat] += weighted;
        }
    }
    return grad;
}

AdjointGradients grad_adjoint(const CircuitSpec &spec,
                              const CircuitParams &params,
                              const std::vector<double> &x,
                              const std::vector<double> &upstream,
                              bool need_params, bool need_inputs) {
    check_io(spec, params, x, upstream);
    const std::vector<PlanOp> plan = expand_plan(spec);
    const std::size_t n = static_cast<std::size_t>(spec.n_qubits);

    StateVector ket = run_circuit_state(spec, params, x);

    // lam = (sum_q upstream_q Z_q) |ket>; the observable is diagonal.
    StateVector lam = ket;
    {
        double *lre = lam.re();
        double *lim = lam.im();
        const std::size_t len = lam.size();
        for (std::size_t k = 0; k < len; ++k) {
            double coeff = 0.0;
            for (std::size_t q = 0; q < n; ++q) {
                const bool hi = (k & (std::size_t{1} << q)) != 0;
                coeff += hi ? -upstream[q] : upstream[q];
            }
            lre[k] *= coeff;
            lim[k] *= coeff;
        }
    }

    std::vector<double> angle_grad(plan.size(), 0.0);
    const auto &kt = kernels::active();
    for (std::size_t jj = plan.size(); jj-- > 0;) {
        const PlanOp &op = plan[jj];
        if (op.kind == GateKind::CNOT) {
            ket.apply_cnot(op.control, op.qubit);
            lam.apply_cnot(op.control, op.qubit);
            continue;
        }
        const bool want =
            (op.source == PlanOp::Source::rot && need_params) ||
            (op.source == PlanOp::Source::encode &&
             (need_params || need_inputs));
        if (want) {
            // d/d(angle) <lam|U|ket_pre> = 2 Re <lam|(-i/2) P|ket_post>
            //                            = Im <lam| P |ket_post>.
            double sr = 0.0, si = 0.0;
            kt.pauli_inner(lam.re(), lam.im(), ket.re(), ket.im(), ket.size(),
                           op.qubit, pauli_of(op.kind), &sr, &si);
            angle_grad[jj] = si;
        }
        const double angle = resolve_angle(op, params, x);
        const GateOp inverse{op.kind, op.qubit, -1, -angle};
        ket.apply(inverse);
        lam.apply(inverse);
    }

    AdjointGradients out;
    if (need_params) {
        out.params.assign(CircuitParams::size(spec), 0.0);
    }
    if (need_inputs) {
        out.inputs.assign(n, 0.0);
    }
    for (std::size_t jj = 0; jj < plan.size(); ++jj) {
        const PlanOp &op = plan[jj];
        if (op.source == PlanOp::Source::encode) {
            const std::size_t q = static_cast<std::size_t>(op.index);
            if (need_params) {
                out.params[q] += x[q] * angle_grad[jj];
            }
            if (need_inputs) {
                out.inputs[q] += params.encode_weights[q] * angle_grad[jj];
            }
        } else if (op.source == PlanOp::Source::rot && need_params) {
            out.params[n + static_cast<std::size_t>(op.index)] +=
                angle_grad[jj];
        }
    }
    return out;
}

} // namespace qsac::sim
