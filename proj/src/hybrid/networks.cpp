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

#include "qsac/networks.hpp"

#include <algorithm>
#include <cmath>

#include "qsac/errors.hpp"
#include "qsac/gradients.hpp"

namespace qsac::hybrid {

HybridNet::HybridNet(NetworkPlan plan) : plan_(std::move(plan)) {
    std::size_t offset = 0;
    stages_.reserve(plan_.items.size());
    for (const auto &item : plan_.items) {
        Stage st;
        st.item = item;
        st.offset = offset;
        if (item.kind == NetworkPlan::Item::Kind::dense) {
            st.layer.in_dim = item.in_dim;
            st.layer.out_dim = item.out_dim;
            st.layer.act = item.act;
            st.layer.offset = offset;
            offset += st.layer.param_count();
        } else {
            st.scratch = sim::CircuitParams::zeros(item.circuit);
            offset += sim::CircuitParams::size(item.circuit);
        }
        st.in.resize(static_cast<std::size_t>(item.in_dim));
        st.out.resize(static_cast<std::size_t>(item.out_dim));
        stages_.push_back(std::move(st));
    }
    if (plan_.has_heads) {
        mean_head_.in_dim = plan_.head_in_dim;
        mean_head_.out_dim = plan_.action_dim;
        mean_head_.act = nn::Activation::linear;
        mean_head_.offset = offset;
        offset += mean_head_.param_count();
        log_std_head_ = mean_head_;
        log_std_head_.offset = offset;
        offset += log_std_head_.param_count();
        out_.resize(2 * static_cast<std::size_t>(plan_.action_dim));
    } else {
        out_.resize(1);
    }
    params_.assign(offset, 0.0);
    grads_.assign(offset, 0.0);
}

int HybridNet::output_dim() const {
    return plan_.has_heads ? 2 * plan_.action_dim : 1;
}

void HybridNet::zero_grads() {
    std::fill(grads_.begin(), grads_.end(), 0.0);
}

void HybridNet::init(RandomStream &rng) {
    for (const auto &st : stages_) {
        if (st.item.kind == NetworkPlan::Item::Kind::dense) {
            st.layer.init(params_.data(), rng);
        } else {
            const sim::CircuitParams cp =
                sim::CircuitParams::random(st.item.circuit, rng);
            const std::vector<double> flat = cp.flatten();
            std::copy(flat.begin(), flat.end(), params_.begin() + st.offset);
        }
    }
    if (plan_.has_heads) {
        mean_head_.init(params_.data(), rng);
        log_std_head_.init(params_.data(), rng);
    }
}

void HybridNet::load_circuit_params(Stage &st) const {
    const std::size_t n =
        static_cast<std::size_t>(st.item.circuit.n_qubits);
    const double *base = params_.data() + st.offset;
    std::copy(base, base + n, st.scratch.encode_weights.begin());
    std::copy(base + n, base + n + st.scratch.rot.size(),
              st.scratch.rot.begin());
}

const std::vector<double> &HybridNet::forward(const std::vector<double> &x) {
    if (x.size() != static_cast<std::size_t>(plan_.input_dim)) {
        throw DimensionError("network input size mismatch");
    }
    const std::vector<double> *cur = &x;
    for (auto &st : stages_) {
        st.in.assign(cur->begin(), cur->end());
        if (st.item.kind == NetworkPlan::Item::Kind::dense) {
            st.layer.forward(params_.data(), st.in.data(), st.out.data());
        } else {
            load_circuit_params(st);
            st.out = sim::run_circuit(st.item.circuit, st.scratch, st.in);
        }
        cur = &st.out;
    }
    if (plan_.has_heads) {
        trunk_out_.assign(cur->begin(), cur->end());
        mean_head_.forward(params_.data(), trunk_out_.data(), out_.data());
        log_std_head_.forward(params_.data(), trunk_out_.data(),
                              out_.data() + plan_.action_dim);
    } else {
        out_.assign(cur->begin(), cur->end());
    }
    for (double v : out_) {
        if (!std::isfinite(v)) {
            throw DivergenceError("non-finite network output");
        }
    }
    return out_;
}

void HybridNet::backward(const std::vector<double> &upstream,
                         double *input_grad, bool need_param_grads) {
    if (upstream.size() != out_.size()) {
        throw DimensionError("upstream size does not match network output");
    }
    double *gbase = need_param_grads ? grads_.data() : nullptr;

    // grad_a_ holds dL/d(output of the stage being processed).
    if (plan_.has_heads) {
        grad_a_.assign(static_cast<std::size_t>(plan_.head_in_dim), 0.0);
        mean_head_.backward(params_.data(), gbase, trunk_out_.data(),
                            out_.data(), upstream.data(), grad_a_.data(),
                            scratch_);
        log_std_head_.backward(params_.data(), gbase, trunk_out_.data(),
                               out_.data() + plan_.action_dim,
                               upstream.data() + plan_.action_dim,
                               grad_a_.data(), scratch_);
    } else {
        grad_a_.assign(upstream.begin(), upstream.end());
    }

    for (std::size_t si = stages_.size(); si-- > 0;) {
        Stage &st = stages_[si];
        const bool want_dx = si > 0 || input_grad != nullptr;
        if (st.item.kind == NetworkPlan::Item::Kind::dense) {
            grad_b_.assign(st.in.size(), 0.0);
            st.layer.backward(params_.data(), gbase, st.in.data(),
                              st.out.data(), grad_a_.data(),
                              want_dx ? grad_b_.data() : nullptr, scratch_);
            grad_a_.swap(grad_b_);
        } else {
            load_circuit_params(st);
            const sim::AdjointGradients ag = sim::grad_adjoint(
                st.item.circuit, st.scratch, st.in, grad_a_,
                need_param_grads, want_dx);
            if (need_param_grads) {
                for (std::size_t i = 0; i < ag.params.size(); ++i) {
                    grads_[st.offset + i] += ag.params[i];
                }
            }
            if (want_dx) {
                grad_a_ = ag.inputs;
            }
        }
    }
    if (input_grad != nullptr) {
        for (std::size_t i = 0; i < grad_a_.size(); ++i) {
            input_grad[i] += grad_a_[i];
        }
    }
}

double clamp_log_std(double raw) {
    return std::clamp(raw, kLogStdMin, kLogStdMax);
}

ActionSample sample_action(const std::vector<double> &mean,
                           const std::vector<double> &log_std,
                           const std::vector<double> &noise,
                           double max_torque) {
    if (mean.size() != log_std.size() || mean.size() != noise.size()) {
        throw DimensionError("sample_action input sizes differ");
    }
    constexpr double kHalfLog2Pi = 0.91893853320467274178;
    ActionSample s;
    s.u.resize(mean.size());
    s.action.resize(mean.size());
    double lp = 0.0;
    for (std::size_t i = 0; i < mean.size(); ++i) {
        const double sigma = std::exp(log_std[i]);
        const double u = mean[i] + sigma * noise[i];
        const double t = std::tanh(u);
        s.u[i] = u;
        s.action[i] = max_torque * t;
        lp += -0.5 * noise[i] * noise[i] - log_std[i] - kHalfLog2Pi;
        // Squash correction in the unit-tanh space, not the torque space.
        // Folding max_torque into the Jacobian would shift every log-density
        // by -2*log(max_torque); under a fixed entropy coefficient that
        // constant leaks into the bootstrapped targets as ~alpha*2*log(M)
        // per step of free reward, which terminating transitions forfeit,
        // and the learned policy starts steering away from the target.
        lp -= std::log((1.0 - t * t) + kSquashEps);
    }
    s.log_prob = lp;
    return s;
}

} // namespace qsac::hybrid
