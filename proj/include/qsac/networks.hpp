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

#include "qsac/architecture.hpp"
#include "qsac/circuit.hpp"
#include "qsac/dense.hpp"
#include "qsac/rng.hpp"

namespace qsac::hybrid {

/// log-std clamp range applied before exponentiation.
inline constexpr double kLogStdMin = -20.0;
inline constexpr double kLogStdMax = 2.0;

/// Additive floor inside the squash-correction logarithm, so saturated
/// actions keep a finite log-density.
inline constexpr double kSquashEps = 1e-6;

/**
 * @brief A feedforward network realized from a NetworkPlan: dense layers and
 * VQC stages over one flat parameter vector.
 *
 * Critic nets output a single scalar. Actor nets output
 * [mean (action_dim), log_std (action_dim)], both heads raw (the log-std
 * clamp is the caller's job, so the clamp subgradient stays visible to the
 * training code).
 *
 * forward() caches the stage inputs; backward() consumes that cache, so a
 * backward must directly follow the forward it differentiates. Gradients
 * accumulate into grads() until zero_grads(); batch updates call
 * forward/backward per sample and divide by the batch size at the optimizer
 * boundary.
 */
class HybridNet {
  public:
    HybridNet() = default;
    explicit HybridNet(NetworkPlan plan);

    const NetworkPlan &plan() const { return plan_; }
    std::size_t param_count() const { return params_.size(); }
    int input_dim() const { return plan_.input_dim; }
    int output_dim() const;

    std::vector<double> &params() { return params_; }
    const std::vector<double> &params() const { return params_; }
    std::vector<double> &grads() { return grads_; }
    void zero_grads();

    /// Dense layers U(+-1/sqrt(fan_in)); circuit angles and encoding
    /// weights U[0, pi).
    void init(RandomStream &rng);

    /// Runs the net on x and caches intermediates for backward. The
    /// returned reference stays valid until the next forward. Throws
    /// DivergenceError when the output is not finite.
    const std::vector<double> &forward(const std::vector<double> &x);

    /**
     * @brief Backpropagates `upstream` (sized like the forward output)
     * through the cached forward pass.
     *
     * Accumulates parameter gradients into grads() unless
     * `need_param_grads` is false (used when only input sensitivities are
     * wanted, e.g. dQ/daction during the policy update). When `input_grad`
     * is non-null, dL/dx is accumulated into it (size input_dim, caller
     * zeroes).
     */
    void backward(const std::vector<double> &upstream,
                  double *input_grad = nullptr, bool need_param_grads = true);

  private:
    struct Stage {
        NetworkPlan::Item item;
        nn::DenseLayer layer;      // dense stages
        sim::CircuitParams scratch; // vqc stages: params view buffer
        std::size_t offset = 0;
        std::vector<double> in;  // cached stage input
        std::vector<double> out; // cached stage output
    };

    void load_circuit_params(Stage &st) const;

    NetworkPlan plan_;
    std::vector<Stage> stages_;
    nn::DenseLayer mean_head_;
    nn::DenseLayer log_std_head_;
    std::vector<double> params_;
    std::vector<double> grads_;
    std::vector<double> out_;
    std::vector<double> trunk_out_;
    std::vector<double> scratch_;
    std::vector<double> grad_a_, grad_b_; // ping-pong stage gradients
};

/// Result of the squashed-Gaussian sampling map.
struct ActionSample {
    std::vector<double> u;      // pre-squash Gaussian draw
    std::vector<double> action; // max_torque * tanh(u)
    double log_prob = 0.0;
};

/**
 * @brief Reparameterized action draw.
 *
 * u = mean + exp(log_std) * noise, action = max_torque * tanh(u), and
 * log_prob is the Gaussian log-density of u minus the squash correction
 * sum_i log(1 - tanh^2(u_i) + kSquashEps): the density of the normalized
 * action tanh(u), which differs from the torque density only by the
 * constant 2*log(max_torque). Entropy bookkeeping deliberately lives in
 * the unit space so that the entropy bonus stays on the reward scale (see
 * the note in the implementation). `log_std` must already be clamped.
 * |action_i| <= max_torque for all finite inputs.
 */
ActionSample sample_action(const std::vector<double> &mean,
                           const std::vector<double> &log_std,
                           const std::vector<double> &noise,
                           double max_torque);

/// Clamp helper for the log-std head output.
double clamp_log_std(double raw);

} // namespace qsac::hybrid
