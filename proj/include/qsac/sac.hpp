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

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "qsac/adam.hpp"
#include "qsac/arm_env.hpp"
#include "qsac/networks.hpp"
#include "qsac/replay_buffer.hpp"

namespace qsac::sac {

struct SacHyperparams {
    double gamma = 0.99;
    double entropy_alpha = 0.2;
    double lr = 0.0003;
    double rho = 0.995; // polyak coefficient
    int batch_size = 64;
    int warmup_steps = 1000;
    std::size_t memory_size = 1000000;
    // Episodes cut by the step cap store done=1 by default; set to
    // bootstrap through the truncation boundary instead.
    bool bootstrap_on_truncation = false;

    void validate() const;
};

/**
 * @brief Soft actor-critic with twin critics and polyak-averaged targets.
 *
 * One update cycle = one sampled batch -> targets from the target critics
 * and a fresh policy draw at S' -> MSE step on each critic -> ascent step
 * on the actor through min(Q1, Q2) with reparameterized actions -> soft
 * update of both targets. Critics consume [obs, action / max_torque]; the
 * buffer and all interfaces carry raw torques.
 *
 * Determinism: all stochastic choices flow through named substreams of the
 * constructor seed (init, policy noise, batch indices, warmup torques), so
 * a fixed seed fixes the whole trajectory of the agent.
 */
class SacAgent {
  public:
    SacAgent(const hybrid::NetworkPlan &actor_plan,
             const hybrid::NetworkPlan &critic_plan,
             const SacHyperparams &hp, double max_torque,
             std::uint64_t seed);

    /// Stochastic policy action (training).
    std::array<double, 2> act(const std::array<double, 6> &obs);
    /// max_torque * tanh(mean): the evaluation-time action.
    std::array<double, 2> act_greedy(const std::array<double, 6> &obs);
    /// Uniform torques in [-max_torque, max_torque] (warmup phase).
    std::array<double, 2> random_action();

    void store(const Transition &t) { buffer_.push(t); }
    /// True once the warmup phase is over and a batch can be drawn.
    bool update_ready() const;
    /// One full update cycle; no-op returning false when not ready.
    bool update();

    // Individual update stages, exposed for verification. All operate on an
    // explicit batch and are deterministic given the agent state.
    std::vector<double> compute_targets(const std::vector<Transition> &batch);
    void critic_update(const std::vector<Transition> &batch,
                       const std::vector<double> &y);
    void actor_update(const std::vector<Transition> &batch);
    void soft_update();

    hybrid::HybridNet &actor() { return actor_; }
    hybrid::HybridNet &critic(int i) { return i == 0 ? critic1_ : critic2_; }
    hybrid::HybridNet &target(int i) { return i == 0 ? target1_ : target2_; }
    ReplayBuffer &buffer() { return buffer_; }
    const SacHyperparams &hp() const { return hp_; }
    double max_torque() const { return max_torque_; }

    /// Batch-mean critic MSE of the most recent critic_update.
    double last_critic_loss() const { return last_critic_loss_; }
    /// Batch mean of min(Q1,Q2) - alpha*log_pi from the most recent
    /// actor_update (the maximized objective).
    double last_actor_objective() const { return last_actor_objective_; }

    std::size_t parameter_total() const;

  private:
    struct PolicyEval {
        std::vector<double> mean, log_std, noise;
        hybrid::ActionSample sample;
        std::array<bool, 2> clamp_open{}; // raw log-std inside the clamp
    };
    /// Runs the actor at obs and draws a reparameterized action.
    PolicyEval policy_sample(const std::array<double, 6> &obs);
    std::vector<double> critic_features(const std::array<double, 6> &obs,
                                        const std::array<double, 2> &action)
        const;

    SacHyperparams hp_;
    double max_torque_;
    hybrid::HybridNet actor_, critic1_, critic2_, target1_, target2_;
    nn::Adam actor_opt_, critic1_opt_, critic2_opt_;
    ReplayBuffer buffer_;
    RandomStream noise_rng_, batch_rng_, warmup_rng_;
    std::vector<Transition> batch_;
    double last_critic_loss_ = 0.0;
    double last_actor_objective_ = 0.0;
};

struct EpisodeOutcome {
    int episode = 0; // 1-based

    int steps = 0;
    double episode_return = 0.0;
    bool solved = false;
};

/**
 * @brief Algorithm loop: act (uniform torques for the first warmup_steps
 * env steps), store, and once warmed up run exactly one update cycle per
 * env step; reset on episode end. Returns one outcome per episode and
 * invokes `on_episode` after each. A DivergenceError aborts the run; the
 * outcomes so far stay with the caller via the callback.
 */
std::vector<EpisodeOutcome>
train_run(env::ArmEnv &env, SacAgent &agent, int max_episodes,
          const std::function<void(const EpisodeOutcome &)> &on_episode = {});

} // namespace qsac::sac
