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

#include "qsac/sac.hpp"

#include <algorithm>
#include <cmath>

#include "qsac/errors.hpp"
#include "qsac/kernels.hpp"

namespace qsac::sac {

void SacHyperparams::validate() const {
    if (gamma < 0.0 || gamma > 1.0) {
        throw ConfigError("gamma must lie in [0, 1]");
    }
    if (rho < 0.0 || rho > 1.0) {
        throw ConfigError("rho must lie in [0, 1]");
    }
    if (entropy_alpha < 0.0) {
        throw ConfigError("entropy_alpha must be non-negative");
    }
    if (lr <= 0.0) {
        throw ConfigError("lr must be positive");
    }
    if (batch_size <= 0) {
        throw ConfigError("batch_size must be positive");
    }
    if (warmup_steps < 0) {
        throw ConfigError("warmup_steps must be non-negative");
    }
    if (memory_size == 0) {
        throw ConfigError("memory_size must be positive");
    }
}

SacAgent::SacAgent(const hybrid::NetworkPlan &actor_plan,
                   const hybrid::NetworkPlan &critic_plan,
                   const SacHyperparams &hp, double max_torque,
                   std::uint64_t seed)
    : hp_(hp), max_torque_(max_torque), actor_(actor_plan),
      critic1_(critic_plan), critic2_(critic_plan), target1_(critic_plan),
      target2_(critic_plan), buffer_(hp.memory_size),
      noise_rng_(substream_seed(seed, 1)),
      batch_rng_(substream_seed(seed, 2)),
      warmup_rng_(substream_seed(seed, 3)) {
    hp_.validate();
    if (max_torque_ <= 0.0) {
        throw ConfigError("max_torque must be positive");
    }
    RandomStream init_rng(substream_seed(seed, 0));
    actor_.init(init_rng);
    critic1_.init(init_rng);
    critic2_.init(init_rng);
    target1_.params() = critic1_.params();
    target2_.params() = critic2_.params();
    actor_opt_ = nn::Adam(actor_.param_count(), hp_.lr);
    critic1_opt_ = nn::Adam(critic1_.param_count(), hp_.lr);
    critic2_opt_ = nn::Adam(critic2_.param_count(), hp_.lr);
}

std::vector<double>
SacAgent::critic_features(const std::array<double, 6> &obs,
                          const std::array<double, 2> &action) const {
    std::vector<double> f(8);
    for (int i = 0; i < 6; ++i) {
        f[static_cast<std::size_t>(i)] = obs[static_cast<std::size_t>(i)];
    }
    // Angle-encoding circuits (and dense critics alike) see actions on the
    // same O(1) scale as the observations.
    f[6] = action[0] / max_torque_;
    f[7] = action[1] / max_torque_;
    return f;
}

SacAgent::PolicyEval
SacAgent::policy_sample(const std::array<double, 6> &obs) {
    PolicyEval pe;
    const std::vector<double> x(obs.begin(), obs.end());
    const std::vector<double> &out = actor_.forward(x);
    pe.mean.assign(out.begin(), out.begin() + 2);
    pe.log_std.resize(2);
    for (int j = 0; j < 2; ++j) {
        const double raw = out[static_cast<std::size_t>(2 + j)];
        pe.log_std[static_cast<std::size_t>(j)] = hybrid::clamp_log_std(raw);
        pe.clamp_open[static_cast<std::size_t>(j)] =
            raw > hybrid::kLogStdMin && raw < hybrid::kLogStdMax;
    }
    pe.noise = {noise_rng_.gaussian(), noise_rng_.gaussian()};
    pe.sample =
        hybrid::sample_action(pe.mean, pe.log_std, pe.noise, max_torque_);
    return pe;
}

std::array<double, 2> SacAgent::act(const std::array<double, 6> &obs) {
    const PolicyEval pe = policy_sample(obs);
    return {pe.sample.action[0], pe.sample.action[1]};
}

std::array<double, 2> SacAgent::act_greedy(const std::array<double, 6> &obs) {
    const std::vector<double> x(obs.begin(), obs.end());
    const std::vector<double> &out = actor_.forward(x);
    return {max_torque_ * std::tanh(out[0]), max_torque_ * std::tanh(out[1])};
}

std::array<double, 2> SacAgent::random_action() {
    return {warmup_rng_.uniform(-max_torque_, max_torque_),
            warmup_rng_.uniform(-max_torque_, max_torque_)};
}

bool SacAgent::update_ready() const {
    return buffer_.pushed() >= static_cast<std::uint64_t>(hp_.warmup_steps) &&
           buffer_.size() >= static_cast<std::size_t>(hp_.batch_size);
}

std::vector<double>
SacAgent::compute_targets(const std::vector<Transition> &batch) {
    std::vector<double> y(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Transition &t = batch[i];
        const PolicyEval pe = policy_sample(t.next_obs);
        const std::vector<double> f = critic_features(
            t.next_obs, {pe.sample.action[0], pe.sample.action[1]});
        const double q1 = target1_.forward(f)[0];
        const double q2 = target2_.forward(f)[0];
        const double entropy_adjusted =
            std::min(q1, q2) - hp_.entropy_alpha * pe.sample.log_prob;
        y[i] = t.reward + hp_.gamma * (1.0 - t.done) * entropy_adjusted;
        if (!std::isfinite(y[i])) {
            throw DivergenceError("non-finite critic target");
        }
    }
    return y;
}

void SacAgent::critic_update(const std::vector<Transition> &batch,
                             const std::vector<double> &y) {
    if (batch.size() != y.size() || batch.empty()) {
        throw DimensionError("critic_update batch/target size mismatch");
    }
    const double inv_b = 1.0 / static_cast<double>(batch.size());
    critic1_.zero_grads();
    critic2_.zero_grads();
    double loss = 0.0;
    std::vector<double> upstream(1);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const std::vector<double> f =
            critic_features(batch[i].obs, batch[i].action);
        for (hybrid::HybridNet *net : {&critic1_, &critic2_}) {
            const double q = net->forward(f)[0];
            const double err = q - y[i];
            loss += 0.5 * err * err * inv_b; // 0.5: averaged over the twins
            upstream[0] = 2.0 * err * inv_b;
            net->backward(upstream);
        }
    }
    critic1_opt_.step(critic1_.params().data(), critic1_.grads().data());
    critic2_opt_.step(critic2_.params().data(), critic2_.grads().data());
    last_critic_loss_ = loss;
}

void SacAgent::actor_update(const std::vector<Transition> &batch) {
    if (batch.empty()) {
        throw DimensionError("actor_update on an empty batch");
    }
    const double inv_b = 1.0 / static_cast<double>(batch.size());
    const double alpha = hp_.entropy_alpha;
    actor_.zero_grads();
    double objective = 0.0;
    std::vector<double> upstream(4);
    std::vector<double> fgrad(8);
    for (const Transition &t : batch) {
        const PolicyEval pe = policy_sample(t.obs);
        const std::vector<double> f = critic_features(
            t.obs, {pe.sample.action[0], pe.sample.action[1]});
        const double q1 = critic1_.forward(f)[0];
        const double q2 = critic2_.forward(f)[0];
        hybrid::HybridNet &qmin_net = q1 <= q2 ? critic1_ : critic2_;
        const double qmin = std::min(q1, q2);
        objective += (qmin - alpha * pe.sample.log_prob) * inv_b;

        // dQ/d(features): critic parameters stay frozen here.
        std::fill(fgrad.begin(), fgrad.end(), 0.0);
        static const std::vector<double> kOne{1.0};
        qmin_net.backward(kOne, fgrad.data(), /*need_param_grads=*/false);

        // Loss per sample (minimized): alpha*log_pi - min(Q1,Q2), pushed
        // through action = M*tanh(u), u = mean + exp(log_std)*noise.
        for (int j = 0; j < 2; ++j) {
            const std::size_t sj = static_cast<std::size_t>(j);
            const double dq_da = fgrad[6 + sj] / max_torque_;
            const double th = std::tanh(pe.sample.u[sj]);
            const double one_m_t2 = 1.0 - th * th;
            const double squash = max_torque_ * one_m_t2;
            const double dlogp_du =
                2.0 * th * one_m_t2 / (one_m_t2 + hybrid::kSquashEps);
            const double dl_du = alpha * dlogp_du - dq_da * squash;
            upstream[sj] = dl_du * inv_b;
            const double sigma = std::exp(pe.log_std[sj]);
            // The explicit -log_std density term contributes -alpha; both
            // routes die outside the clamp (pass-through subgradient).
            upstream[2 + sj] =
                pe.clamp_open[sj]
                    ? (dl_du * sigma * pe.noise[sj] - alpha) * inv_b
                    : 0.0;
        }
        actor_.backward(upstream);
    }
    actor_opt_.step(actor_.params().data(), actor_.grads().data());
    last_actor_objective_ = objective;
}

void SacAgent::soft_update() {
    const auto &kt = kernels::active();
    kt.polyak(target1_.params().data(), critic1_.params().data(),
              target1_.param_count(), hp_.rho);
    kt.polyak(target2_.params().data(), critic2_.params().data(),
              target2_.param_count(), hp_.rho);
}

bool SacAgent::update() {
    if (!update_ready()) {
        return false;
    }
    buffer_.sample(static_cast<std::size_t>(hp_.batch_size), batch_rng_,
                   batch_);
    const std::vector<double> y = compute_targets(batch_);
    critic_update(batch_, y);
    actor_update(batch_);
    soft_update();
    return true;
}

std::size_t SacAgent::parameter_total() const {
    return actor_.param_count() + critic1_.param_count() +
           critic2_.param_count() + target1_.param_count() +
           target2_.param_count();
}

std::vector<EpisodeOutcome>
train_run(env::ArmEnv &env, SacAgent &agent, int max_episodes,
          const std::function<void(const EpisodeOutcome &)> &on_episode) {
    std::vector<EpisodeOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(std::max(max_episodes, 0)));
    const auto warmup = static_cast<std::uint64_t>(agent.hp().warmup_steps);
    for (int ep = 1; ep <= max_episodes; ++ep) {
        std::array<double, 6> obs = env.reset();
        EpisodeOutcome oc;
        oc.episode = ep;
        while (!env.episode_done()) {
            const std::array<double, 2> a = agent.buffer().pushed() < warmup
                                                ? agent.random_action()
                                                : agent.act(obs);
            const env::StepResult res = env.step(a[0], a[1]);
            Transition t;
            t.obs = obs;
            t.action = a;
            t.reward = res.reward;
            t.next_obs = res.observation;
            const bool truncated = res.done && !res.solved;
            t.done = res.done && !(truncated &&
                                   agent.hp().bootstrap_on_truncation)
                         ? 1.0
                         : 0.0;
            agent.store(t);
            agent.update();
            obs = res.observation;
            oc.episode_return += res.reward;
            oc.steps = res.steps_used;
            oc.solved = res.solved;
        }
        outcomes.push_back(oc);
        if (on_episode) {
            on_episode(oc);
        }
    }
    return outcomes;
}

} // namespace qsac::sac
