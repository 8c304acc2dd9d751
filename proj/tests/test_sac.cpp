// Copyright 2026 The qsac authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "qsac/architecture.hpp"
#include "qsac/arm_env.hpp"
#include "qsac/errors.hpp"
#include "qsac/networks.hpp"
#include "qsac/rng.hpp"
#include "qsac/sac.hpp"

#include "support/chi_square.hpp"

using namespace qsac;
using namespace qsac::sac;

namespace {

Transition make_transition(RandomStream &rng, double max_torque,
                           double done) {
    Transition t;
    for (auto &v : t.obs) {
        v = rng.uniform(-1.0, 1.0);
    }
    for (auto &v : t.next_obs) {
        v = rng.uniform(-1.0, 1.0);
    }
    t.action = {rng.uniform(-max_torque, max_torque),
                rng.uniform(-max_torque, max_torque)};
    t.reward = rng.uniform(-2.0, 2.0);
    t.done = done;
    return t;
}

SacAgent make_small_agent(const SacHyperparams &hp, double max_torque,
                          std::uint64_t seed) {
    const auto actor =
        hybrid::parse_architecture("(6,4,(1,1))", hybrid::Role::actor, 6, 2);
    const auto critic =
        hybrid::parse_architecture("(8,6,1)", hybrid::Role::critic, 8, 1);
    return SacAgent(actor, critic, hp, max_torque, seed);
}

std::vector<double> features_of(const Transition &t, double max_torque) {
    std::vector<double> f(t.obs.begin(), t.obs.end());
    f.push_back(t.action[0] / max_torque);
    f.push_back(t.action[1] / max_torque);
    return f;
}

} // namespace

TEST_CASE("replay buffer is a FIFO ring") {
    ReplayBuffer buf(5);
    CHECK(buf.capacity() == 5);
    CHECK_THROWS_AS(ReplayBuffer(0), ConfigError);

    RandomStream rng(701);
    for (int k = 0; k < 3; ++k) {
        Transition t = make_transition(rng, 1.0, 0.0);
        t.reward = k;
        buf.push(t);
    }
    CHECK(buf.size() == 3);
    CHECK(buf.at(0).reward == 0.0);
    CHECK(buf.at(2).reward == 2.0);
    CHECK_THROWS_AS(buf.at(3), DimensionError);

    for (int k = 3; k < 8; ++k) {
        Transition t = make_transition(rng, 1.0, 0.0);
        t.reward = k;
        buf.push(t);
    }
    // eight pushes into five slots: 0..2 evicted, oldest survivor is 3
    CHECK(buf.size() == 5);
    CHECK(buf.pushed() == 8);
    CHECK(buf.at(0).reward == 3.0);
    CHECK(buf.at(4).reward == 7.0);
}

TEST_CASE("replay sampling is uniform over the stored items") {
    ReplayBuffer buf(200);
    RandomStream fill(702);
    for (int k = 0; k < 100; ++k) {
        Transition t = make_transition(fill, 1.0, 0.0);
        t.reward = k;
        buf.push(t);
    }

    std::vector<Transition> out;
    RandomStream rng(703);
    CHECK_FALSE(buf.sample(101, rng, out)); // more than stored
    CHECK(out.empty());

    std::vector<double> counts(100, 0.0);
    const int rounds = 1000;
    for (int r = 0; r < rounds; ++r) {
        REQUIRE(buf.sample(100, rng, out));
        REQUIRE(out.size() == 100);
        for (const auto &t : out) {
            counts[static_cast<std::size_t>(t.reward)] += 1.0;
        }
    }
    const double expected = 1000.0;
    double chi2 = 0.0;
    for (double c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    CHECK(testsupport::chi_square_pvalue(chi2, 99) > 0.01);
}

TEST_CASE("hyperparameter validation rejects out-of-range values") {
    SacHyperparams hp;
    CHECK_NOTHROW(hp.validate());
    hp.gamma = -0.1;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.gamma = 1.1;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.rho = 1.5;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.entropy_alpha = -1e-9;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.lr = 0.0;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.batch_size = 0;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.warmup_steps = -1;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    hp.memory_size = 0;
    CHECK_THROWS_AS(hp.validate(), ConfigError);
    hp = {};
    CHECK_THROWS_AS(make_small_agent(hp, 0.0, 1), ConfigError);
}

TEST_CASE("targets start as exact copies of the critics") {
    SacHyperparams hp;
    SacAgent agent = make_small_agent(hp, 2.5, 704);
    for (int i = 0; i < 2; ++i) {
        const auto &c = agent.critic(i).params();
        const auto &t = agent.target(i).params();
        REQUIRE(c.size() == t.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            REQUIRE(c[k] == t[k]);
        }
    }
    // twins are independently initialized
    CHECK(agent.critic(0).params() != agent.critic(1).params());
    CHECK(agent.parameter_total() ==
          agent.actor().param_count() + 4 * agent.critic(0).param_count());
}

TEST_CASE("update gating needs both the warmup and a full batch") {
    SacHyperparams hp;
    hp.warmup_steps = 5;
    hp.batch_size = 3;
    SacAgent agent = make_small_agent(hp, 2.5, 705);
    RandomStream rng(706);
    for (int k = 0; k < 4; ++k) {
        CHECK_FALSE(agent.update_ready());
        CHECK_FALSE(agent.update());
        agent.store(make_transition(rng, 2.5, 1.0));
    }
    CHECK_FALSE(agent.update_ready()); // 4 pushes < warmup 5
    agent.store(make_transition(rng, 2.5, 1.0));
    CHECK(agent.update_ready());
    CHECK(agent.update());

    SacHyperparams hp2;
    hp2.warmup_steps = 2;
    hp2.batch_size = 4;
    SacAgent agent2 = make_small_agent(hp2, 2.5, 707);
    for (int k = 0; k < 3; ++k) {
        agent2.store(make_transition(rng, 2.5, 1.0));
    }
    CHECK_FALSE(agent2.update_ready()); // 3 stored < batch 4
    agent2.store(make_transition(rng, 2.5, 1.0));
    CHECK(agent2.update_ready());
}

TEST_CASE("terminal transitions and gamma = 0 degrade targets to rewards") {
    SacHyperparams hp;
    SacAgent agent = make_small_agent(hp, 2.5, 708);
    RandomStream rng(709);
    std::vector<Transition> batch;
    for (int k = 0; k < 6; ++k) {
        batch.push_back(make_transition(rng, 2.5, 1.0));
    }
    const auto y = agent.compute_targets(batch);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        CHECK(y[i] == batch[i].reward);
    }

    SacHyperparams hp0;
    hp0.gamma = 0.0;
    SacAgent agent0 = make_small_agent(hp0, 2.5, 710);
    for (auto &t : batch) {
        t.done = 0.0;
    }
    const auto y0 = agent0.compute_targets(batch);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        CHECK(y0[i] == batch[i].reward);
    }
}

TEST_CASE("bootstrapped targets follow the soft Bellman formula") {
    SacHyperparams hp;
    hp.gamma = 0.9;
    hp.entropy_alpha = 0.3;
    const std::uint64_t seed = 711;
    SacAgent agent = make_small_agent(hp, 2.5, seed);

    RandomStream rng(712);
    std::vector<Transition> batch;
    for (int k = 0; k < 8; ++k) {
        batch.push_back(make_transition(rng, 2.5, k % 3 == 0 ? 1.0 : 0.0));
    }
    const auto y = agent.compute_targets(batch);

    // replay the documented recipe: the policy noise comes from substream 1
    // of the agent seed, two gaussians per batch item in order (terminal
    // items included)
    RandomStream noise(substream_seed(seed, 1));
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Transition &t = batch[i];
        const std::vector<double> x(t.next_obs.begin(), t.next_obs.end());
        const auto out = agent.actor().forward(x);
        const std::vector<double> mean{out[0], out[1]};
        const std::vector<double> ls{hybrid::clamp_log_std(out[2]),
                                     hybrid::clamp_log_std(out[3])};
        const std::vector<double> eps{noise.gaussian(), noise.gaussian()};
        const auto s = hybrid::sample_action(mean, ls, eps, 2.5);

        std::vector<double> f(t.next_obs.begin(), t.next_obs.end());
        f.push_back(s.action[0] / 2.5);
        f.push_back(s.action[1] / 2.5);
        const double q1 = agent.target(0).forward(f)[0];
        const double q2 = agent.target(1).forward(f)[0];
        const double expected =
            t.reward + hp.gamma * (1.0 - t.done) *
                           (std::min(q1, q2) - hp.entropy_alpha * s.log_prob);
        CHECK(y[i] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("critic loss is the batch-mean twin MSE and descends") {
    SacHyperparams hp;
    hp.lr = 0.01;
    SacAgent agent = make_small_agent(hp, 2.5, 713);
    RandomStream rng(714);
    std::vector<Transition> batch;
    std::vector<double> y;
    for (int k = 0; k < 6; ++k) {
        batch.push_back(make_transition(rng, 2.5, 1.0));
        y.push_back(batch.back().reward);
    }

    // predicted loss from the pre-update critics
    double expected = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto f = features_of(batch[i], 2.5);
        const double e1 = agent.critic(0).forward(f)[0] - y[i];
        const double e2 = agent.critic(1).forward(f)[0] - y[i];
        expected += 0.5 * (e1 * e1 + e2 * e2);
    }
    expected /= static_cast<double>(batch.size());

    const auto actor_before = agent.actor().params();
    const auto target_before = agent.target(0).params();
    const auto critic_before = agent.critic(0).params();
    agent.critic_update(batch, y);
    CHECK(agent.last_critic_loss() ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(agent.actor().params() == actor_before);
    CHECK(agent.target(0).params() == target_before);
    CHECK(agent.critic(0).params() != critic_before);

    const double first = agent.last_critic_loss();
    for (int it = 0; it < 100; ++it) {
        agent.critic_update(batch, y);
    }
    CHECK(agent.last_critic_loss() < 0.2 * first);

    std::vector<double> short_y(3, 0.0);
    CHECK_THROWS_AS(agent.critic_update(batch, short_y), DimensionError);
    CHECK_THROWS_AS(agent.critic_update({}, {}), DimensionError);
    CHECK_THROWS_AS(agent.actor_update({}), DimensionError);
}

TEST_CASE("actor objective matches an independent replay of the batch") {
    SacHyperparams hp;
    hp.entropy_alpha = 0.25;
    const std::uint64_t seed = 715;
    SacAgent agent = make_small_agent(hp, 2.5, seed);
    RandomStream rng(716);
    std::vector<Transition> batch;
    for (int k = 0; k < 5; ++k) {
        batch.push_back(make_transition(rng, 2.5, 0.0));
    }

    // expected objective from pre-update parameters and the replayed noise
    RandomStream noise(substream_seed(seed, 1));
    double expected = 0.0;
    for (const Transition &t : batch) {
        const std::vector<double> x(t.obs.begin(), t.obs.end());
        const auto out = agent.actor().forward(x);
        const std::vector<double> mean{out[0], out[1]};
        const std::vector<double> ls{hybrid::clamp_log_std(out[2]),
                                     hybrid::clamp_log_std(out[3])};
        const std::vector<double> eps{noise.gaussian(), noise.gaussian()};
        const auto s = hybrid::sample_action(mean, ls, eps, 2.5);
        std::vector<double> f(t.obs.begin(), t.obs.end());
        f.push_back(s.action[0] / 2.5);
        f.push_back(s.action[1] / 2.5);
        const double q = std::min(agent.critic(0).forward(f)[0],
                                  agent.critic(1).forward(f)[0]);
        expected += q - hp.entropy_alpha * s.log_prob;
    }
    expected /= static_cast<double>(batch.size());

    agent.actor_update(batch);
    CHECK(agent.last_actor_objective() ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("the actor step is Adam applied to the true policy gradient") {
    SacHyperparams hp;
    hp.entropy_alpha = 0.2;
    const std::uint64_t seed = 717;
    const double mt = 2.5;
    SacAgent agent = make_small_agent(hp, mt, seed);
    RandomStream rng(718);
    std::vector<Transition> batch;
    for (int k = 0; k < 4; ++k) {
        batch.push_back(make_transition(rng, mt, 0.0));
    }

    // the noise the next actor_update will consume
    std::vector<std::vector<double>> eps;
    RandomStream noise(substream_seed(seed, 1));
    for (std::size_t i = 0; i < batch.size(); ++i) {
        eps.push_back({noise.gaussian(), noise.gaussian()});
    }

    // loss(theta) = mean(alpha*log_pi - min(Q1,Q2)) with the noise frozen
    const std::vector<double> theta0 = agent.actor().params();
    auto loss_at = [&](const std::vector<double> &theta) {
        agent.actor().params() = theta;
        double l = 0.0;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const Transition &t = batch[i];
            const std::vector<double> x(t.obs.begin(), t.obs.end());
            const auto out = agent.actor().forward(x);
            const std::vector<double> mean{out[0], out[1]};
            const std::vector<double> ls{hybrid::clamp_log_std(out[2]),
                                         hybrid::clamp_log_std(out[3])};
            const auto s = hybrid::sample_action(mean, ls, eps[i], mt);
            std::vector<double> f(t.obs.begin(), t.obs.end());
            f.push_back(s.action[0] / mt);
            f.push_back(s.action[1] / mt);
            const double q = std::min(agent.critic(0).forward(f)[0],
                                      agent.critic(1).forward(f)[0]);
            l += hp.entropy_alpha * s.log_prob - q;
        }
        return l / static_cast<double>(batch.size());
    };

    const double h = 1e-6;
    std::vector<double> fd(theta0.size());
    for (std::size_t k = 0; k < theta0.size(); ++k) {
        std::vector<double> tp = theta0, tm = theta0;
        tp[k] += h;
        tm[k] -= h;
        fd[k] = (loss_at(tp) - loss_at(tm)) / (2.0 * h);
    }
    agent.actor().params() = theta0;

    agent.actor_update(batch);
    const auto &theta1 = agent.actor().params();
    // fresh Adam at t = 1 moves each coordinate by -lr * g/(|g| + eps);
    // check every coordinate with a resolvable finite difference
    int checked = 0;
    for (std::size_t k = 0; k < theta0.size(); ++k) {
        if (std::abs(fd[k]) < 1e-4) {
            continue;
        }
        const double ratio = (theta1[k] - theta0[k]) / -hp.lr;
        const double want = fd[k] / (std::abs(fd[k]) + 1e-8);
        CHECK(ratio == doctest::Approx(want).epsilon(2e-3));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("with dead critics the actor climbs the entropy bonus") {
    SacHyperparams hp;
    hp.entropy_alpha = 1.0;
    hp.lr = 0.01;
    SacAgent agent = make_small_agent(hp, 2.5, 719);
    for (int i = 0; i < 2; ++i) {
        std::fill(agent.critic(i).params().begin(),
                  agent.critic(i).params().end(), 0.0);
    }
    RandomStream rng(720);
    std::vector<Transition> batch;
    for (int k = 0; k < 16; ++k) {
        batch.push_back(make_transition(rng, 2.5, 0.0));
    }

    const std::array<double, 6> probe{0.1, -0.2, 0.3, -0.4, 0.5, -0.6};
    auto mean_log_std = [&]() {
        const std::vector<double> x(probe.begin(), probe.end());
        const auto out = agent.actor().forward(x);
        return 0.5 * (hybrid::clamp_log_std(out[2]) +
                      hybrid::clamp_log_std(out[3]));
    };
    const double before = mean_log_std();
    REQUIRE(before > 0.2); // init lands above the interior optimum here
    double early = 0.0, late = 0.0;
    for (int it = 0; it < 200; ++it) {
        agent.actor_update(batch);
        if (it < 20) {
            early += agent.last_actor_objective();
        }
        if (it >= 180) {
            late += agent.last_actor_objective();
        }
    }
    // the squashed density is atomic at +-1 as sigma grows, so the entropy
    // peaks at a finite sigma (log_std near -0.4); ascent must pull the
    // oversized init down toward it, not off to the clamp
    const double after = mean_log_std();
    CHECK(after < before - 0.3);
    CHECK(after > -1.5);
    CHECK(late > early); // objective = entropy bonus only, so it must rise
}

TEST_CASE("soft updates mix targets and critics with the polyak weight") {
    SacHyperparams hp;
    hp.rho = 0.25;
    SacAgent agent = make_small_agent(hp, 2.5, 721);
    RandomStream rng(722);
    // push the critics away from the targets first
    std::vector<Transition> batch;
    std::vector<double> y;
    for (int k = 0; k < 4; ++k) {
        batch.push_back(make_transition(rng, 2.5, 1.0));
        y.push_back(3.0);
    }
    agent.critic_update(batch, y);

    for (int i = 0; i < 2; ++i) {
        const auto t0 = agent.target(i).params();
        const auto &c = agent.critic(i).params();
        SacAgent *p = &agent; // appease the loop below
        (void)p;
        agent.soft_update();
        const auto &t1 = agent.target(i).params();
        for (std::size_t k = 0; k < t0.size(); ++k) {
            REQUIRE(t1[k] == 0.25 * t0[k] + 0.75 * c[k]);
        }
        if (i == 1) {
            break;
        }
        // second iteration looks at critic 1 with fresh snapshots
    }

    SacHyperparams frozen;
    frozen.rho = 1.0;
    SacAgent af = make_small_agent(frozen, 2.5, 723);
    const auto before = af.target(0).params();
    af.critic_update(batch, y);
    af.soft_update();
    CHECK(af.target(0).params() == before);

    SacHyperparams copy;
    copy.rho = 0.0;
    SacAgent ac = make_small_agent(copy, 2.5, 724);
    ac.critic_update(batch, y);
    ac.soft_update();
    CHECK(ac.target(0).params() == ac.critic(0).params());
    CHECK(ac.target(1).params() == ac.critic(1).params());
}

TEST_CASE("the full update cycle solves a two-torque bandit") {
    // One fixed observation; reward peaks at action (1, -0.5). Terminal
    // transitions make the critics a pure regression on the reward surface,
    // so the greedy policy must move to the peak.
    SacHyperparams hp;
    hp.lr = 0.005;
    hp.entropy_alpha = 0.02;
    hp.batch_size = 64;
    hp.warmup_steps = 0;
    const double mt = 2.5;
    const auto actor =
        hybrid::parse_architecture("(6,16,(1,1))", hybrid::Role::actor, 6, 2);
    const auto critic =
        hybrid::parse_architecture("(8,24,1)", hybrid::Role::critic, 8, 1);
    SacAgent agent(actor, critic, hp, mt, 725);

    const std::array<double, 6> obs{0.3, -0.4, 0.1, -0.9, 0.2, -0.1};
    RandomStream rng(726);
    for (int k = 0; k < 600; ++k) {
        Transition t;
        t.obs = obs;
        t.next_obs = obs;
        t.action = {rng.uniform(-mt, mt), rng.uniform(-mt, mt)};
        const double d1 = t.action[0] - 1.0;
        const double d2 = t.action[1] + 0.5;
        t.reward = 2.0 - (d1 * d1 + d2 * d2);
        t.done = 1.0;
        agent.store(t);
    }
    for (int it = 0; it < 2500; ++it) {
        REQUIRE(agent.update());
    }
    const auto a = agent.act_greedy(obs);
    CHECK(std::abs(a[0] - 1.0) < 0.4);
    CHECK(std::abs(a[1] + 0.5) < 0.4);
}

TEST_CASE("training episodes are sequenced, capped, and deterministic") {
    env::EnvConfig cfg;
    cfg.max_steps = 25;
    SacHyperparams hp;
    hp.warmup_steps = 40;
    hp.batch_size = 16;
    hp.memory_size = 30; // force eviction

    auto run_once = [&](std::vector<EpisodeOutcome> &cb_log) {
        env::ArmEnv env(cfg, 727);
        SacAgent agent = make_small_agent(hp, cfg.max_torque, 728);
        auto outcomes = train_run(env, agent, 4,
                                  [&](const EpisodeOutcome &oc) {
                                      cb_log.push_back(oc);
                                  });
        CHECK(agent.buffer().size() <= 30);
        CHECK(agent.buffer().pushed() >= 40);
        return outcomes;
    };

    std::vector<EpisodeOutcome> log_a, log_b;
    const auto a = run_once(log_a);
    const auto b = run_once(log_b);
    REQUIRE(a.size() == 4);
    REQUIRE(log_a.size() == 4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].episode == static_cast<int>(i) + 1);
        CHECK(a[i].steps >= 1);
        CHECK(a[i].steps <= 25);
        CHECK(a[i].episode_return <= 5.0 + 1e-12);
        CHECK(a[i].episode_return == log_a[i].episode_return);
        // same seeds, same run
        CHECK(a[i].episode_return == b[i].episode_return);
        CHECK(a[i].steps == b[i].steps);
        CHECK(a[i].solved == b[i].solved);
    }
}
