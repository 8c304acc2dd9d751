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

#include "qsac/benchmark_solver.hpp"

#include <algorithm>
#include <cmath>

#include "qsac/errors.hpp"

namespace qsac::bench {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double sign(double x) {
    if (x > 0.0) {
        return 1.0;
    }
    return x < 0.0 ? -1.0 : 0.0;
}

double angular_distance(double a, double b) {
    return kPi - std::fabs(std::fabs(a - b) - kPi);
}
} // namespace

double mod_two_pi(double a) {
    return a - kTwoPi * std::floor(a / kTwoPi);
}

std::pair<IdealConfig, IdealConfig>
ideal_configurations(double target_x, double target_y, double L,
                     double theta0) {
    const double d_c = std::hypot(target_x, target_y);
    const double reach = 2.0 * L;
    if (d_c > reach) {
        throw Error("target outside the reachable disk");
    }
    if (d_c < 1e-12) {
        throw Error("target at the arm base is degenerate");
    }
    // Polar angle from the downward vertical, increasing toward +x.
    const double beta = mod_two_pi(std::atan2(target_x, -target_y));
    const double alpha = std::acos(std::min(d_c / reach, 1.0));
    const double t0 = mod_two_pi(theta0);

    auto build = [&](double theta_star) {
        IdealConfig cfg;
        cfg.theta_star = mod_two_pi(theta_star);
        const double xm = L * std::sin(cfg.theta_star);
        const double ym = -L * std::cos(cfg.theta_star);
        cfg.phi_star =
            mod_two_pi(std::atan2(target_x - xm, -(target_y - ym)));
        cfg.delta = angular_distance(cfg.theta_star, t0);
        return cfg;
    };
    return {build(beta - alpha), build(beta + alpha)};
}

double fk_residual(const IdealConfig &cfg, double target_x, double target_y,
                   double L) {
    const auto fk = env::forward_kinematics(cfg.theta_star, cfg.phi_star, L);
    return std::hypot(fk[2] - target_x, fk[3] - target_y);
}

IdealConfig
select_target_config(const std::pair<IdealConfig, IdealConfig> &c) {
    return c.second.delta < c.first.delta ? c.second : c.first;
}

std::pair<double, double> policy_action(const env::ArmState &state,
                                        const IdealConfig &target_config,
                                        const GainConstants &gains,
                                        double max_torque) {
    const double th = mod_two_pi(state.theta);
    const double ph = mod_two_pi(state.phi);
    const double ts = target_config.theta_star;
    const double ps = target_config.phi_star;
    const double dth = ts - th;
    const double dph = ps - ph;

    double a_m = gains.c1 * sign(std::fabs(dth) - kPi) * dth;
    const bool window = ts < kPi ? (ts < ps && ps < ts + kPi)
                                 : (ts - kPi < ps && ps < ts);
    double a_e = window ? -gains.c2 * dph
                        : gains.c2 * sign(std::fabs(dph) - kPi) * dph;
    a_m = std::clamp(a_m, -max_torque, max_torque);
    a_e = std::clamp(a_e, -max_torque, max_torque);
    return {a_m, a_e};
}

BenchmarkEpisode run_benchmark_episode(env::ArmEnv &env,
                                       const GainConstants &gains) {
    const auto obs = env.reset();
    const auto configs = ideal_configurations(
        obs[0], obs[1], env.config().link_length, env.state().theta);
    const IdealConfig cfg = select_target_config(configs);

    BenchmarkEpisode ep;
    ep.target_x = obs[0];
    ep.target_y = obs[1];
    ep.fk_residual = fk_residual(cfg, obs[0], obs[1],
                                 env.config().link_length);
    while (!env.episode_done()) {
        const auto [a_m, a_e] = policy_action(env.state(), cfg, gains,
                                              env.config().max_torque);
        const auto res = env.step(a_m, a_e);
        ep.episode_return += res.reward;
        ep.steps = res.steps_used;
        ep.solved = res.solved;
    }
    return ep;
}

namespace {

CalibrationCell evaluate_pair(const env::EnvConfig &cfg, GainConstants g,
                              std::uint64_t seed, int episodes) {
    env::ArmEnv env(cfg, seed);
    CalibrationCell cell;
    cell.gains = g;
    long solved = 0;
    double steps = 0.0;
    for (int e = 0; e < episodes; ++e) {
        const BenchmarkEpisode ep = run_benchmark_episode(env, g);
        solved += ep.solved ? 1 : 0;
        steps += ep.steps;
    }
    cell.solve_rate = static_cast<double>(solved) / episodes;
    cell.mean_steps = steps / episodes;
    return cell;
}

bool better(const CalibrationCell &a, const CalibrationCell &b) {
    if (a.solve_rate != b.solve_rate) {
        return a.solve_rate > b.solve_rate;
    }
    return a.mean_steps < b.mean_steps;
}

} // namespace

CalibrationReport calibrate_gains(const env::EnvConfig &cfg,
                                  std::uint64_t seed,
                                  int episodes_per_pair) {
    if (episodes_per_pair <= 0) {
        throw ConfigError("episodes_per_pair must be positive");
    }
    CalibrationReport report;
    const double decades[] = {1e-2, 1e-1, 1.0, 10.0, 100.0};
    std::uint64_t tag = 0;
    for (double c1 : decades) {
        for (double c2 : decades) {
            report.coarse.push_back(
                evaluate_pair(cfg, {c1, c2}, substream_seed(seed, tag++),
                              episodes_per_pair));
        }
    }
    CalibrationCell best = report.coarse.front();
    for (const auto &cell : report.coarse) {
        if (better(cell, best)) {
            best = cell;
        }
    }

    const double half_decade = std::sqrt(10.0);
    const double factors[] = {1.0 / half_decade, 1.0, half_decade};
    for (double f1 : factors) {
        for (double f2 : factors) {
            const GainConstants g{best.gains.c1 * f1, best.gains.c2 * f2};
            report.refined.push_back(evaluate_pair(
                cfg, g, substream_seed(seed, tag++), episodes_per_pair));
        }
    }
    CalibrationCell winner = best;
    for (const auto &cell : report.refined) {
        if (better(cell, winner)) {
            winner = cell;
        }
    }
    if (winner.solve_rate < 1.0) {
        throw CalibrationError(
            "no gain pair solved every calibration episode");
    }
    report.best = winner.gains;
    return report;
}

} // namespace qsac::bench
