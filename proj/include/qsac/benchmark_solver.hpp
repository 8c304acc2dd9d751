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

#include <cstdint>
#include <utility>
#include <vector>

#include "qsac/arm_env.hpp"

namespace qsac::bench {

/**
 * @brief One closed-form arm configuration whose forward kinematics land on
 * the target. Angles in [0, 2pi) — the solver works in that convention
 * throughout and converts from the environment's [-pi, pi) at the boundary.
 */
struct IdealConfig {
    double theta_star = 0.0;
    double phi_star = 0.0;
    double delta = 0.0; // angular distance to the episode's initial theta
};

struct GainConstants {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Wraps into [0, 2pi).
double mod_two_pi(double a);

/**
 * @brief The two isosceles-triangle solutions for a reachable target.
 *
 * With d_c = |target|, alpha = acos(d_c / 2L) and beta the polar angle of
 * the target measured from the downward vertical:
 *   theta*_1 = (beta - alpha) mod 2pi,  theta*_2 = (beta + alpha) mod 2pi,
 * and each phi*_i is the polar angle of (target - joint_i). Throws Error
 * when d_c > 2L (unreachable) or d_c is ~0 (degenerate: every direction
 * works and atan2 is undefined).
 */
std::pair<IdealConfig, IdealConfig>
ideal_configurations(double target_x, double target_y, double L,
                     double theta0);

/// Euclidean distance from forward_kinematics(theta*, phi*) to the target.
double fk_residual(const IdealConfig &cfg, double target_x, double target_y,
                   double L);

/// The candidate minimizing delta = pi - ||theta* - theta0| - pi|; ties go
/// to the first.
IdealConfig select_target_config(const std::pair<IdealConfig, IdealConfig> &c);

/**
 * @brief Deterministic control law.
 *
 * With dth = theta* - theta and dph = phi* - phi (all in [0, 2pi)):
 *   a_m = c1 * sign(|dth| - pi) * dth
 *   a_e = -c2 * dph                 when phi* lies in the half-turn window
 *                                   above theta* (theta* < phi* < theta*+pi,
 *                                   shifted by -pi when theta* >= pi)
 *   a_e = c2 * sign(|dph| - pi) * dph   otherwise
 * Torques are clamped to +-max_torque.
 */
std::pair<double, double> policy_action(const env::ArmState &state,
                                        const IdealConfig &target_config,
                                        const GainConstants &gains,
                                        double max_torque);

struct BenchmarkEpisode {
    double target_x = 0.0;
    double target_y = 0.0;
    int steps = 0;
    double episode_return = 0.0;
    bool solved = false;
    double fk_residual = 0.0; // of the selected ideal configuration
};

/// Resets `env` and plays the deterministic policy to termination.
BenchmarkEpisode run_benchmark_episode(env::ArmEnv &env,
                                       const GainConstants &gains);

struct CalibrationCell {
    GainConstants gains;
    double solve_rate = 0.0;
    double mean_steps = 0.0;
};

struct CalibrationReport {
    GainConstants best;
    std::vector<CalibrationCell> coarse;
    std::vector<CalibrationCell> refined;
};

/**
 * @brief Grid search for the control gains.
 *
 * Coarse pass over c1, c2 in {1e-2, 1e-1, 1, 10, 100}, then one refinement
 * over half-decade factors {10^-0.5, 1, 10^0.5} around the best cell. Best
 * = highest solve rate, ties broken by lower mean steps, then by first
 * visit. Throws CalibrationError unless the winner solves every
 * calibration episode.
 */
CalibrationReport calibrate_gains(const env::EnvConfig &cfg,
                                  std::uint64_t seed,
                                  int episodes_per_pair);

} // namespace qsac::bench
