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
#include <vector>

#include "qsac/rng.hpp"

namespace qsac::env {

/**
 * @brief Two-link planar arm parameters.
 *
 * The arm hangs from a fixed base at the origin; both links are uniform
 * rods of mass `link_mass` and length `link_length`. Angles are absolute,
 * measured from the downward vertical and increasing toward +x. Positive
 * torque accelerates a link clockwise (against angle growth) — the
 * handedness the deterministic control law assumes; the dynamics are odd
 * in the angles, so the choice is observationally symmetric.
 */
struct EnvConfig {
    double link_mass = 0.01;       // kg
    double link_length = 0.5;      // m
    double link_width = 0.1;       // m, geometry only (no dynamics role)
    int max_steps = 250;
    double fps = 50.0;             // dt = 1/fps
    double distance_threshold = 0.25; // m
    double max_joint_velocity = 2.5;  // rad/s
    double max_torque = 1000.0;       // Nm
    double gravity = 9.81;            // m/s^2, downward

    double dt() const { return 1.0 / fps; }
    void validate() const;
};

struct ArmState {
    double theta = 0.0; // link-1 absolute angle, [-pi, pi)
    double phi = 0.0;   // link-2 absolute angle, [-pi, pi)
    double omega_theta = 0.0;
    double omega_phi = 0.0;
    double target_x = 0.0;
    double target_y = 0.0;
    int step_index = 0;
};

struct StepResult {
    std::array<double, 6> observation{}; // (x_t, y_t, x_e, y_e, theta, phi)
    double reward = 0.0;
    bool done = false;
    bool solved = false; // threshold reached (as opposed to truncation)
    int steps_used = 0;
};

/// (x_m, y_m, x_e, y_e) of the joint and end effector.
std::array<double, 4> forward_kinematics(double theta, double phi, double L);

/// Wraps an angle into [-pi, pi).
double wrap_angle(double a);

/**
 * @brief The environment. One instance is single-threaded; independent
 * instances with independent seeds may run in parallel.
 */
class ArmEnv {
  public:
    ArmEnv(const EnvConfig &cfg, std::uint64_t seed);

    const EnvConfig &config() const { return cfg_; }
    const ArmState &state() const { return st_; }
    bool episode_done() const { return done_; }

    /// Hanging rest pose; target drawn area-uniformly over the reachable
    /// disk, rejecting draws within distance_threshold of the initial end
    /// effector. Returns the initial observation.
    std::array<double, 6> reset();

    /// One dt of dynamics under the given torques (clamped to
    /// +-max_torque). Throws ProtocolError when the episode is already
    /// over (or reset was never called).
    StepResult step(double a_m, double a_e);

    std::array<double, 6> observe() const;

    /// Kinetic plus potential energy (integrator diagnostics).
    double total_energy() const;

  private:
    EnvConfig cfg_;
    ArmState st_;
    RandomStream rng_;
    bool done_ = true; // step() is illegal until the first reset()
};

} // namespace qsac::env
