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

#include "qsac/arm_env.hpp"

#include <algorithm>
#include <cmath>

#include "qsac/errors.hpp"

namespace qsac::env {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

void EnvConfig::validate() const {
    if (link_mass <= 0.0 || link_length <= 0.0 || link_width <= 0.0 ||
        max_steps <= 0 || fps <= 0.0 || distance_threshold <= 0.0 ||
        max_joint_velocity <= 0.0 || max_torque <= 0.0 || gravity <= 0.0) {
        throw ConfigError("environment parameters must all be positive");
    }
}

std::array<double, 4> forward_kinematics(double theta, double phi,
                                         double L) {
    const double xm = L * std::sin(theta);
    const double ym = -L * std::cos(theta);
    return {xm, ym, xm + L * std::sin(phi), ym - L * std::cos(phi)};
}

double wrap_angle(double a) {
    return a - kTwoPi * std::floor((a + kTwoPi / 2.0) / kTwoPi);
}

ArmEnv::ArmEnv(const EnvConfig &cfg, std::uint64_t seed)
    : cfg_(cfg), rng_(seed) {
    cfg_.validate();
}

std::array<double, 6> ArmEnv::reset() {
    st_ = ArmState{};
    const double reach = 2.0 * cfg_.link_length;
    const double ex0 = 0.0, ey0 = -reach; // hanging end effector
    for (;;) {
        const double r = reach * std::sqrt(rng_.uniform());
        const double ang = rng_.uniform(0.0, kTwoPi);
        const double x = r * std::cos(ang);
        const double y = r * std::sin(ang);
        if (std::hypot(x - ex0, y - ey0) <= cfg_.distance_threshold) {
            continue; // already solved at spawn, draw again
        }
        st_.target_x = x;
        st_.target_y = y;
        break;
    }
    done_ = false;
    return observe();
}

std::array<double, 6> ArmEnv::observe() const {
    const auto fk = forward_kinematics(st_.theta, st_.phi, cfg_.link_length);
    return {st_.target_x, st_.target_y, fk[2], fk[3], st_.theta, st_.phi};
}

StepResult ArmEnv::step(double a_m, double a_e) {
    if (done_) {
        throw ProtocolError("step() on a finished episode (reset first)");
    }
    const double torque_m =
        std::clamp(a_m, -cfg_.max_torque, cfg_.max_torque);
    const double torque_e =
        std::clamp(a_e, -cfg_.max_torque, cfg_.max_torque);

    // Uniform-rod two-link dynamics in absolute angles. With
    // h = m L^2 / 2 and s = sin(theta - phi):
    //   [4/3 m L^2      h cos    ] [dd_theta]   [Q_th - h s w_phi^2 - 3/2 m g L sin(theta)]
    //   [h cos        1/3 m L^2  ] [dd_phi  ] = [Q_ph + h s w_th^2  - 1/2 m g L sin(phi)  ]
    // Positive torque acts clockwise, so Q = (-a_m, -a_e).
    const double m = cfg_.link_mass;
    const double L = cfg_.link_length;
    const double g = cfg_.gravity;
    const double mL2 = m * L * L;
    const double h = 0.5 * mL2;
    const double c = std::cos(st_.theta - st_.phi);
    const double s = std::sin(st_.theta - st_.phi);
    const double m11 = (4.0 / 3.0) * mL2;
    const double m22 = (1.0 / 3.0) * mL2;
    const double m12 = h * c;
    const double rhs1 = -torque_m - h * s * st_.omega_phi * st_.omega_phi -
                        1.5 * m * g * L * std::sin(st_.theta);
    const double rhs2 = -torque_e + h * s * st_.omega_theta * st_.omega_theta -
                        0.5 * m * g * L * std::sin(st_.phi);
    const double det = m11 * m22 - m12 * m12; // >= 7/36 (mL^2)^2, never 0
    const double acc_theta = (m22 * rhs1 - m12 * rhs2) / det;
    const double acc_phi = (m11 * rhs2 - m12 * rhs1) / det;

    const double dt = cfg_.dt();
    const double vmax = cfg_.max_joint_velocity;
    st_.omega_theta =
        std::clamp(st_.omega_theta + acc_theta * dt, -vmax, vmax);
    st_.omega_phi = std::clamp(st_.omega_phi + acc_phi * dt, -vmax, vmax);
    st_.theta = wrap_angle(st_.theta + st_.omega_theta * dt);
    st_.phi = wrap_angle(st_.phi + st_.omega_phi * dt);
    ++st_.step_index;

    StepResult res;
    res.observation = observe();
    const double d = std::hypot(st_.target_x - res.observation[2],
                                st_.target_y - res.observation[3]);
    res.solved = d <= cfg_.distance_threshold;
    res.reward = res.solved ? 5.0 : -d;
    res.done = res.solved || st_.step_index >= cfg_.max_steps;
    res.steps_used = st_.step_index;
    done_ = res.done;
    return res;
}

double ArmEnv::total_energy() const {
    const double m = cfg_.link_mass;
    const double L = cfg_.link_length;
    const double g = cfg_.gravity;
    const double mL2 = m * L * L;
    const double m11 = (4.0 / 3.0) * mL2;
    const double m22 = (1.0 / 3.0) * mL2;
    const double m12 = 0.5 * mL2 * std::cos(st_.theta - st_.phi);
    const double kinetic = 0.5 * m11 * st_.omega_theta * st_.omega_theta +
                           0.5 * m22 * st_.omega_phi * st_.omega_phi +
                           m12 * st_.omega_theta * st_.omega_phi;
    const double potential =
        -m * g * L * (1.5 * std::cos(st_.theta) + 0.5 * std::cos(st_.phi));
    return kinetic + potential;
}

} // namespace qsac::env
