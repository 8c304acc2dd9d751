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
//
// Experiment presets are flat `key = value` files grouped under bracketed
// section headers ([experiment], [sac], [actor], [critic], [env],
// [reference]). Loading is strict: an unknown section or key is a
// ConfigError naming the offender and its line. Saving emits a canonical
// form (fixed key order, shortest round-trip numbers), so for files in
// canonical form load followed by save reproduces the bytes exactly.

#ifndef QSAC_CONFIG_HPP_
#define QSAC_CONFIG_HPP_

#include <cstddef>
#include <string>

#include "qsac/arm_env.hpp"
#include "qsac/sac.hpp"

namespace qsac::harness {

struct ExperimentConfig {
    // [experiment]
    std::string name;
    int n_seeds = 3;
    int max_episodes = 5000;
    int episodes_per_checkpoint = 500;

    // [sac]
    sac::SacHyperparams sac;

    // [actor] / [critic]: layer-tuple strings, e.g. "(6,7)(8,(1,1))" or
    // "(8,VQA(20 layers),8,1)". See parse_architecture for the grammar.
    std::string actor_architecture;
    std::string critic_architecture;

    // [env]
    env::EnvConfig env;

    // [reference]: published parameter counts this preset is meant to
    // reproduce; 0 means "not stated". Purely informational, checked by
    // tooling rather than enforced at load time.
    std::size_t reference_actor_params = 0;
    std::size_t reference_critic_params = 0;
    std::size_t reference_total_params = 0;

    // Checks ranges and parses both architecture strings (actor against
    // the 6-feature observation / 2 torques, critic against the 8-feature
    // state-action input). Throws ConfigError / ParseError.
    void validate() const;
};

// Parses config text. `origin` names the source in error messages
// (usually the file path).
ExperimentConfig parse_config_text(const std::string &text,
                                   const std::string &origin);

ExperimentConfig load_config(const std::string &path);

// Canonical serialization (see file banner).
std::string config_to_text(const ExperimentConfig &cfg);

void save_config(const std::string &path, const ExperimentConfig &cfg);

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b);

} // namespace qsac::harness

#endif // QSAC_CONFIG_HPP_
