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

#include "qsac/config.hpp"

#include <string>

#include "qsac/architecture.hpp"
#include "qsac/errors.hpp"
#include "qsac/textio.hpp"

namespace qsac::harness {

namespace {

constexpr int kObsDim = 6;
constexpr int kActionDim = 2;

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) {
        return std::string();
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

bool parse_bool(const std::string &text, const std::string &where) {
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    throw ConfigError(where + ": expected 'true' or 'false', got '" + text +
                      "'");
}

int parse_int_field(const std::string &text, const std::string &where) {
    return static_cast<int>(io::parse_integer(text, where));
}

} // namespace

ExperimentConfig parse_config_text(const std::string &text,
                                   const std::string &origin) {
    ExperimentConfig cfg;
    std::string section;
    int line_no = 0;
    std::string::size_type start = 0;

    auto where = [&](const std::string &key) {
        return origin + ":" + std::to_string(line_no) + ": " + key;
    };

    while (start <= text.size()) {
        if (start == text.size()) {
            break;
        }
        auto nl = text.find('\n', start);
        if (nl == std::string::npos) {
            nl = text.size();
        }
        std::string line = text.substr(start, nl - start);
        start = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": unterminated section header '" + line +
                                  "'");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "experiment" && section != "sac" &&
                section != "actor" && section != "critic" &&
                section != "env" && section != "reference") {
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": unknown section '" + section + "'");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": empty key");
        }
        if (section.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": key '" + key +
                              "' appears before any section header");
        }

        const std::string qual = section + "." + key;
        if (qual == "experiment.name") {
            cfg.name = value;
        } else if (qual == "experiment.n_seeds") {
            cfg.n_seeds = parse_int_field(value, where(qual));
        } else if (qual == "experiment.max_episodes") {
            cfg.max_episodes = parse_int_field(value, where(qual));
        } else if (qual == "experiment.episodes_per_checkpoint") {
            cfg.episodes_per_checkpoint = parse_int_field(value, where(qual));
        } else if (qual == "sac.gamma") {
            cfg.sac.gamma = io::parse_double(value, where(qual));
        } else if (qual == "sac.entropy_alpha") {
            cfg.sac.entropy_alpha = io::parse_double(value, where(qual));
        } else if (qual == "sac.lr") {
            cfg.sac.lr = io::parse_double(value, where(qual));
        } else if (qual == "sac.rho") {
            cfg.sac.rho = io::parse_double(value, where(qual));
        } else if (qual == "sac.batch_size") {
            cfg.sac.batch_size = parse_int_field(value, where(qual));
        } else if (qual == "sac.warmup_steps") {
            cfg.sac.warmup_steps = parse_int_field(value, where(qual));
        } else if (qual == "sac.memory_size") {
            cfg.sac.memory_size = static_cast<std::size_t>(
                io::parse_integer(value, where(qual)));
        } else if (qual == "sac.bootstrap_on_truncation") {
            cfg.sac.bootstrap_on_truncation = parse_bool(value, where(qual));
        } else if (qual == "actor.architecture") {
            cfg.actor_architecture = value;
        } else if (qual == "critic.architecture") {
            cfg.critic_architecture = value;
        } else if (qual == "env.link_mass") {
            cfg.env.link_mass = io::parse_double(value, where(qual));
        } else if (qual == "env.link_length") {
            cfg.env.link_length = io::parse_double(value, where(qual));
        } else if (qual == "env.link_width") {
            cfg.env.link_width = io::parse_double(value, where(qual));
        } else if (qual == "env.max_steps") {
            cfg.env.max_steps = parse_int_field(value, where(qual));
        } else if (qual == "env.fps") {
            cfg.env.fps = io::parse_double(value, where(qual));
        } else if (qual == "env.distance_threshold") {
            cfg.env.distance_threshold = io::parse_double(value, where(qual));
        } else if (qual == "env.max_joint_velocity") {
            cfg.env.max_joint_velocity = io::parse_double(value, where(qual));
        } else if (qual == "env.max_torque") {
            cfg.env.max_torque = io::parse_double(value, where(qual));
        } else if (qual == "env.gravity") {
            cfg.env.gravity = io::parse_double(value, where(qual));
        } else if (qual == "reference.actor_params") {
            cfg.reference_actor_params = static_cast<std::size_t>(
                io::parse_integer(value, where(qual)));
        } else if (qual == "reference.critic_params") {
            cfg.reference_critic_params = static_cast<std::size_t>(
                io::parse_integer(value, where(qual)));
        } else if (qual == "reference.total_params") {
            cfg.reference_total_params = static_cast<std::size_t>(
                io::parse_integer(value, where(qual)));
        } else {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": unknown key '" + key + "' in section [" +
                              section + "]");
        }
    }

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    return parse_config_text(io::read_text_file(path), path);
}

void ExperimentConfig::validate() const {
    if (name.empty()) {
        throw ConfigError("experiment.name must not be empty");
    }
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                        c == '_' || c == '-';
        if (!ok) {
            throw ConfigError("experiment.name may only use [a-z0-9_-]: '" +
                              name + "'");
        }
    }
    if (n_seeds < 1) {
        throw ConfigError("experiment.n_seeds must be >= 1");
    }
    if (max_episodes < 1) {
        throw ConfigError("experiment.max_episodes must be >= 1");
    }
    if (episodes_per_checkpoint < 1) {
        throw ConfigError("experiment.episodes_per_checkpoint must be >= 1");
    }
    sac.validate();
    env.validate();
    // Architecture strings must realize against the environment's fixed
    // shapes; errors surface here, at load time, not mid-training.
    hybrid::parse_architecture(actor_architecture, hybrid::Role::actor,
                               kObsDim, kActionDim);
    hybrid::parse_architecture(critic_architecture, hybrid::Role::critic,
                               kObsDim + kActionDim, kActionDim);
}

std::string config_to_text(const ExperimentConfig &cfg) {
    std::string out;
    auto kv = [&out](const char *key, const std::string &value) {
        out += key;
        out += " = ";
        out += value;
        out.push_back('\n');
    };

    out += "[experiment]\n";
    kv("name", cfg.name);
    kv("n_seeds", std::to_string(cfg.n_seeds));
    kv("max_episodes", std::to_string(cfg.max_episodes));
    kv("episodes_per_checkpoint",
       std::to_string(cfg.episodes_per_checkpoint));
    out += "\n[sac]\n";
    kv("gamma", io::format_double(cfg.sac.gamma));
    kv("entropy_alpha", io::format_double(cfg.sac.entropy_alpha));
    kv("lr", io::format_double(cfg.sac.lr));
    kv("rho", io::format_double(cfg.sac.rho));
    kv("batch_size", std::to_string(cfg.sac.batch_size));
    kv("warmup_steps", std::to_string(cfg.sac.warmup_steps));
    kv("memory_size", std::to_string(cfg.sac.memory_size));
    kv("bootstrap_on_truncation",
       cfg.sac.bootstrap_on_truncation ? "true" : "false");
    out += "\n[actor]\n";
    kv("architecture", cfg.actor_architecture);
    out += "\n[critic]\n";
    kv("architecture", cfg.critic_architecture);
    out += "\n[env]\n";
    kv("link_mass", io::format_double(cfg.env.link_mass));
    kv("link_length", io::format_double(cfg.env.link_length));
    kv("link_width", io::format_double(cfg.env.link_width));
    kv("max_steps", std::to_string(cfg.env.max_steps));
    kv("fps", io::format_double(cfg.env.fps));
    kv("distance_threshold", io::format_double(cfg.env.distance_threshold));
    kv("max_joint_velocity", io::format_double(cfg.env.max_joint_velocity));
    kv("max_torque", io::format_double(cfg.env.max_torque));
    kv("gravity", io::format_double(cfg.env.gravity));
    out += "\n[reference]\n";
    kv("actor_params", std::to_string(cfg.reference_actor_params));
    kv("critic_params", std::to_string(cfg.reference_critic_params));
    kv("total_params", std::to_string(cfg.reference_total_params));
    return out;
}

void save_config(const std::string &path, const ExperimentConfig &cfg) {
    io::write_text_file(path, config_to_text(cfg));
}

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b) {
    return a.name == b.name && a.n_seeds == b.n_seeds &&
           a.max_episodes == b.max_episodes &&
           a.episodes_per_checkpoint == b.episodes_per_checkpoint &&
           a.sac.gamma == b.sac.gamma &&
           a.sac.entropy_alpha == b.sac.entropy_alpha &&
           a.sac.lr == b.sac.lr && a.sac.rho == b.sac.rho &&
           a.sac.batch_size == b.sac.batch_size &&
           a.sac.warmup_steps == b.sac.warmup_steps &&
           a.sac.memory_size == b.sac.memory_size &&
           a.sac.bootstrap_on_truncation == b.sac.bootstrap_on_truncation &&
           a.actor_architecture == b.actor_architecture &&
           a.critic_architecture == b.critic_architecture &&
           a.env.link_mass == b.env.link_mass &&
           a.env.link_length == b.env.link_length &&
           a.env.link_width == b.env.link_width &&
           a.env.max_steps == b.env.max_steps && a.env.fps == b.env.fps &&
           a.env.distance_threshold == b.env.distance_threshold &&
           a.env.max_joint_velocity == b.env.max_joint_velocity &&
           a.env.max_torque == b.env.max_torque &&
           a.env.gravity == b.env.gravity &&
           a.reference_actor_params == b.reference_actor_params &&
           a.reference_critic_params == b.reference_critic_params &&
           a.reference_total_params == b.reference_total_params;
}

} // namespace qsac::harness
