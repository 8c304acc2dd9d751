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

#include "qsac/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "qsac/architecture.hpp"
#include "qsac/arm_env.hpp"
#include "qsac/checkpoint.hpp"
#include "qsac/circuit.hpp"
#include "qsac/errors.hpp"
#include "qsac/gradients.hpp"
#include "qsac/kernels.hpp"
#include "qsac/networks.hpp"
#include "qsac/rng.hpp"

namespace qsac::harness {

namespace {

constexpr int kObsDim = 6;
constexpr int kActionDim = 2;
constexpr int kCurveWindow = 20;

// Substream tags for per-seed run reproducibility. The seed index is the
// root, so runs with more seeds extend shorter ones without disturbing
// the shared prefix.
constexpr std::uint64_t kEnvStreamTag = 11;
constexpr std::uint64_t kAgentStreamTag = 12;

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double max_abs_diff(const std::vector<double> &a,
                    const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw DimensionError("gradient length mismatch in cross-check");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace

std::vector<double>
fd_gradient(const std::function<double(const std::vector<double> &)> &f,
            const std::vector<double> &x, double h) {
    if (!(h > 0.0)) {
        throw ConfigError("finite-difference step must be positive");
    }
    std::vector<double> grad(x.size());
    std::vector<double> probe(x);
    for (std::size_t k = 0; k < x.size(); ++k) {
        probe[k] = x[k] + h;
        const double up = f(probe);
        probe[k] = x[k] - h;
        const double down = f(probe);
        probe[k] = x[k];
        grad[k] = (up - down) / (2.0 * h);
    }
    return grad;
}

GradientTriangleReport gradient_triangle(int cases, std::uint64_t seed,
                                         int max_qubits, int max_layers) {
    if (cases < 1 || max_qubits < 1 || max_layers < 1) {
        throw ConfigError("gradient_triangle arguments must be >= 1");
    }
    GradientTriangleReport report;
    report.cases = cases;
    report.max_qubits = max_qubits;
    report.max_layers = max_layers;

    RandomStream rng(substream_seed(seed, 29));
    for (int c = 0; c < cases; ++c) {
        sim::CircuitSpec spec;
        spec.n_qubits =
            1 + static_cast<int>(rng.uniform_index(
                    static_cast<std::size_t>(max_qubits)));
        spec.n_layers =
            1 + static_cast<int>(rng.uniform_index(
                    static_cast<std::size_t>(max_layers)));
        spec.reupload = rng.uniform() < 0.5;
        spec.last_layer_yz_only = rng.uniform() < 0.5;
        spec.validate();

        const sim::CircuitParams params = sim::CircuitParams::random(spec, rng);
        std::vector<double> x(static_cast<std::size_t>(spec.n_qubits));
        std::vector<double> upstream(x.size());
        for (double &v : x) {
            v = rng.uniform(-1.5, 1.5);
        }
        for (double &v : upstream) {
            v = rng.uniform(-1.0, 1.0);
        }

        const std::vector<double> shift =
            sim::grad_parameter_shift(spec, params, x, upstream);
        const sim::AdjointGradients adj =
            sim::grad_adjoint(spec, params, x, upstream, true, true);

        const std::vector<double> flat = params.flatten();
        const auto objective_params = [&](const std::vector<double> &v) {
            const sim::CircuitParams p = sim::CircuitParams::unflatten(spec, v);
            return dot(upstream, sim::run_circuit(spec, p, x));
        };
        const auto objective_inputs = [&](const std::vector<double> &v) {
            return dot(upstream, sim::run_circuit(spec, params, v));
        };
        const std::vector<double> fd_params =
            fd_gradient(objective_params, flat, report.fd_step);
        const std::vector<double> fd_inputs =
            fd_gradient(objective_inputs, x, report.fd_step);

        report.max_shift_vs_adjoint = std::max(
            report.max_shift_vs_adjoint, max_abs_diff(shift, adj.params));
        report.max_adjoint_vs_fd = std::max(
            report.max_adjoint_vs_fd, max_abs_diff(adj.params, fd_params));
        report.max_adjoint_vs_fd = std::max(
            report.max_adjoint_vs_fd, max_abs_diff(adj.inputs, fd_inputs));
        report.max_shift_vs_fd =
            std::max(report.max_shift_vs_fd, max_abs_diff(shift, fd_params));
    }
    return report;
}

std::vector<io::CurvePoint>
aggregate_curves(const std::vector<std::vector<double>> &per_seed_returns,
                 int window) {
    std::vector<std::vector<double>> smoothed;
    std::size_t min_len = 0;
    for (const auto &returns : per_seed_returns) {
        if (returns.empty()) {
            continue; // a seed that produced nothing cannot shape the curve
        }
        smoothed.push_back(stats::moving_average(returns, window));
        min_len = smoothed.size() == 1
                      ? returns.size()
                      : std::min(min_len, returns.size());
    }
    std::vector<io::CurvePoint> curve;
    if (smoothed.empty()) {
        return curve;
    }
    curve.reserve(min_len);
    std::vector<double> column(smoothed.size());
    for (std::size_t i = 0; i < min_len; ++i) {
        for (std::size_t s = 0; s < smoothed.size(); ++s) {
            column[s] = smoothed[s][i];
        }
        io::CurvePoint p;
        p.episode = static_cast<int>(i) + 1;
        p.mean_return = stats::mean(column);
        p.std_return = stats::stddev(column, 0);
        curve.push_back(p);
    }
    return curve;
}

void save_agent_checkpoint(const std::string &path,
                           const ExperimentConfig &cfg, int seed_index,
                           int episode, sac::SacAgent &agent) {
    hybrid::Checkpoint cp;
    cp.meta["config_name"] = cfg.name;
    cp.meta["seed_index"] = std::to_string(seed_index);
    cp.meta["episode"] = std::to_string(episode);
    cp.meta["actor_architecture"] = cfg.actor_architecture;
    cp.meta["critic_architecture"] = cfg.critic_architecture;
    cp.meta["env_link_mass"] = io::format_double(cfg.env.link_mass);
    cp.meta["env_link_length"] = io::format_double(cfg.env.link_length);
    cp.meta["env_link_width"] = io::format_double(cfg.env.link_width);
    cp.meta["env_max_steps"] = std::to_string(cfg.env.max_steps);
    cp.meta["env_fps"] = io::format_double(cfg.env.fps);
    cp.meta["env_distance_threshold"] =
        io::format_double(cfg.env.distance_threshold);
    cp.meta["env_max_joint_velocity"] =
        io::format_double(cfg.env.max_joint_velocity);
    cp.meta["env_max_torque"] = io::format_double(cfg.env.max_torque);
    cp.meta["env_gravity"] = io::format_double(cfg.env.gravity);
    cp.vectors.emplace_back("actor", agent.actor().params());
    cp.vectors.emplace_back("critic1", agent.critic(0).params());
    cp.vectors.emplace_back("critic2", agent.critic(1).params());
    cp.vectors.emplace_back("target_critic1", agent.target(0).params());
    cp.vectors.emplace_back("target_critic2", agent.target(1).params());
    hybrid::save_checkpoint(path, cp);
}

namespace {

std::string seed_dir_name(const std::string &out_dir, int seed_index) {
    return out_dir + "/seed_" + std::to_string(seed_index);
}

double mean_of_tail(const std::vector<double> &values, std::size_t tail) {
    if (values.empty()) {
        return 0.0;
    }
    const std::size_t n = std::min(values.size(), tail);
    double acc = 0.0;
    for (std::size_t i = values.size() - n; i < values.size(); ++i) {
        acc += values[i];
    }
    return acc / static_cast<double>(n);
}

std::string manifest_text(const ExperimentConfig &cfg,
                          const ExperimentResult &result,
                          double total_wall_seconds) {
    std::string out("qsac run manifest\n");
    out += "name = " + cfg.name + "\n";
    out += "n_seeds = " + std::to_string(result.seeds.size()) + "\n";
    out += "max_episodes = " + std::to_string(cfg.max_episodes) + "\n";
    out += std::string("kernel_isa = ") +
           (kernels::active_isa() == kernels::Isa::avx2 ? "avx2" : "scalar") +
           "\n";
    char buf[256];
    for (const SeedRunSummary &s : result.seeds) {
        std::snprintf(buf, sizeof(buf),
                      "seed %d: episodes=%d solved=%d diverged=%s "
                      "wall_seconds=%.1f last_window_mean=%.3f\n",
                      s.seed_index, s.episodes, s.solved_episodes,
                      s.diverged ? "yes" : "no", s.wall_seconds,
                      s.last_window_mean);
        out += buf;
        if (s.diverged) {
            out += "  divergence: " + s.divergence_detail + "\n";
        }
    }
    std::snprintf(buf, sizeof(buf), "total_wall_seconds=%.1f\n",
                  total_wall_seconds);
    out += buf;
    return out;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig &base,
                                const std::string &out_dir,
                                const RunOptions &opts) {
    ExperimentConfig cfg = base;
    if (opts.n_seeds_override > 0) {
        cfg.n_seeds = opts.n_seeds_override;
    }
    if (opts.max_episodes_override > 0) {
        cfg.max_episodes = opts.max_episodes_override;
    }
    cfg.validate();

    io::ensure_directory(out_dir);
    save_config(out_dir + "/config.txt", cfg);

    const hybrid::NetworkPlan actor_plan = hybrid::parse_architecture(
        cfg.actor_architecture, hybrid::Role::actor, kObsDim, kActionDim);
    const hybrid::NetworkPlan critic_plan = hybrid::parse_architecture(
        cfg.critic_architecture, hybrid::Role::critic, kObsDim + kActionDim,
        kActionDim);

    ExperimentResult result;
    result.out_dir = out_dir;
    std::vector<std::vector<double>> per_seed_returns;
    const auto run_start = std::chrono::steady_clock::now();

    for (int k = 0; k < cfg.n_seeds; ++k) {
        const std::string seed_dir = seed_dir_name(out_dir, k);
        io::ensure_directory(seed_dir);

        SeedRunSummary summary;
        summary.seed_index = k;
        summary.run_id = cfg.name + "-s" + std::to_string(k);

        const std::uint64_t root = static_cast<std::uint64_t>(k);
        env::ArmEnv env(cfg.env, substream_seed(root, kEnvStreamTag));
        sac::SacAgent agent(actor_plan, critic_plan, cfg.sac,
                            cfg.env.max_torque,
                            substream_seed(root, kAgentStreamTag));

        std::vector<io::EpisodeRow> rows;
        std::vector<double> returns;
        rows.reserve(static_cast<std::size_t>(cfg.max_episodes));
        returns.reserve(static_cast<std::size_t>(cfg.max_episodes));

        const auto seed_start = std::chrono::steady_clock::now();
        const auto on_episode = [&](const sac::EpisodeOutcome &o) {
            io::EpisodeRow row;
            row.run_id = summary.run_id;
            row.seed = root;
            row.episode = o.episode;
            row.steps = o.steps;
            row.episode_return = o.episode_return;
            row.solved = o.solved;
            row.wall_ms = static_cast<std::int64_t>(
                std::llround(o.steps * 1000.0 / cfg.env.fps));
            rows.push_back(std::move(row));
            returns.push_back(o.episode_return);
            if (o.solved) {
                ++summary.solved_episodes;
            }
            if (o.episode % cfg.episodes_per_checkpoint == 0) {
                save_agent_checkpoint(seed_dir + "/checkpoint_ep" +
                                          std::to_string(o.episode) + ".txt",
                                      cfg, k, o.episode, agent);
            }
            if (opts.verbose && o.episode % 50 == 0) {
                std::fprintf(stderr,
                             "[%s] episode %d/%d return %.3f solved %d\n",
                             summary.run_id.c_str(), o.episode,
                             cfg.max_episodes, o.episode_return,
                             o.solved ? 1 : 0);
            }
        };

        try {
            train_run(env, agent, cfg.max_episodes, on_episode);
        } catch (const DivergenceError &err) {
            summary.diverged = true;
            summary.divergence_detail = err.what();
            if (opts.verbose) {
                std::fprintf(stderr, "[%s] diverged: %s\n",
                             summary.run_id.c_str(), err.what());
            }
        }
        summary.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          seed_start)
                .count();
        summary.episodes = static_cast<int>(rows.size());
        summary.last_window_mean = mean_of_tail(returns, 100);

        io::write_episode_csv(seed_dir + "/episodes.csv", rows);
        // Written even after divergence; a checkpoint full of non-finite
        // numbers is still evidence worth keeping.
        save_agent_checkpoint(seed_dir + "/checkpoint_final.txt", cfg, k,
                              summary.episodes, agent);

        per_seed_returns.push_back(std::move(returns));
        result.seeds.push_back(std::move(summary));
    }

    result.curve = aggregate_curves(per_seed_returns, kCurveWindow);
    io::write_curve_csv(out_dir + "/curve.csv", result.curve);

    const double total_wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      run_start)
            .count();
    io::write_text_file(out_dir + "/manifest.txt",
                        manifest_text(cfg, result, total_wall));
    return result;
}

BenchmarkStats
summarize_benchmark(const std::vector<bench::BenchmarkEpisode> &episodes) {
    if (episodes.empty()) {
        throw DimensionError("no benchmark episodes to summarize");
    }
    BenchmarkStats s;
    s.episodes = static_cast<int>(episodes.size());
    std::vector<double> steps, returns;
    steps.reserve(episodes.size());
    returns.reserve(episodes.size());
    int solved = 0;
    for (const bench::BenchmarkEpisode &ep : episodes) {
        steps.push_back(static_cast<double>(ep.steps));
        returns.push_back(ep.episode_return);
        solved += ep.solved ? 1 : 0;
        s.max_fk_residual = std::max(s.max_fk_residual, ep.fk_residual);
    }
    s.solve_rate = static_cast<double>(solved) /
                   static_cast<double>(episodes.size());
    s.steps = stats::describe(steps, 1);
    s.episode_return = stats::describe(returns, 1);
    return s;
}

std::string benchmark_stats_text(const BenchmarkStats &s) {
    char buf[128];
    std::string out;
    std::snprintf(buf, sizeof(buf), "%-10s %14s %14s\n", "", "steps",
                  "return");
    out += buf;
    const auto row = [&](const char *label, double a, double b) {
        std::snprintf(buf, sizeof(buf), "%-10s %14.6g %14.6g\n", label, a, b);
        out += buf;
    };
    row("count", static_cast<double>(s.steps.count),
        static_cast<double>(s.episode_return.count));
    row("mean", s.steps.mean, s.episode_return.mean);
    row("std", s.steps.std, s.episode_return.std);
    row("min", s.steps.min, s.episode_return.min);
    row("25%", s.steps.q25, s.episode_return.q25);
    row("50%", s.steps.q50, s.episode_return.q50);
    row("75%", s.steps.q75, s.episode_return.q75);
    row("max", s.steps.max, s.episode_return.max);
    std::snprintf(buf, sizeof(buf), "solve_rate %.6g\n", s.solve_rate);
    out += buf;
    std::snprintf(buf, sizeof(buf), "max_fk_residual %.3e\n",
                  s.max_fk_residual);
    out += buf;
    return out;
}

void save_benchmark_stats(const std::string &path, const BenchmarkStats &s) {
    std::string out;
    const auto kv = [&out](const char *key, const std::string &value) {
        out += key;
        out += " = ";
        out += value;
        out.push_back('\n');
    };
    kv("episodes", std::to_string(s.episodes));
    kv("solve_rate", io::format_double(s.solve_rate));
    kv("steps_mean", io::format_double(s.steps.mean));
    kv("steps_std", io::format_double(s.steps.std));
    kv("steps_min", io::format_double(s.steps.min));
    kv("steps_q25", io::format_double(s.steps.q25));
    kv("steps_q50", io::format_double(s.steps.q50));
    kv("steps_q75", io::format_double(s.steps.q75));
    kv("steps_max", io::format_double(s.steps.max));
    kv("return_mean", io::format_double(s.episode_return.mean));
    kv("return_std", io::format_double(s.episode_return.std));
    kv("return_min", io::format_double(s.episode_return.min));
    kv("return_q25", io::format_double(s.episode_return.q25));
    kv("return_q50", io::format_double(s.episode_return.q50));
    kv("return_q75", io::format_double(s.episode_return.q75));
    kv("return_max", io::format_double(s.episode_return.max));
    kv("max_fk_residual", io::format_double(s.max_fk_residual));
    io::write_text_file(path, out);
}

BenchmarkStats load_benchmark_stats(const std::string &path) {
    const std::string text = io::read_text_file(path);
    BenchmarkStats s;
    int line_no = 0;
    std::string::size_type start = 0;
    while (start < text.size()) {
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
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path + ":" + std::to_string(line_no) +
                             ": expected 'key = value'");
        }
        auto trim = [](std::string v) {
            const auto f = v.find_first_not_of(" \t");
            if (f == std::string::npos) {
                return std::string();
            }
            const auto l = v.find_last_not_of(" \t");
            return v.substr(f, l - f + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string where = path + ":" + std::to_string(line_no);
        if (key == "episodes") {
            s.episodes = static_cast<int>(io::parse_integer(value, where));
            s.steps.count = static_cast<std::size_t>(s.episodes);
            s.episode_return.count = static_cast<std::size_t>(s.episodes);
        } else if (key == "solve_rate") {
            s.solve_rate = io::parse_double(value, where);
        } else if (key == "steps_mean") {
            s.steps.mean = io::parse_double(value, where);
        } else if (key == "steps_std") {
            s.steps.std = io::parse_double(value, where);
        } else if (key == "steps_min") {
            s.steps.min = io::parse_double(value, where);
        } else if (key == "steps_q25") {
            s.steps.q25 = io::parse_double(value, where);
        } else if (key == "steps_q50") {
            s.steps.q50 = io::parse_double(value, where);
        } else if (key == "steps_q75") {
            s.steps.q75 = io::parse_double(value, where);
        } else if (key == "steps_max") {
            s.steps.max = io::parse_double(value, where);
        } else if (key == "return_mean") {
            s.episode_return.mean = io::parse_double(value, where);
        } else if (key == "return_std") {
            s.episode_return.std = io::parse_double(value, where);
        } else if (key == "return_min") {
            s.episode_return.min = io::parse_double(value, where);
        } else if (key == "return_q25") {
            s.episode_return.q25 = io::parse_double(value, where);
        } else if (key == "return_q50") {
            s.episode_return.q50 = io::parse_double(value, where);
        } else if (key == "return_q75") {
            s.episode_return.q75 = io::parse_double(value, where);
        } else if (key == "return_max") {
            s.episode_return.max = io::parse_double(value, where);
        } else if (key == "max_fk_residual") {
            s.max_fk_residual = io::parse_double(value, where);
        } else {
            throw ParseError(path + ":" + std::to_string(line_no) +
                             ": unknown key '" + key + "'");
        }
    }
    return s;
}

CurveSeries load_run_curve(const std::string &run_dir) {
    CurveSeries series;
    series.name = load_config(run_dir + "/config.txt").name;
    series.points = io::read_curve_csv(run_dir + "/curve.csv");
    return series;
}

std::string export_curves(const std::vector<CurveSeries> &series,
                          const BenchmarkStats *reference,
                          std::vector<std::string> *warnings) {
    if (series.empty()) {
        throw ConfigError("no curve series to export");
    }
    std::size_t min_len = series.front().points.size();
    for (const CurveSeries &s : series) {
        if (s.points.empty()) {
            throw ConfigError("curve series '" + s.name + "' is empty");
        }
        min_len = std::min(min_len, s.points.size());
    }
    for (const CurveSeries &s : series) {
        if (s.points.size() > min_len && warnings != nullptr) {
            warnings->push_back(
                s.name + ": truncated from " +
                std::to_string(s.points.size()) + " to " +
                std::to_string(min_len) + " episodes for a common range");
        }
    }

    std::string out("config_name,episode,mean_return,std_return\n");
    const auto emit = [&out](const std::string &name, int episode,
                             double mean, double std) {
        out += name;
        out.push_back(',');
        out += std::to_string(episode);
        out.push_back(',');
        out += io::format_double(mean);
        out.push_back(',');
        out += io::format_double(std);
        out.push_back('\n');
    };
    for (const CurveSeries &s : series) {
        for (std::size_t i = 0; i < min_len; ++i) {
            emit(s.name, s.points[i].episode, s.points[i].mean_return,
                 s.points[i].std_return);
        }
    }
    if (reference != nullptr) {
        for (std::size_t i = 0; i < min_len; ++i) {
            emit("benchmark", series.front().points[i].episode,
                 reference->episode_return.mean, 0.0);
        }
    }
    return out;
}

EvalReport evaluate_checkpoint(const std::string &checkpoint_path,
                               int episodes, std::uint64_t seed) {
    if (episodes < 1) {
        throw ConfigError("eval needs at least one episode");
    }
    const hybrid::Checkpoint cp = hybrid::load_checkpoint(checkpoint_path);

    env::EnvConfig env_cfg;
    const auto meta_double = [&](const char *key) {
        return io::parse_double(cp.need_meta(key), key);
    };
    env_cfg.link_mass = meta_double("env_link_mass");
    env_cfg.link_length = meta_double("env_link_length");
    env_cfg.link_width = meta_double("env_link_width");
    env_cfg.max_steps = static_cast<int>(
        io::parse_integer(cp.need_meta("env_max_steps"), "env_max_steps"));
    env_cfg.fps = meta_double("env_fps");
    env_cfg.distance_threshold = meta_double("env_distance_threshold");
    env_cfg.max_joint_velocity = meta_double("env_max_joint_velocity");
    env_cfg.max_torque = meta_double("env_max_torque");
    env_cfg.gravity = meta_double("env_gravity");
    env_cfg.validate();

    const hybrid::NetworkPlan plan = hybrid::parse_architecture(
        cp.need_meta("actor_architecture"), hybrid::Role::actor, kObsDim,
        kActionDim);
    hybrid::HybridNet actor(plan);
    const std::vector<double> *weights = cp.find("actor");
    if (weights == nullptr) {
        throw ParseError(checkpoint_path + ": no 'actor' parameter vector");
    }
    if (weights->size() != actor.params().size()) {
        throw DimensionError(
            checkpoint_path + ": actor vector holds " +
            std::to_string(weights->size()) + " values, architecture needs " +
            std::to_string(actor.params().size()));
    }
    actor.params() = *weights;

    env::ArmEnv env(env_cfg, seed);
    EvalReport report;
    report.episodes = episodes;
    std::vector<double> features(kObsDim);
    int solved = 0;
    long long total_steps = 0;
    double total_return = 0.0;
    for (int e = 0; e < episodes; ++e) {
        auto obs = env.reset();
        double ep_return = 0.0;
        while (!env.episode_done()) {
            std::copy(obs.begin(), obs.end(), features.begin());
            const std::vector<double> &out = actor.forward(features);
            const double a_m = env_cfg.max_torque * std::tanh(out[0]);
            const double a_e = env_cfg.max_torque * std::tanh(out[1]);
            const env::StepResult res = env.step(a_m, a_e);
            obs = res.observation;
            ep_return += res.reward;
            if (res.done) {
                total_steps += res.steps_used;
                solved += res.solved ? 1 : 0;
            }
        }
        total_return += ep_return;
    }
    report.mean_return = total_return / episodes;
    report.mean_steps =
        static_cast<double>(total_steps) / static_cast<double>(episodes);
    report.solve_rate = static_cast<double>(solved) /
                        static_cast<double>(episodes);
    return report;
}

} // namespace qsac::harness
