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
// Command-line entry point. Subcommands:
//   train      multi-seed SAC training from a preset file
//   benchmark  deterministic-solver episodes with calibrated gains
//   calibrate  grid-search the solver gains and write them to a file
//   gradcheck  cross-check the three circuit gradient routes
//   eval       greedy-policy rollout of a saved checkpoint
//   curves     merge run curves into one long-format overlay CSV
// Every subcommand exits 0 only when it fully succeeded.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qsac/arm_env.hpp"
#include "qsac/benchmark_solver.hpp"
#include "qsac/config.hpp"
#include "qsac/errors.hpp"
#include "qsac/experiment.hpp"
#include "qsac/kernels.hpp"
#include "qsac/textio.hpp"

namespace {

using qsac::harness::BenchmarkStats;
using qsac::harness::ExperimentConfig;

// ---------------------------------------------------------------------
// Gains file: two keys, `c1 = ...` and `c2 = ...`; '#' starts a comment.
// ---------------------------------------------------------------------

qsac::bench::GainConstants load_gains(const std::string &path) {
    const std::string text = qsac::io::read_text_file(path);
    qsac::bench::GainConstants gains{0.0, 0.0};
    bool have_c1 = false;
    bool have_c2 = false;
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
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw qsac::ParseError(path + ":" + std::to_string(line_no) +
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
        if (key == "c1") {
            gains.c1 = qsac::io::parse_double(value, "c1");
            have_c1 = true;
        } else if (key == "c2") {
            gains.c2 = qsac::io::parse_double(value, "c2");
            have_c2 = true;
        } else {
            throw qsac::ParseError(path + ":" + std::to_string(line_no) +
                                   ": unknown key '" + key + "'");
        }
    }
    if (!have_c1 || !have_c2) {
        throw qsac::ParseError(path + ": gains file needs both c1 and c2");
    }
    return gains;
}

void save_gains(const std::string &path,
                const qsac::bench::GainConstants &gains,
                const qsac::bench::CalibrationReport &report,
                std::uint64_t seed, int episodes_per_pair) {
    std::string out("# solver gains from `qsac calibrate`\n");
    out += "# seed " + std::to_string(seed) + ", " +
           std::to_string(episodes_per_pair) + " episodes per grid cell, " +
           std::to_string(report.coarse.size()) + " coarse + " +
           std::to_string(report.refined.size()) + " refined cells\n";
    out += "c1 = " + qsac::io::format_double(gains.c1) + "\n";
    out += "c2 = " + qsac::io::format_double(gains.c2) + "\n";
    qsac::io::write_text_file(path, out);
}

// ---------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.
// ---------------------------------------------------------------------

int cmd_train(const std::string &config_path, int seeds, int episodes,
              const std::string &out_dir, bool quiet) {
    const ExperimentConfig cfg = qsac::harness::load_config(config_path);
    qsac::harness::RunOptions opts;
    opts.n_seeds_override = seeds;
    opts.max_episodes_override = episodes;
    opts.verbose = !quiet;
    const qsac::harness::ExperimentResult result =
        qsac::harness::run_experiment(cfg, out_dir, opts);

    bool any_diverged = false;
    for (const auto &s : result.seeds) {
        std::printf("%s: %d episodes, %d solved, last-window mean %.3f%s\n",
                    s.run_id.c_str(), s.episodes, s.solved_episodes,
                    s.last_window_mean, s.diverged ? " [diverged]" : "");
        any_diverged = any_diverged || s.diverged;
    }
    std::printf("artifacts in %s\n", result.out_dir.c_str());
    if (any_diverged) {
        std::fprintf(stderr, "error: at least one seed diverged\n");
        return 1;
    }
    return 0;
}

int cmd_benchmark(int episodes, std::uint64_t seed,
                  const std::string &out_dir, const std::string &gains_path) {
    qsac::bench::GainConstants gains{0.0, 0.0};
    try {
        gains = load_gains(gains_path);
    } catch (const qsac::Error &err) {
        std::fprintf(stderr,
                     "error: cannot load gains from %s (%s)\n"
                     "run `qsac calibrate --out %s` first\n",
                     gains_path.c_str(), err.what(), gains_path.c_str());
        return 1;
    }

    const qsac::env::EnvConfig env_cfg; // presets share the default arm
    qsac::env::ArmEnv env(env_cfg, seed);
    std::vector<qsac::bench::BenchmarkEpisode> episodes_run;
    std::vector<qsac::io::BenchmarkRow> rows;
    episodes_run.reserve(static_cast<std::size_t>(episodes));
    rows.reserve(static_cast<std::size_t>(episodes));
    for (int e = 1; e <= episodes; ++e) {
        const auto ep = qsac::bench::run_benchmark_episode(env, gains);
        qsac::io::BenchmarkRow row;
        row.episode = e;
        row.target_x = ep.target_x;
        row.target_y = ep.target_y;
        row.steps = ep.steps;
        row.episode_return = ep.episode_return;
        row.solved = ep.solved;
        rows.push_back(row);
        episodes_run.push_back(ep);
    }

    const BenchmarkStats stats =
        qsac::harness::summarize_benchmark(episodes_run);
    qsac::io::ensure_directory(out_dir);
    qsac::io::write_benchmark_csv(out_dir + "/episodes.csv", rows);
    qsac::harness::save_benchmark_stats(out_dir + "/stats.txt", stats);
    std::printf("%s", qsac::harness::benchmark_stats_text(stats).c_str());
    std::printf("artifacts in %s\n", out_dir.c_str());
    return 0;
}

int cmd_calibrate(const std::string &out_path, std::uint64_t seed,
                  int episodes_per_pair) {
    const qsac::env::EnvConfig env_cfg;
    const qsac::bench::CalibrationReport report =
        qsac::bench::calibrate_gains(env_cfg, seed, episodes_per_pair);
    std::printf("coarse grid:\n");
    for (const auto &cell : report.coarse) {
        std::printf("  c1=%-8g c2=%-8g solve_rate=%.3f mean_steps=%.1f\n",
                    cell.gains.c1, cell.gains.c2, cell.solve_rate,
                    cell.mean_steps);
    }
    std::printf("refined grid:\n");
    for (const auto &cell : report.refined) {
        std::printf("  c1=%-8g c2=%-8g solve_rate=%.3f mean_steps=%.1f\n",
                    cell.gains.c1, cell.gains.c2, cell.solve_rate,
                    cell.mean_steps);
    }
    std::printf("selected: c1=%g c2=%g\n", report.best.c1, report.best.c2);
    save_gains(out_path, report.best, report, seed, episodes_per_pair);
    std::printf("written to %s\n", out_path.c_str());
    return 0;
}

int cmd_gradcheck(int cases, std::uint64_t seed) {
    const auto report = qsac::harness::gradient_triangle(cases, seed);
    std::printf("%d circuits, up to %d qubits x %d layers, fd step %g\n",
                report.cases, report.max_qubits, report.max_layers,
                report.fd_step);
    std::printf("max |shift - adjoint| = %.3e (tolerance 1e-8)\n",
                report.max_shift_vs_adjoint);
    std::printf("max |adjoint - fd|    = %.3e (tolerance 1e-6)\n",
                report.max_adjoint_vs_fd);
    std::printf("max |shift - fd|      = %.3e (tolerance 1e-6)\n",
                report.max_shift_vs_fd);
    const bool ok = report.max_shift_vs_adjoint <= 1e-8 &&
                    report.max_adjoint_vs_fd <= 1e-6 &&
                    report.max_shift_vs_fd <= 1e-6;
    std::printf("%s\n", ok ? "OK" : "MISMATCH");
    return ok ? 0 : 1;
}

int cmd_eval(const std::string &checkpoint, int episodes,
             std::uint64_t seed) {
    const qsac::harness::EvalReport report =
        qsac::harness::evaluate_checkpoint(checkpoint, episodes, seed);
    std::printf("episodes     %d\n", report.episodes);
    std::printf("mean return  %.3f\n", report.mean_return);
    std::printf("mean steps   %.1f\n", report.mean_steps);
    std::printf("solve rate   %.3f\n", report.solve_rate);
    return 0;
}

int cmd_curves(const std::vector<std::string> &run_dirs,
               const std::string &out_path,
               const std::string &benchmark_stats_path) {
    std::vector<qsac::harness::CurveSeries> series;
    series.reserve(run_dirs.size());
    for (const std::string &dir : run_dirs) {
        series.push_back(qsac::harness::load_run_curve(dir));
    }
    BenchmarkStats reference;
    const BenchmarkStats *ref_ptr = nullptr;
    if (!benchmark_stats_path.empty()) {
        reference = qsac::harness::load_benchmark_stats(benchmark_stats_path);
        ref_ptr = &reference;
    }
    std::vector<std::string> warnings;
    const std::string csv =
        qsac::harness::export_curves(series, ref_ptr, &warnings);
    for (const std::string &w : warnings) {
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    }
    qsac::io::write_text_file(out_path, csv);
    std::printf("wrote %s (%zu series%s)\n", out_path.c_str(), series.size(),
                ref_ptr != nullptr ? " + benchmark reference" : "");
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"hybrid quantum-classical SAC for a two-link arm"};
    app.require_subcommand(1);

    // train
    std::string train_config, train_out;
    int train_seeds = 0;
    int train_episodes = 0;
    bool train_quiet = false;
    auto *train = app.add_subcommand("train", "multi-seed SAC training run");
    train->add_option("--config", train_config, "preset file")->required();
    train->add_option("--seeds", train_seeds,
                      "override the preset's seed count");
    train->add_option("--episodes", train_episodes,
                      "override the preset's episode budget");
    train->add_option("--out", train_out, "output directory")->required();
    train->add_flag("--quiet", train_quiet, "suppress progress lines");

    // benchmark
    int bench_episodes = 1000;
    std::uint64_t bench_seed = 0;
    std::string bench_out, bench_gains = "configs/benchmark_gains.txt";
    auto *benchmark =
        app.add_subcommand("benchmark", "deterministic-solver episodes");
    benchmark->add_option("--episodes", bench_episodes, "episode count");
    benchmark->add_option("--seed", bench_seed, "target-sampling seed");
    benchmark->add_option("--out", bench_out, "output directory")->required();
    benchmark->add_option("--gains", bench_gains, "calibrated gains file");

    // calibrate
    std::string cal_out;
    std::uint64_t cal_seed = 0;
    int cal_episodes = 50;
    auto *calibrate =
        app.add_subcommand("calibrate", "grid-search the solver gains");
    calibrate->add_option("--out", cal_out, "gains file to write")
        ->required();
    calibrate->add_option("--seed", cal_seed, "grid-evaluation seed");
    calibrate->add_option("--episodes-per-pair", cal_episodes,
                          "episodes per grid cell");

    // gradcheck
    int grad_cases = 50;
    std::uint64_t grad_seed = 2029;
    auto *gradcheck =
        app.add_subcommand("gradcheck", "cross-check circuit gradients");
    gradcheck->add_option("--cases", grad_cases, "number of random circuits");
    gradcheck->add_option("--seed", grad_seed, "circuit-sampling seed");

    // eval
    std::string eval_checkpoint;
    int eval_episodes = 100;
    std::uint64_t eval_seed = 1;
    auto *eval =
        app.add_subcommand("eval", "greedy rollout of a saved checkpoint");
    eval->add_option("--checkpoint", eval_checkpoint, "checkpoint file")
        ->required();
    eval->add_option("--episodes", eval_episodes, "episode count");
    eval->add_option("--seed", eval_seed, "environment seed");

    // curves
    std::vector<std::string> curves_runs;
    std::string curves_out, curves_benchmark;
    auto *curves =
        app.add_subcommand("curves", "merge run curves into one CSV");
    curves->add_option("--runs", curves_runs, "training run directories")
        ->required()
        ->expected(-1);
    curves->add_option("--out", curves_out, "output CSV path")->required();
    curves->add_option("--benchmark", curves_benchmark,
                       "benchmark stats file for the reference series");

    CLI11_PARSE(app, argc, argv);

    try {
        if (train->parsed()) {
            return cmd_train(train_config, train_seeds, train_episodes,
                             train_out, train_quiet);
        }
        if (benchmark->parsed()) {
            return cmd_benchmark(bench_episodes, bench_seed, bench_out,
                                 bench_gains);
        }
        if (calibrate->parsed()) {
            return cmd_calibrate(cal_out, cal_seed, cal_episodes);
        }
        if (gradcheck->parsed()) {
            return cmd_gradcheck(grad_cases, grad_seed);
        }
        if (eval->parsed()) {
            return cmd_eval(eval_checkpoint, eval_episodes, eval_seed);
        }
        if (curves->parsed()) {
            return cmd_curves(curves_runs, curves_out, curves_benchmark);
        }
    } catch (const std::exception &err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return 1;
}
