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
// The experiment layer: multi-seed training runs with on-disk artifacts,
// benchmark summaries, curve aggregation and export, checkpoint
// evaluation, and the self-contained gradient cross-check.
//
// On-disk layout of one training run directory:
//   config.txt            canonical copy of the preset that was run
//   seed_<k>/episodes.csv one row per episode
//   seed_<k>/checkpoint_ep<N>.txt  every episodes_per_checkpoint episodes
//   seed_<k>/checkpoint_final.txt
//   curve.csv             across-seed aggregation (see aggregate_curves)
//   manifest.txt          human-readable summary; holds the real wall-clock
//                         timings and is the one file exempt from the
//                         byte-determinism guarantee
//
// All CSV artifacts are byte-identical across reruns with the same config
// and seed count.

#ifndef QSAC_EXPERIMENT_HPP_
#define QSAC_EXPERIMENT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsac/benchmark_solver.hpp"
#include "qsac/config.hpp"
#include "qsac/sac.hpp"
#include "qsac/stats.hpp"
#include "qsac/textio.hpp"

namespace qsac::harness {

// ---------------------------------------------------------------------
// Gradient cross-check
// ---------------------------------------------------------------------

/// Central-difference gradient of a scalar function.
std::vector<double>
fd_gradient(const std::function<double(const std::vector<double> &)> &f,
            const std::vector<double> &x, double h);

/// Max-abs disagreement between the three circuit gradient routes
/// (parameter shift, adjoint, central differences) over a family of
/// randomly drawn circuits, parameters, inputs, and upstream weights.
/// The two analytic routes also cover the input gradients, which the
/// finite-difference route checks as part of max_adjoint_vs_fd.
struct GradientTriangleReport {
    int cases = 0;
    int max_qubits = 0;
    int max_layers = 0;
    double fd_step = 1e-5;
    double max_shift_vs_adjoint = 0.0;
    double max_adjoint_vs_fd = 0.0;
    double max_shift_vs_fd = 0.0;
};

GradientTriangleReport gradient_triangle(int cases, std::uint64_t seed,
                                         int max_qubits = 6,
                                         int max_layers = 5);

// ---------------------------------------------------------------------
// Training runs
// ---------------------------------------------------------------------

struct RunOptions {
    int n_seeds_override = 0;      // 0 keeps the config value
    int max_episodes_override = 0; // 0 keeps the config value
    bool verbose = false;          // progress lines on stderr
};

struct SeedRunSummary {
    int seed_index = 0;
    std::string run_id;
    int episodes = 0;
    int solved_episodes = 0;
    bool diverged = false;
    std::string divergence_detail;
    double wall_seconds = 0.0;      // real time; manifest only
    double last_window_mean = 0.0;  // mean return of trailing <=100 episodes
};

struct ExperimentResult {
    std::string out_dir;
    std::vector<SeedRunSummary> seeds;
    std::vector<io::CurvePoint> curve;
};

/// Trains cfg.n_seeds independent agents (seeds 0..n-1), writing the run
/// directory described in the file banner. A DivergenceError in one seed
/// is recorded in its summary and the manifest; the remaining seeds still
/// run. Every other exception propagates.
ExperimentResult run_experiment(const ExperimentConfig &cfg,
                                const std::string &out_dir,
                                const RunOptions &opts = {});

/// Window-`window` trailing moving average of each seed's returns, then
/// the across-seed mean and population std per episode. Seeds of unequal
/// length (divergence) are truncated to the shortest non-empty one.
std::vector<io::CurvePoint>
aggregate_curves(const std::vector<std::vector<double>> &per_seed_returns,
                 int window);

/// Writes an evaluation checkpoint: actor/critic/target parameter vectors
/// plus enough metadata (architectures, env settings) to rebuild the
/// policy without the original config file.
void save_agent_checkpoint(const std::string &path,
                           const ExperimentConfig &cfg, int seed_index,
                           int episode, sac::SacAgent &agent);

// ---------------------------------------------------------------------
// Benchmark summaries
// ---------------------------------------------------------------------

struct BenchmarkStats {
    int episodes = 0;
    double solve_rate = 0.0;
    stats::Summary steps;
    stats::Summary episode_return;
    double max_fk_residual = 0.0;
};

BenchmarkStats
summarize_benchmark(const std::vector<bench::BenchmarkEpisode> &episodes);

/// Table-style text: one count/mean/std/min/25%/50%/75%/max block per
/// measured quantity, plus the solve rate and worst FK residual.
std::string benchmark_stats_text(const BenchmarkStats &s);

void save_benchmark_stats(const std::string &path, const BenchmarkStats &s);
BenchmarkStats load_benchmark_stats(const std::string &path);

// ---------------------------------------------------------------------
// Curve export
// ---------------------------------------------------------------------

struct CurveSeries {
    std::string name;
    std::vector<io::CurvePoint> points;
};

/// Reads a training run directory (config.txt + curve.csv) back into a
/// named series.
CurveSeries load_run_curve(const std::string &run_dir);

/// Long-format overlay CSV (config_name,episode,mean_return,std_return).
/// Series of different lengths are truncated to the common range, with a
/// note appended to `warnings` per truncated series. When `reference` is
/// non-null its mean return is added as a constant series named
/// "benchmark". Throws ConfigError when `series` is empty.
std::string export_curves(const std::vector<CurveSeries> &series,
                          const BenchmarkStats *reference,
                          std::vector<std::string> *warnings);

// ---------------------------------------------------------------------
// Checkpoint evaluation
// ---------------------------------------------------------------------

struct EvalReport {
    int episodes = 0;
    double mean_return = 0.0;
    double mean_steps = 0.0;
    double solve_rate = 0.0;
};

/// Replays the greedy policy of a saved checkpoint against a fresh
/// environment built from the checkpoint's own env metadata.
EvalReport evaluate_checkpoint(const std::string &checkpoint_path,
                               int episodes, std::uint64_t seed);

} // namespace qsac::harness

#endif // QSAC_EXPERIMENT_HPP_
