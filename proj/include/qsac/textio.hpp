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
// Plain-text writers and readers for run outputs. Every writer here is
// deterministic: identical inputs produce byte-identical files. Doubles
// are rendered with the shortest decimal form that parses back to the
// same bits, so values like 0.99 stay written as "0.99".

#ifndef QSAC_TEXTIO_HPP_
#define QSAC_TEXTIO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace qsac::io {

// Shortest round-trip decimal rendering of a double ("0.99", "-17.5",
// "1e-06" style exponents as produced by std::to_chars).
std::string format_double(double value);

// Parses a double, rejecting trailing garbage. `what` names the field in
// the ParseError message.
double parse_double(const std::string &text, const std::string &what);
long long parse_integer(const std::string &text, const std::string &what);

// Creates the directory (and parents) if absent. Throws Error on failure.
void ensure_directory(const std::string &path);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

// Splits one CSV line at commas. Fields in these files never contain
// commas or quotes, so no quoting rules are needed.
std::vector<std::string> split_csv_line(const std::string &line);

// One episode of one training run. wall_ms holds the simulated episode
// duration (steps * 1000 / fps): a value derived from the dynamics rather
// than the host clock, so reruns of the same seed reproduce the file
// byte for byte. Real wall-clock timing lives in the run manifest.
struct EpisodeRow {
    std::string run_id;
    std::uint64_t seed = 0;
    int episode = 0; // 1-based
    int steps = 0;
    double episode_return = 0.0;
    bool solved = false;
    std::int64_t wall_ms = 0;
};

extern const char kEpisodeCsvHeader[]; // run_id,seed,episode,steps,return,solved,wall_ms

std::string episode_csv(const std::vector<EpisodeRow> &rows);
void write_episode_csv(const std::string &path,
                       const std::vector<EpisodeRow> &rows);
std::vector<EpisodeRow> read_episode_csv(const std::string &path);

// One aggregated point of a learning curve: the across-seed mean and
// population std of the window-20 moving average at this episode.
struct CurvePoint {
    int episode = 0; // 1-based
    double mean_return = 0.0;
    double std_return = 0.0;
};

std::string curve_csv(const std::vector<CurvePoint> &points);
void write_curve_csv(const std::string &path,
                     const std::vector<CurvePoint> &points);
std::vector<CurvePoint> read_curve_csv(const std::string &path);

// Benchmark episodes carry the sampled target instead of a run id.
struct BenchmarkRow {
    int episode = 0; // 1-based
    double target_x = 0.0;
    double target_y = 0.0;
    int steps = 0;
    double episode_return = 0.0;
    bool solved = false;
};

std::string benchmark_csv(const std::vector<BenchmarkRow> &rows);
void write_benchmark_csv(const std::string &path,
                         const std::vector<BenchmarkRow> &rows);

} // namespace qsac::io

#endif // QSAC_TEXTIO_HPP_
