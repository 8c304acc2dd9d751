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

#include "qsac/convergence.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdio>

#include "qsac/errors.hpp"

namespace qsac::harness {

void ConvergenceCriteria::validate() const {
    if (window < 1) {
        throw ConfigError("convergence window must be >= 1");
    }
    if (!(reference_std >= 0.0)) {
        throw ConfigError("convergence reference std must be >= 0");
    }
    if (!(max_failure_rate >= 0.0 && max_failure_rate <= 1.0)) {
        throw ConfigError("max_failure_rate must lie in [0, 1]");
    }
    if (episode_limit < window) {
        throw ConfigError("episode_limit must be >= window");
    }
}

ConvergenceResult
convergence_check(const std::vector<sac::EpisodeOutcome> &records,
                  const ConvergenceCriteria &criteria) {
    criteria.validate();
    const std::size_t n = records.size();
    const std::size_t w = static_cast<std::size_t>(criteria.window);

    ConvergenceResult result;
    if (n < w) {
        result.detail = "not evaluable: " + std::to_string(n) +
                        " episodes, window needs " + std::to_string(w);
        return result;
    }
    result.evaluable = true;

    const double lo = criteria.reference_mean - criteria.reference_std;
    const double hi = criteria.reference_mean;

    // Prefix sums keep the sweep linear; windows only start once w
    // episodes exist and stop at the episode limit.
    std::vector<double> return_prefix(n + 1, 0.0);
    std::vector<double> failure_prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        return_prefix[i + 1] = return_prefix[i] + records[i].episode_return;
        failure_prefix[i + 1] =
            failure_prefix[i] + (records[i].solved ? 0.0 : 1.0);
    }

    const std::size_t last =
        std::min(n, static_cast<std::size_t>(criteria.episode_limit));
    double tail_mean = 0.0;
    double tail_failures = 0.0;
    for (std::size_t end = w; end <= last; ++end) {
        tail_mean = (return_prefix[end] - return_prefix[end - w]) /
                    static_cast<double>(w);
        tail_failures = (failure_prefix[end] - failure_prefix[end - w]) /
                        static_cast<double>(w);
        if (tail_mean >= lo && tail_mean <= hi &&
            tail_failures <= criteria.max_failure_rate) {
            result.converged = true;
            result.episode = static_cast<int>(end);
            result.window_mean = tail_mean;
            result.failure_rate = tail_failures;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "converged at episode %zu: windowed mean %.3f in "
                          "[%.3f, %.3f], failure rate %.4f",
                          end, tail_mean, lo, hi, tail_failures);
            result.detail = buf;
            return result;
        }
    }

    result.window_mean = tail_mean;
    result.failure_rate = tail_failures;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "not converged by episode %zu: last windowed mean %.3f vs "
                  "[%.3f, %.3f], failure rate %.4f",
                  last, tail_mean, lo, hi, tail_failures);
    result.detail = buf;
    return result;
}

} // namespace qsac::harness
