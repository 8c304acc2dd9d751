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

#ifndef QSAC_CONVERGENCE_HPP_
#define QSAC_CONVERGENCE_HPP_

#include <string>
#include <vector>

#include "qsac/sac.hpp"

namespace qsac::harness {

// A training run counts as converged once a trailing window of episodes
// behaves like the analytic benchmark: the windowed mean return falls
// inside [reference_mean - reference_std, reference_mean] and at most
// max_failure_rate of the window's episodes end unsolved. The check walks
// the run in order and reports the first episode at which both conditions
// hold; runs shorter than the window cannot be evaluated at all.
struct ConvergenceCriteria {
    double reference_mean = 0.0; // benchmark mean return
    double reference_std = 0.0;  // benchmark return std
    int window = 1000;           // trailing episodes inspected
    double max_failure_rate = 0.01;
    int episode_limit = 5000;    // conversion must happen by here

    void validate() const;
};

struct ConvergenceResult {
    bool evaluable = false;   // false when fewer episodes than the window
    bool converged = false;
    int episode = -1;         // 1-based episode count at first convergence
    double window_mean = 0.0; // windowed mean at `episode`, or at the end
    double failure_rate = 0.0;
    std::string detail;       // human-readable outcome
};

ConvergenceResult
convergence_check(const std::vector<sac::EpisodeOutcome> &records,
                  const ConvergenceCriteria &criteria);

} // namespace qsac::harness

#endif // QSAC_CONVERGENCE_HPP_
