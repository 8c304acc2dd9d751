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

#include "qsac/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "qsac/errors.hpp"

namespace qsac::stats {

double mean(const std::vector<double> &values) {
    if (values.empty()) {
        throw DimensionError("mean of an empty sample");
    }
    double acc = 0.0;
    for (double v : values) {
        acc += v;
    }
    return acc / static_cast<double>(values.size());
}

double stddev(const std::vector<double> &values, int ddof) {
    if (ddof < 0) {
        throw DimensionError("ddof must be non-negative");
    }
    const std::size_t n = values.size();
    if (n <= static_cast<std::size_t>(ddof)) {
        throw DimensionError("stddev needs more samples than ddof");
    }
    const double m = mean(values);
    double acc = 0.0;
    for (double v : values) {
        const double d = v - m;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(n - ddof));
}

double quantile_sorted(const std::vector<double> &sorted, double p) {
    if (sorted.empty()) {
        throw DimensionError("quantile of an empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DimensionError("quantile fraction outside [0, 1]");
    }
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) {
        return sorted[n - 1];
    }
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

Summary describe(const std::vector<double> &values, int ddof) {
    if (values.empty()) {
        throw DimensionError("describe of an empty sample");
    }
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    Summary s;
    s.count = sorted.size();
    s.mean = mean(sorted);
    // A single sample has no spread under ddof=1; report 0 rather than
    // rejecting the whole summary.
    s.std = sorted.size() > static_cast<std::size_t>(ddof)
                ? stddev(sorted, ddof)
                : 0.0;
    s.min = sorted.front();
    s.q25 = quantile_sorted(sorted, 0.25);
    s.q50 = quantile_sorted(sorted, 0.50);
    s.q75 = quantile_sorted(sorted, 0.75);
    s.max = sorted.back();
    return s;
}

std::vector<double> moving_average(const std::vector<double> &values,
                                   int window) {
    if (window < 1) {
        throw DimensionError("moving average window must be >= 1");
    }
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::size_t span =
            std::min<std::size_t>(i + 1, static_cast<std::size_t>(window));
        // Each window is summed afresh, left to right. A sliding sum would
        // be faster but drifts from an independent recomputation of the
        // same window; bit-stable output matters more than the few extra
        // additions at window 20.
        double acc = 0.0;
        for (std::size_t j = i + 1 - span; j <= i; ++j) {
            acc += values[j];
        }
        out[i] = acc / static_cast<double>(span);
    }
    return out;
}

} // namespace qsac::stats
