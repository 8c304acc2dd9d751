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

#ifndef QSAC_STATS_HPP_
#define QSAC_STATS_HPP_

#include <cstddef>
#include <vector>

namespace qsac::stats {

// Arithmetic mean. Throws DimensionError on an empty input.
double mean(const std::vector<double> &values);

// Standard deviation with the given delta degrees of freedom (0 for the
// population estimator, 1 for the sample estimator). Throws DimensionError
// when values.size() <= ddof.
double stddev(const std::vector<double> &values, int ddof);

// Linear-interpolation quantile of an already sorted vector: with
// h = (n - 1) * p the result is sorted[floor(h)] plus the fractional part
// of h times the gap to the next element. p must lie in [0, 1].
double quantile_sorted(const std::vector<double> &sorted, double p);

// Eight-number summary of a sample: count, mean, std, min, quartiles, max.
struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

// Computes a Summary from an unsorted sample (the input is copied and
// sorted internally). ddof selects the std estimator; the quartiles use
// quantile_sorted. Throws DimensionError on an empty sample or when
// count <= ddof.
Summary describe(const std::vector<double> &values, int ddof = 1);

// Trailing moving average with an expanding head: out[i] is the mean of
// the last min(window, i + 1) entries ending at i. window must be >= 1.
std::vector<double> moving_average(const std::vector<double> &values,
                                   int window);

} // namespace qsac::stats

#endif // QSAC_STATS_HPP_
