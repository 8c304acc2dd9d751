// Copyright 2026 The qsac authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsac/adam.hpp"

#include <cmath>

#include "qsac/errors.hpp"
#include "qsac/kernels.hpp"

namespace qsac::nn {

Adam::Adam(std::size_t n, double lr, double beta1, double beta2, double eps)
    : n_(n), lr_(lr), b1_(beta1), b2_(beta2), eps_(eps), m_(n, 0.0),
      v_(n, 0.0) {
    if (lr <= 0.0 || beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 ||
        beta2 >= 1.0 || eps <= 0.0) {
        throw ConfigError("invalid Adam hyperparameters");
    }
}

void Adam::step(double *params, const double *grads) {
    ++t_;
    const double t = static_cast<double>(t_);
    const double b1_corr = 1.0 / (1.0 - std::pow(b1_, t));
    const double b2_corr = 1.0 / (1.0 - std::pow(b2_, t));
    kernels::active().adam_step(params, grads, m_.data(), v_.data(), n_, lr_,
                                b1_, b2_, eps_, b1_corr, b2_corr);
}

} // namespace qsac::nn
