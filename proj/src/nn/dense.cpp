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

#include "qsac/dense.hpp"

#include <cmath>

#include "qsac/kernels.hpp"

namespace qsac::nn {

const char *activation_name(Activation act) {
    return act == Activation::relu ? "relu" : "linear";
}

void DenseLayer::init(double *base, RandomStream &rs) const {
    const double bound = 1.0 / std::sqrt(static_cast<double>(in_dim));
    double *p = base + offset;
    const std::size_t n = param_count();
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = rs.uniform(-bound, bound);
    }
}

void DenseLayer::forward(const double *base, const double *x,
                         double *y) const {
    const double *w = base + offset;
    const double *b = w + weight_count();
    kernels::active().matvec(w, b, x, y, static_cast<std::size_t>(out_dim),
                             static_cast<std::size_t>(in_dim));
    if (act == Activation::relu) {
        for (int i = 0; i < out_dim; ++i) {
            if (y[i] < 0.0) {
                y[i] = 0.0;
            }
        }
    }
}

void DenseLayer::backward(const double *base, double *gbase, const double *x,
                          const double *y, const double *dy, double *dx,
                          std::vector<double> &scratch) const {
    const std::size_t od = static_cast<std::size_t>(out_dim);
    const std::size_t id = static_cast<std::size_t>(in_dim);
    scratch.resize(od);
    double *dz = scratch.data();
    if (act == Activation::relu) {
        // relu' from the post-activation value: y > 0 iff z > 0.
        for (std::size_t i = 0; i < od; ++i) {
            dz[i] = y[i] > 0.0 ? dy[i] : 0.0;
        }
    } else {
        for (std::size_t i = 0; i < od; ++i) {
            dz[i] = dy[i];
        }
    }
    const auto &kt = kernels::active();
    if (gbase != nullptr) {
        double *gw = gbase + offset;
        double *gb = gw + weight_count();
        kt.rank1_acc(gw, dz, x, od, id);
        for (std::size_t i = 0; i < od; ++i) {
            gb[i] += dz[i];
        }
    }
    if (dx != nullptr) {
        kt.matvec_t(base + offset, dz, dx, od, id);
    }
}

} // namespace qsac::nn
