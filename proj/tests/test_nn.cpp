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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "qsac/adam.hpp"
#include "qsac/dense.hpp"
#include "qsac/rng.hpp"

using qsac::RandomStream;
using qsac::nn::Activation;
using qsac::nn::Adam;
using qsac::nn::DenseLayer;

namespace {

DenseLayer make_layer(int in, int out, Activation act, std::size_t offset) {
    DenseLayer l;
    l.in_dim = in;
    l.out_dim = out;
    l.act = act;
    l.offset = offset;
    return l;
}

} // namespace

TEST_CASE("dense forward matches the affine definition") {
    const DenseLayer l = make_layer(3, 2, Activation::linear, 1);
    // one pad slot, then W = [[1,2,3],[-1,0,4]], b = [0.5, -2]
    const std::vector<double> base{9.0, 1.0, 2.0, 3.0, -1.0, 0.0, 4.0,
                                   0.5, -2.0};
    const std::vector<double> x{1.0, -1.0, 2.0};
    std::vector<double> y(2);
    l.forward(base.data(), x.data(), y.data());
    CHECK(y[0] == doctest::Approx(1.0 - 2.0 + 6.0 + 0.5));
    CHECK(y[1] == doctest::Approx(-1.0 + 8.0 - 2.0));
}

TEST_CASE("relu clips negatives and blocks their gradient") {
    const DenseLayer l = make_layer(1, 2, Activation::relu, 0);
    // W = [[1],[−1]], b = 0: inputs > 0 activate unit 0 only.
    const std::vector<double> base{1.0, -1.0, 0.0, 0.0};
    const std::vector<double> x{2.0};
    std::vector<double> y(2);
    l.forward(base.data(), x.data(), y.data());
    CHECK(y[0] == doctest::Approx(2.0));
    CHECK(y[1] == doctest::Approx(0.0));

    std::vector<double> g(base.size(), 0.0);
    std::vector<double> dy{1.0, 1.0};
    std::vector<double> dx(1, 0.0);
    std::vector<double> scratch;
    l.backward(base.data(), g.data(), x.data(), y.data(), dy.data(), dx.data(),
               scratch);
    CHECK(g[0] == doctest::Approx(2.0)); // dW through the live unit
    CHECK(g[1] == doctest::Approx(0.0)); // dead unit stays silent
    CHECK(g[2] == doctest::Approx(1.0)); // live bias
    CHECK(g[3] == doctest::Approx(0.0));
    CHECK(dx[0] == doctest::Approx(1.0)); // only row 0 reaches the input
}

TEST_CASE("dense backward matches central differences") {
    RandomStream rng(301);
    for (const Activation act : {Activation::linear, Activation::relu}) {
        const DenseLayer l = make_layer(4, 3, act, 2);
        std::vector<double> base(2 + l.param_count());
        for (double &v : base) {
            v = rng.uniform(-1.0, 1.0);
        }
        std::vector<double> x(4), dy(3);
        for (double &v : x) {
            v = rng.uniform(-1.0, 1.0);
        }
        for (double &v : dy) {
            v = rng.uniform(-1.0, 1.0);
        }

        std::vector<double> y(3);
        l.forward(base.data(), x.data(), y.data());
        std::vector<double> g(base.size(), 0.0), dx(4, 0.0), scratch;
        l.backward(base.data(), g.data(), x.data(), y.data(), dy.data(),
                   dx.data(), scratch);

        const double h = 1e-6;
        auto loss = [&](const double *b, const double *xx) {
            std::vector<double> out(3);
            l.forward(b, xx, out.data());
            double acc = 0.0;
            for (int o = 0; o < 3; ++o) {
                acc += dy[static_cast<std::size_t>(o)] *
                       out[static_cast<std::size_t>(o)];
            }
            return acc;
        };
        for (std::size_t p = 2; p < base.size(); ++p) {
            auto up = base, down = base;
            up[p] += h;
            down[p] -= h;
            const double fd =
                (loss(up.data(), x.data()) - loss(down.data(), x.data())) /
                (2.0 * h);
            CHECK(g[p] == doctest::Approx(fd).epsilon(1e-6));
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto up = x, down = x;
            up[i] += h;
            down[i] -= h;
            const double fd =
                (loss(base.data(), up.data()) - loss(base.data(), down.data())) /
                (2.0 * h);
            CHECK(dx[i] == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("backward with null gbase still produces input gradients") {
    RandomStream rng(302);
    const DenseLayer l = make_layer(3, 3, Activation::linear, 0);
    std::vector<double> base(l.param_count());
    for (double &v : base) {
        v = rng.uniform(-1.0, 1.0);
    }
    const std::vector<double> x{0.4, -0.2, 1.0};
    std::vector<double> y(3);
    l.forward(base.data(), x.data(), y.data());
    const std::vector<double> dy{1.0, -1.0, 0.5};
    std::vector<double> dx_a(3, 0.0), dx_b(3, 0.0), scratch;
    std::vector<double> g(base.size(), 0.0);
    l.backward(base.data(), g.data(), x.data(), y.data(), dy.data(),
               dx_a.data(), scratch);
    l.backward(base.data(), nullptr, x.data(), y.data(), dy.data(),
               dx_b.data(), scratch);
    for (int i = 0; i < 3; ++i) {
        CHECK(dx_b[static_cast<std::size_t>(i)] ==
              doctest::Approx(dx_a[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("backward accumulates instead of overwriting") {
    const DenseLayer l = make_layer(2, 1, Activation::linear, 0);
    const std::vector<double> base{1.0, 2.0, 0.0};
    const std::vector<double> x{1.0, 1.0};
    std::vector<double> y(1);
    l.forward(base.data(), x.data(), y.data());
    const std::vector<double> dy{1.0};
    std::vector<double> g(3, 0.0), scratch;
    l.backward(base.data(), g.data(), x.data(), y.data(), dy.data(), nullptr,
               scratch);
    l.backward(base.data(), g.data(), x.data(), y.data(), dy.data(), nullptr,
               scratch);
    CHECK(g[0] == doctest::Approx(2.0));
    CHECK(g[2] == doctest::Approx(2.0));
}

TEST_CASE("init draws stay inside +-1/sqrt(in_dim) and fill the range") {
    RandomStream rng(303);
    const DenseLayer l = make_layer(16, 32, Activation::relu, 0);
    std::vector<double> base(l.param_count(), 7.0);
    l.init(base.data(), rng);
    const double bound = 1.0 / 4.0;
    double lo = 1e9, hi = -1e9;
    for (const double v : base) {
        CHECK(v >= -bound);
        CHECK(v <= bound);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // 544 draws should come within 5% of both ends.
    CHECK(lo < -0.95 * bound);
    CHECK(hi > 0.95 * bound);
}

TEST_CASE("adam replays the textbook update sequence") {
    const std::size_t n = 3;
    Adam opt(n, 0.01);
    std::vector<double> p{1.0, -2.0, 0.5};
    std::vector<double> m(n, 0.0), v(n, 0.0), ref = p;
    const double b1 = 0.9, b2 = 0.999, eps = 1e-8, lr = 0.01;
    RandomStream rng(304);
    for (int t = 1; t <= 7; ++t) {
        std::vector<double> g(n);
        for (double &x : g) {
            x = rng.uniform(-2.0, 2.0);
        }
        opt.step(p.data(), g.data());
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = b1 * m[i] + (1.0 - b1) * g[i];
            v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
            const double mhat = m[i] / (1.0 - std::pow(b1, t));
            const double vhat = v[i] / (1.0 - std::pow(b2, t));
            ref[i] -= lr * mhat / (std::sqrt(vhat) + eps);
            CHECK(p[i] == doctest::Approx(ref[i]).epsilon(1e-12));
        }
    }
    CHECK(opt.steps_taken() == 7);
}

TEST_CASE("first adam step moves by roughly lr regardless of scale") {
    for (const double scale : {1e-6, 1.0, 1e6}) {
        Adam opt(1, 0.25);
        std::vector<double> p{0.0};
        const std::vector<double> g{scale};
        opt.step(p.data(), g.data());
        // mhat = g, vhat = g^2 at t=1, so the step is -lr * g/(|g| + eps).
        CHECK(p[0] ==
              doctest::Approx(-0.25 * scale / (scale + 1e-8)).epsilon(1e-10));
    }
}

TEST_CASE("adam with zero gradients leaves parameters fixed") {
    Adam opt(4, 0.1);
    std::vector<double> p{1.0, 2.0, 3.0, 4.0};
    const std::vector<double> g(4, 0.0);
    const std::vector<double> before = p;
    for (int t = 0; t < 3; ++t) {
        opt.step(p.data(), g.data());
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i] == doctest::Approx(before[i]));
    }
}
