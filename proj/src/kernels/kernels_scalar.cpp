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

// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against; keep them simple and with a fixed evaluation order.

#include <cmath>

#include "kernels_internal.hpp"

namespace qsac::kernels::scalar {

// Index arithmetic shared by the pairwise statevector kernels: for pair i in
// [0, len/2), i0 spreads i around the target bit, i1 sets the target bit.
namespace {
inline std::size_t pair_base(std::size_t i, std::size_t mask,
                             std::size_t lo_mask, std::size_t hi_mask) {
    (void)mask;
    return ((i & hi_mask) << 1) | (i & lo_mask);
}
} // namespace

void apply2x2(double *re, double *im, std::size_t len, int target, double ar,
              double ai, double br, double bi, double cr, double ci, double dr,
              double di) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t n_pairs = len >> 1;
    for (std::size_t i = 0; i < n_pairs; ++i) {
        const std::size_t i0 = pair_base(i, mask, lo_mask, hi_mask);
        const std::size_t i1 = i0 | mask;
        const double x0r = re[i0], x0i = im[i0];
        const double x1r = re[i1], x1i = im[i1];
        re[i0] = ((ar * x0r - ai * x0i) + br * x1r) - bi * x1i;
        im[i0] = ((ar * x0i + ai * x0r) + br * x1i) + bi * x1r;
        re[i1] = ((cr * x0r - ci * x0i) + dr * x1r) - di * x1i;
        im[i1] = ((cr * x0i + ci * x0r) + dr * x1i) + di * x1r;
    }
}

void apply_diag2(double *re, double *im, std::size_t len, int target,
                 double e0r, double e0i, double e1r, double e1i) {
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t k = 0; k < len; ++k) {
        const bool hi = (k & mask) != 0;
        const double er = hi ? e1r : e0r;
        const double ei = hi ? e1i : e0i;
        const double xr = re[k], xi = im[k];
        re[k] = er * xr - ei * xi;
        im[k] = er * xi + ei * xr;
    }
}

void apply_cnot(double *re, double *im, std::size_t len, int control,
                int target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t k = 0; k < len; ++k) {
        // Visit each swapped pair once: control bit set, target bit clear.
        if ((k & cmask) != 0 && (k & tmask) == 0) {
            const std::size_t j = k | tmask;
            const double tr = re[k], ti = im[k];
            re[k] = re[j];
            im[k] = im[j];
            re[j] = tr;
            im[j] = ti;
        }
    }
}

double expectation_z(const double *re, const double *im, std::size_t len,
                     int target) {
    const std::size_t mask = std::size_t{1} << target;
    double acc = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        const double p = re[k] * re[k] + im[k] * im[k];
        acc += ((k & mask) != 0) ? -p : p;
    }
    return acc;
}

double sum_sq(const double *re, const double *im, std::size_t len) {
    double acc = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        acc += re[k] * re[k] + im[k] * im[k];
    }
    return acc;
}

void pauli_inner(const double *lre, const double *lim, const double *kre,
                 const double *kim, std::size_t len, int target, Pauli p,
                 double *out_re, double *out_im) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    double sr = 0.0, si = 0.0;
    if (p == Pauli::Z) {
        for (std::size_t k = 0; k < len; ++k) {
            const double sgn = ((k & mask) != 0) ? -1.0 : 1.0;
            // conj(l) * k
            sr += sgn * (lre[k] * kre[k] + lim[k] * kim[k]);
            si += sgn * (lre[k] * kim[k] - lim[k] * kre[k]);
        }
    } else {
        const std::size_t n_pairs = len >> 1;
        for (std::size_t i = 0; i < n_pairs; ++i) {
            const std::size_t i0 = pair_base(i, mask, lo_mask, hi_mask);
            const std::size_t i1 = i0 | mask;
            if (p == Pauli::X) {
                // conj(l0)*k1 + conj(l1)*k0
                sr += lre[i0] * kre[i1] + lim[i0] * kim[i1];
                si += lre[i0] * kim[i1] - lim[i0] * kre[i1];
                sr += lre[i1] * kre[i0] + lim[i1] * kim[i0];
                si += lre[i1] * kim[i0] - lim[i1] * kre[i0];
            } else {
                // Y: conj(l0)*(-i k1) + conj(l1)*(i k0)
                const double a0r = kim[i1], a0i = -kre[i1];
                const double a1r = -kim[i0], a1i = kre[i0];
                sr += lre[i0] * a0r + lim[i0] * a0i;
                si += lre[i0] * a0i - lim[i0] * a0r;
                sr += lre[i1] * a1r + lim[i1] * a1i;
                si += lre[i1] * a1i - lim[i1] * a1r;
            }
        }
    }
    *out_re = sr;
    *out_im = si;
}

void matvec(const double *w, const double *b, const double *x, double *y,
            std::size_t out_dim, std::size_t in_dim) {
    for (std::size_t i = 0; i < out_dim; ++i) {
        const double *row = w + i * in_dim;
        double acc = 0.0;
        for (std::size_t j = 0; j < in_dim; ++j) {
            acc += row[j] * x[j];
        }
        y[i] = (b != nullptr) ? (b[i] + acc) : acc;
    }
}

void matvec_t(const double *w, const double *u, double *xg,
              std::size_t out_dim, std::size_t in_dim) {
    for (std::size_t i = 0; i < out_dim; ++i) {
        const double *row = w + i * in_dim;
        const double ui = u[i];
        for (std::size_t j = 0; j < in_dim; ++j) {
            xg[j] += row[j] * ui;
        }
    }
}

void rank1_acc(double *dw, const double *u, const double *x,
               std::size_t out_dim, std::size_t in_dim) {
    for (std::size_t i = 0; i < out_dim; ++i) {
        double *row = dw + i * in_dim;
        const double ui = u[i];
        for (std::size_t j = 0; j < in_dim; ++j) {
            row[j] += ui * x[j];
        }
    }
}

void adam_step(double *p, const double *g, double *m, double *v,
               std::size_t n, double lr, double b1, double b2, double eps,
               double b1_corr, double b2_corr) {
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = g[i];
        const double mi = b1 * m[i] + (1.0 - b1) * gi;
        const double vi = b2 * v[i] + (1.0 - b2) * (gi * gi);
        m[i] = mi;
        v[i] = vi;
        const double mhat = mi * b1_corr;
        const double vhat = vi * b2_corr;
        p[i] = p[i] - lr * (mhat / (std::sqrt(vhat) + eps));
    }
}

void polyak(double *t, const double *o, std::size_t n, double rho) {
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = rho * t[i] + (1.0 - rho) * o[i];
    }
}

} // namespace qsac::kernels::scalar

namespace qsac::kernels {

const KernelTable kScalarTable = {
    &scalar::apply2x2,  &scalar::apply_diag2, &scalar::apply_cnot,
    &scalar::expectation_z, &scalar::sum_sq,  &scalar::pauli_inner,
    &scalar::matvec,    &scalar::matvec_t,    &scalar::rank1_acc,
    &scalar::adam_step, &scalar::polyak,
};

} // namespace qsac::kernels
