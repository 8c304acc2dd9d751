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

// AVX2 (+FMA) kernel variants. This translation unit is compiled with
// -mavx2 -mfma and only ever executed behind a runtime CPU check.
//
// Statevector kernels vectorize the amplitude-pair loop for target >= 2,
// where pair bases are 4-consecutive; targets 0 and 1 fall back to the
// scalar reference (a quarter of the gates at most, and the strided loads
// do not pay off at these sizes). Elementwise kernels (adam_step, polyak,
// matvec_t, rank1_acc) use mul+add in the exact order of the scalar
// reference and match it bit for bit; reduction kernels and the FMA-fused
// gate kernel match within a few ulp.

#if defined(QSAC_BUILD_AVX2)

#include <cmath>
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace qsac::kernels::avx2 {

namespace {

// Fixed-order horizontal sum: lane0 + lane1 + lane2 + lane3.
inline double hsum_ordered(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

} // namespace

void apply2x2(double *re, double *im, std::size_t len, int target, double ar,
              double ai, double br, double bi, double cr, double ci, double dr,
              double di) {
    if (target < 2) {
        scalar::apply2x2(re, im, len, target, ar, ai, br, bi, cr, ci, dr, di);
        return;
    }
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t n_pairs = len >> 1;
    const __m256d var = _mm256_set1_pd(ar), vai = _mm256_set1_pd(ai);
    const __m256d vbr = _mm256_set1_pd(br), vbi = _mm256_set1_pd(bi);
    const __m256d vcr = _mm256_set1_pd(cr), vci = _mm256_set1_pd(ci);
    const __m256d vdr = _mm256_set1_pd(dr), vdi = _mm256_set1_pd(di);
    for (std::size_t i = 0; i < n_pairs; i += 4) {
        const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::size_t i1 = i0 | mask;
        const __m256d x0r = _mm256_loadu_pd(re + i0);
        const __m256d x0i = _mm256_loadu_pd(im + i0);
        const __m256d x1r = _mm256_loadu_pd(re + i1);
        const __m256d x1i = _mm256_loadu_pd(im + i1);
        // y0 = a*x0 + b*x1
        __m256d y0r = _mm256_mul_pd(var, x0r);
        y0r = _mm256_fnmadd_pd(vai, x0i, y0r);
        y0r = _mm256_fmadd_pd(vbr, x1r, y0r);
        y0r = _mm256_fnmadd_pd(vbi, x1i, y0r);
        __m256d y0i = _mm256_mul_pd(var, x0i);
        y0i = _mm256_fmadd_pd(vai, x0r, y0i);
        y0i = _mm256_fmadd_pd(vbr, x1i, y0i);
        y0i = _mm256_fmadd_pd(vbi, x1r, y0i);
        // y1 = c*x0 + d*x1
        __m256d y1r = _mm256_mul_pd(vcr, x0r);
        y1r = _mm256_fnmadd_pd(vci, x0i, y1r);
        y1r = _mm256_fmadd_pd(vdr, x1r, y1r);
        y1r = _mm256_fnmadd_pd(vdi, x1i, y1r);
        __m256d y1i = _mm256_mul_pd(vcr, x0i);
        y1i = _mm256_fmadd_pd(vci, x0r, y1i);
        y1i = _mm256_fmadd_pd(vdr, x1i, y1i);
        y1i = _mm256_fmadd_pd(vdi, x1r, y1i);
        _mm256_storeu_pd(re + i0, y0r);
        _mm256_storeu_pd(im + i0, y0i);
        _mm256_storeu_pd(re + i1, y1r);
        _mm256_storeu_pd(im + i1, y1i);
    }
}

void apply_diag2(double *re, double *im, std::size_t len, int target,
                 double e0r, double e0i, double e1r, double e1i) {
    if (target < 2) {
        scalar::apply_diag2(re, im, len, target, e0r, e0i, e1r, e1i);
        return;
    }
    const std::size_t mask = std::size_t{1} << target;
    const __m256d v0r = _mm256_set1_pd(e0r), v0i = _mm256_set1_pd(e0i);
    const __m256d v1r = _mm256_set1_pd(e1r), v1i = _mm256_set1_pd(e1i);
    // Runs of `mask` amplitudes alternate between e0 and e1.
    for (std::size_t base = 0; base < len; base += (mask << 1)) {
        for (std::size_t k = base; k < base + mask; k += 4) {
            const __m256d xr = _mm256_loadu_pd(re + k);
            const __m256d xi = _mm256_loadu_pd(im + k);
            const __m256d yr =
                _mm256_fnmadd_pd(v0i, xi, _mm256_mul_pd(v0r, xr));
            const __m256d yi = _mm256_fmadd_pd(v0i, xr, _mm256_mul_pd(v0r, xi));
            _mm256_storeu_pd(re + k, yr);
            _mm256_storeu_pd(im + k, yi);
        }
        for (std::size_t k = base + mask; k < base + (mask << 1); k += 4) {
            const __m256d xr = _mm256_loadu_pd(re + k);
            const __m256d xi = _mm256_loadu_pd(im + k);
            const __m256d yr =
                _mm256_fnmadd_pd(v1i, xi, _mm256_mul_pd(v1r, xr));
            const __m256d yi = _mm256_fmadd_pd(v1i, xr, _mm256_mul_pd(v1r, xi));
            _mm256_storeu_pd(re + k, yr);
            _mm256_storeu_pd(im + k, yi);
        }
    }
}

double expectation_z(const double *re, const double *im, std::size_t len,
                     int target) {
    if (target < 2) {
        return scalar::expectation_z(re, im, len, target);
    }
    const std::size_t mask = std::size_t{1} << target;
    __m256d vacc = _mm256_setzero_pd();
    const __m256d vneg = _mm256_set1_pd(-1.0);
    for (std::size_t base = 0; base < len; base += (mask << 1)) {
        for (std::size_t k = base; k < base + mask; k += 4) {
            const __m256d xr = _mm256_loadu_pd(re + k);
            const __m256d xi = _mm256_loadu_pd(im + k);
            const __m256d sq =
                _mm256_fmadd_pd(xi, xi, _mm256_mul_pd(xr, xr));
            vacc = _mm256_add_pd(vacc, sq);
        }
        for (std::size_t k = base + mask; k < base + (mask << 1); k += 4) {
            const __m256d xr = _mm256_loadu_pd(re + k);
            const __m256d xi = _mm256_loadu_pd(im + k);
            const __m256d sq =
                _mm256_fmadd_pd(xi, xi, _mm256_mul_pd(xr, xr));
            vacc = _mm256_fmadd_pd(sq, vneg, vacc);
        }
    }
    return hsum_ordered(vacc);
}

double sum_sq(const double *re, const double *im, std::size_t len) {
    __m256d vacc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 3 < len; k += 4) {
        const __m256d xr = _mm256_loadu_pd(re + k);
        const __m256d xi = _mm256_loadu_pd(im + k);
        vacc = _mm256_fmadd_pd(xr, xr, vacc);
        vacc = _mm256_fmadd_pd(xi, xi, vacc);
    }
    double acc = hsum_ordered(vacc);
    for (; k < len; ++k) {
        acc += re[k] * re[k] + im[k] * im[k];
    }
    return acc;
}

void pauli_inner(const double *lre, const double *lim, const double *kre,
                 const double *kim, std::size_t len, int target, Pauli p,
                 double *out_re, double *out_im) {
    if (target < 2) {
        scalar::pauli_inner(lre, lim, kre, kim, len, target, p, out_re,
                            out_im);
        return;
    }
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    __m256d vsr = _mm256_setzero_pd();
    __m256d vsi = _mm256_setzero_pd();
    if (p == Pauli::Z) {
        const __m256d vneg = _mm256_set1_pd(-1.0);
        for (std::size_t base = 0; base < len; base += (mask << 1)) {
            for (std::size_t k = base; k < base + (mask << 1); k += 4) {
                const __m256d alr = _mm256_loadu_pd(lre + k);
                const __m256d ali = _mm256_loadu_pd(lim + k);
                const __m256d akr = _mm256_loadu_pd(kre + k);
                const __m256d aki = _mm256_loadu_pd(kim + k);
                __m256d pr = _mm256_fmadd_pd(ali, aki,
                                             _mm256_mul_pd(alr, akr));
                __m256d pi = _mm256_fnmadd_pd(ali, akr,
                                              _mm256_mul_pd(alr, aki));
                if (k >= base + mask) {
                    pr = _mm256_mul_pd(pr, vneg);
                    pi = _mm256_mul_pd(pi, vneg);
                }
                vsr = _mm256_add_pd(vsr, pr);
                vsi = _mm256_add_pd(vsi, pi);
            }
        }
    } else {
        const std::size_t n_pairs = len >> 1;
        for (std::size_t i = 0; i < n_pairs; i += 4) {
            const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
            const std::size_t i1 = i0 | mask;
            const __m256d l0r = _mm256_loadu_pd(lre + i0);
            const __m256d l0i = _mm256_loadu_pd(lim + i0);
            const __m256d l1r = _mm256_loadu_pd(lre + i1);
            const __m256d l1i = _mm256_loadu_pd(lim + i1);
            const __m256d k0r = _mm256_loadu_pd(kre + i0);
            const __m256d k0i = _mm256_loadu_pd(kim + i0);
            const __m256d k1r = _mm256_loadu_pd(kre + i1);
            const __m256d k1i = _mm256_loadu_pd(kim + i1);
            __m256d a0r, a0i, a1r, a1i;
            if (p == Pauli::X) {
                a0r = k1r;
                a0i = k1i;
                a1r = k0r;
                a1i = k0i;
            } else { // Y: a0 = -i*k1, a1 = i*k0
                a0r = k1i;
                a0i = _mm256_sub_pd(_mm256_setzero_pd(), k1r);
                a1r = _mm256_sub_pd(_mm256_setzero_pd(), k0i);
                a1i = k0r;
            }
            vsr = _mm256_fmadd_pd(l0r, a0r, vsr);
            vsr = _mm256_fmadd_pd(l0i, a0i, vsr);
            vsi = _mm256_fmadd_pd(l0r, a0i, vsi);
            vsi = _mm256_fnmadd_pd(l0i, a0r, vsi);
            vsr = _mm256_fmadd_pd(l1r, a1r, vsr);
            vsr = _mm256_fmadd_pd(l1i, a1i, vsr);
            vsi = _mm256_fmadd_pd(l1r, a1i, vsi);
            vsi = _mm256_fnmadd_pd(l1i, a1r, vsi);
        }
    }
    *out_re = hsum_ordered(vsr);
    *out_im = hsum_ordered(vsi);
}

void matvec(const double *w, const double *b, const double *x, double *y,
            std::size_t out_dim, std::size_t in_dim) {
    for (std::size_t i = 0; i < out_dim; ++i) {
        const double *row = w + i * in_dim;
        __m256d vacc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 3 < in_dim; j += 4) {
            vacc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j),
                                   _mm256_loadu_pd(x + j), vacc);
        }
        double acc = hsum_ordered(vacc);
        for (; j < in_dim; ++j) {
            acc += row[j] * x[j];
        }
        y[i] = (b != nullptr) ? (b[i] + acc) : acc;
    }
}

void matvec_t(const double *w, const double *u, double *xg,
              std::size_t out_dim, std::size_t in_dim) {
    for (std::size_t i = 0; i < out_dim; ++i) {
        const double *row = w + i * in_dim;
        const __m256d vu = _mm256_set1_pd(u[i]);
        std::size_t j = 0;
        for (; j + 3 < in_dim; j += 4) {
            const __m256d acc = _mm256_add_pd(
                _mm256_loadu_pd(xg + j),
                _mm256_mul_pd(_mm256_loadu_pd(row + j), vu));
            _mm256_storeu_pd(xg + j, acc);
        }
        const double ui = u[i];
        for (; j < in_dim; ++j) {
            xg[j] += row[j] * ui;
        }
    }
}

void rank1_acc(double *dw, const double *u, const double *x,
               std::size_t out_dim, std::size_t in_dim) {
    for (std::size_t i = 0; i < out_dim; ++i) {
        double *row = dw + i * in_dim;
        const __m256d vu = _mm256_set1_pd(u[i]);
        std::size_t j = 0;
        for (; j + 3 < in_dim; j += 4) {
            const __m256d acc = _mm256_add_pd(
                _mm256_loadu_pd(row + j),
                _mm256_mul_pd(vu, _mm256_loadu_pd(x + j)));
            _mm256_storeu_pd(row + j, acc);
        }
        const double ui = u[i];
        for (; j < in_dim; ++j) {
            row[j] += ui * x[j];
        }
    }
}

void adam_step(double *p, const double *g, double *m, double *v,
               std::size_t n, double lr, double b1, double b2, double eps,
               double b1_corr, double b2_corr) {
    const __m256d vb1 = _mm256_set1_pd(b1);
    const __m256d vb2 = _mm256_set1_pd(b2);
    const __m256d vcb1 = _mm256_set1_pd(1.0 - b1);
    const __m256d vcb2 = _mm256_set1_pd(1.0 - b2);
    const __m256d vlr = _mm256_set1_pd(lr);
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d vc1 = _mm256_set1_pd(b1_corr);
    const __m256d vc2 = _mm256_set1_pd(b2_corr);
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d gi = _mm256_loadu_pd(g + i);
        const __m256d mi = _mm256_add_pd(
            _mm256_mul_pd(vb1, _mm256_loadu_pd(m + i)),
            _mm256_mul_pd(vcb1, gi));
        const __m256d vi = _mm256_add_pd(
            _mm256_mul_pd(vb2, _mm256_loadu_pd(v + i)),
            _mm256_mul_pd(vcb2, _mm256_mul_pd(gi, gi)));
        _mm256_storeu_pd(m + i, mi);
        _mm256_storeu_pd(v + i, vi);
        const __m256d mhat = _mm256_mul_pd(mi, vc1);
        const __m256d vhat = _mm256_mul_pd(vi, vc2);
        const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), veps);
        const __m256d upd = _mm256_mul_pd(vlr, _mm256_div_pd(mhat, denom));
        _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), upd));
    }
    if (i < n) {
        scalar::adam_step(p + i, g + i, m + i, v + i, n - i, lr, b1, b2, eps,
                          b1_corr, b2_corr);
    }
}

void polyak(double *t, const double *o, std::size_t n, double rho) {
    const __m256d vr = _mm256_set1_pd(rho);
    const __m256d vcr = _mm256_set1_pd(1.0 - rho);
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d acc =
            _mm256_add_pd(_mm256_mul_pd(vr, _mm256_loadu_pd(t + i)),
                          _mm256_mul_pd(vcr, _mm256_loadu_pd(o + i)));
        _mm256_storeu_pd(t + i, acc);
    }
    for (; i < n; ++i) {
        t[i] = rho * t[i] + (1.0 - rho) * o[i];
    }
}

} // namespace qsac::kernels::avx2

namespace qsac::kernels {

// apply_cnot stays scalar: it is a pure amplitude permutation and runs at
// memory speed either way.
const KernelTable kAvx2Table = {
    &avx2::apply2x2,  &avx2::apply_diag2, &scalar::apply_cnot,
    &avx2::expectation_z, &avx2::sum_sq,  &avx2::pauli_inner,
    &avx2::matvec,    &avx2::matvec_t,    &avx2::rank1_acc,
    &avx2::adam_step, &avx2::polyak,
};

} // namespace qsac::kernels

#endif // QSAC_BUILD_AVX2
