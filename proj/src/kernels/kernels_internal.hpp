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
#pragma once

#include "qsac/kernels.hpp"

namespace qsac::kernels {

extern const KernelTable kScalarTable;
#if defined(QSAC_BUILD_AVX2)
extern const KernelTable kAvx2Table;
#endif

namespace scalar {

void apply2x2(double *re, double *im, std::size_t len, int target, double ar,
              double ai, double br, double bi, double cr, double ci, double dr,
              double di);
void apply_diag2(double *re, double *im, std::size_t len, int target,
                 double e0r, double e0i, double e1r, double e1i);
void apply_cnot(double *re, double *im, std::size_t len, int control,
                int target);
double expectation_z(const double *re, const double *im, std::size_t len,
                     int target);
double sum_sq(const double *re, const double *im, std::size_t len);
void pauli_inner(const double *lre, const double *lim, const double *kre,
                 const double *kim, std::size_t len, int target, Pauli p,
                 double *out_re, double *out_im);
void matvec(const double *w, const double *b, const double *x, double *y,
            std::size_t out_dim, std::size_t in_dim);
void matvec_t(const double *w, const double *u, double *xg,
              std::size_t out_dim, std::size_t in_dim);
void rank1_acc(double *dw, const double *u, const double *x,
               std::size_t out_dim, std::size_t in_dim);
void adam_step(double *p, const double *g, double *m, double *v,
               std::size_t n, double lr, double b1, double b2, double eps,
               double b1_corr, double b2_corr);
void polyak(double *t, const double *o, std::size_t n, double rho);

} // namespace scalar

} // namespace qsac::kernels
