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

#include <cstddef>

namespace qsac::kernels {

/// Pauli selector for pauli_inner.
enum class Pauli { X = 0, Y = 1, Z = 2 };

/**
 * @brief Table of data-parallel inner-loop kernels.
 *
 * Statevector kernels operate on split real/imag amplitude arrays of length
 * `len` = 2^n (bit q of an amplitude index is the state of qubit q). Dense
 * kernels operate on row-major weight matrices. Each entry has a scalar
 * reference implementation and, on x86-64, an AVX2 variant selected at
 * runtime; the two are equivalence-tested against each other.
 *
 * Within one kernel the floating-point evaluation order is fixed, so results
 * are reproducible run to run on the same machine.
 */
struct KernelTable {
    // Applies the 2x2 unitary [[a, b], [c, d]] (complex entries, split into
    // re/im scalars) to every amplitude pair (i0, i1 = i0 | 1<<target).
    void (*apply2x2)(double *re, double *im, std::size_t len, int target,
                     double ar, double ai, double br, double bi, double cr,
                     double ci, double dr, double di);

    // Applies diag(e0, e1) to the target qubit.
    void (*apply_diag2)(double *re, double *im, std::size_t len, int target,
                        double e0r, double e0i, double e1r, double e1i);

    // Swaps |c=1,t=0> and |c=1,t=1> amplitude pairs.
    void (*apply_cnot)(double *re, double *im, std::size_t len, int control,
                       int target);

    // <Z_target> = sum_k sign_k * |amp_k|^2, sign_k = +1 when bit target of k
    // is 0, else -1.
    double (*expectation_z)(const double *re, const double *im,
                            std::size_t len, int target);

    // sum_k |amp_k|^2.
    double (*sum_sq)(const double *re, const double *im, std::size_t len);

    // <l| P_target |k> for P in {X, Y, Z}; result written to (*out_re,
    // *out_im).
    void (*pauli_inner)(const double *lre, const double *lim,
                        const double *kre, const double *kim, std::size_t len,
                        int target, Pauli p, double *out_re, double *out_im);

    // y_i = b_i + sum_j w[i*in_dim + j] * x_j. b may be null (treated as 0).
    void (*matvec)(const double *w, const double *b, const double *x,
                   double *y, std::size_t out_dim, std::size_t in_dim);

    // xg_j += sum_i w[i*in_dim + j] * u_i (accumulates).
    void (*matvec_t)(const double *w, const double *u, double *xg,
                     std::size_t out_dim, std::size_t in_dim);

    // dw[i*in_dim + j] += u_i * x_j.
    void (*rank1_acc)(double *dw, const double *u, const double *x,
                      std::size_t out_dim, std::size_t in_dim);

    // In-place Adam step with precomputed bias corrections
    // b1_corr = 1/(1 - beta1^t), b2_corr = 1/(1 - beta2^t).
    void (*adam_step)(double *p, const double *g, double *m, double *v,
                      std::size_t n, double lr, double b1, double b2,
                      double eps, double b1_corr, double b2_corr);

    // t_i = rho * t_i + (1 - rho) * o_i.
    void (*polyak)(double *t, const double *o, std::size_t n, double rho);
};

enum class Isa { scalar = 0, avx2 = 1 };

/// True when this build carries AVX2 variants and the CPU supports them.
bool avx2_available();

/// The active kernel table. Selected once per process: AVX2 when available,
/// unless the environment variable QSAC_KERNELS (values "scalar"/"avx2")
/// or force_isa() overrides the choice.
const KernelTable &active();

/// ISA of the table active() returns.
Isa active_isa();

/// Override the active table (tests). Throws ConfigError if unavailable.
void force_isa(Isa isa);

/// Direct access to a specific table (equivalence tests). Throws
/// ConfigError if unavailable.
const KernelTable &table_for(Isa isa);

} // namespace qsac::kernels
