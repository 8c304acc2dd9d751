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

#include <cstdlib>
#include <cstring>

#include "kernels_internal.hpp"
#include "qsac/errors.hpp"

namespace qsac::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(QSAC_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa select_default() {
    if (const char *env = std::getenv("QSAC_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) {
            return Isa::scalar;
        }
        if (std::strcmp(env, "avx2") == 0) {
            if (!cpu_has_avx2()) {
                throw ConfigError(
                    "QSAC_KERNELS=avx2 requested but AVX2 kernels are "
                    "unavailable on this machine/build");
            }
            return Isa::avx2;
        }
        throw ConfigError(std::string("unknown QSAC_KERNELS value: ") + env);
    }
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

// Selected once, then stable for the process unless force_isa overrides.
Isa g_isa = select_default();

} // namespace

bool avx2_available() { return cpu_has_avx2(); }

const KernelTable &table_for(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return kScalarTable;
    case Isa::avx2:
#if defined(QSAC_BUILD_AVX2)
        if (cpu_has_avx2()) {
            return kAvx2Table;
        }
#endif
        throw ConfigError("AVX2 kernels unavailable");
    }
    throw ConfigError("unknown kernel ISA");
}

const KernelTable &active() { return table_for(g_isa); }

Isa active_isa() { return g_isa; }

void force_isa(Isa isa) {
    table_for(isa); // validates availability
    g_isa = isa;
}

} // namespace qsac::kernels
