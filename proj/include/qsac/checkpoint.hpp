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

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsac::hybrid {

/**
 * @brief Line-oriented text checkpoint: metadata plus named parameter
 * vectors.
 *
 * Format:
 *   qsac-checkpoint v1
 *   meta <key> <value to end of line>
 *   vector <name> <count>
 *   <count lines, one %.17g value each>
 *   end
 *
 * Doubles are written with 17 significant digits, so save/load round-trips
 * bit-exactly.
 */
struct Checkpoint {
    std::map<std::string, std::string> meta;
    std::vector<std::pair<std::string, std::vector<double>>> vectors;

    const std::vector<double> *find(const std::string &name) const;
    /// Meta value or throws ParseError naming the missing key.
    const std::string &need_meta(const std::string &key) const;
};

void save_checkpoint(const std::string &path, const Checkpoint &cp);

/// Throws ParseError (with a line number) on malformed input.
Checkpoint load_checkpoint(const std::string &path);

} // namespace qsac::hybrid
