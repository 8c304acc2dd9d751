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

#include <stdexcept>
#include <string>

namespace qsac {

/**
 * @brief Base class for all qsac errors.
 */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent configuration (bad key, bad value, bad shape).
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Qubit/parameter index or dimension out of range.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// API used against its protocol (e.g. stepping a finished episode).
class ProtocolError : public Error {
  public:
    using Error::Error;
};

/// Non-finite values encountered during optimization.
class DivergenceError : public Error {
  public:
    using Error::Error;
};

/// Gain calibration could not reach a full solve rate.
class CalibrationError : public Error {
  public:
    using Error::Error;
};

/// Text artifact (config, checkpoint, CSV) failed to parse.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace qsac
