// Copyright 2026 The projlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace projlift {

enum class ErrorCode {
    ZeroVector,
    DimensionMismatch,
    DimensionTooSmall,
    DegenerateJoin,
    TooFewRays,
    WrongFrameSize,
    InvalidMap,
    ProbeNotTabulated,
    NotACollineation,
    NotQuasiUnitary,
    ImageNotOrthonormal,
    CoefficientMagnitudeViolation,
    AutomorphismUndetermined,
    CompatibilityFailure,
    SigmaMismatch,
    KindMismatch,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Concrete counterexample attached to a failed check: the offending inputs,
/// the value the hypothesis predicts and the value actually observed.
struct Witness {
    std::vector<Eigen::VectorXcd> inputs;
    double expected = 0.0;
    double observed = 0.0;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<Witness> witness = std::nullopt)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          witness_(std::move(witness)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::optional<Witness>& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::optional<Witness> witness_;
};

/// Raised when a tabulated map cannot answer some probes. Lists every missing one.
class ProbeNotTabulatedError : public Error {
public:
    ProbeNotTabulatedError(const std::string& message, std::vector<std::string> missing)
        : Error(ErrorCode::ProbeNotTabulated, message), missing_(std::move(missing)) {}

    const std::vector<std::string>& missing() const noexcept { return missing_; }

private:
    std::vector<std::string> missing_;
};

}  // namespace projlift
