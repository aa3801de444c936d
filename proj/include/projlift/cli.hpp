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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projlift/wigner_lift.hpp"

namespace projlift::cli {

/// Process exit codes. No command returns anything else.
enum ExitCode : int {
    kSuccess = 0,
    kHypothesisViolated = 1,
    kInputError = 2,
    kNumericIndeterminacy = 3,
};

int exit_code_for(ErrorCode code);

/// A parsed ray-map document.
struct RayMapFile {
    Field field = Field::Complex;
    RayMap map;
};

/// Throws Error(ParseError) naming the offending field, or the map
/// constructor's error (InvalidMap, ZeroVector, ...).
RayMapFile parse_ray_map(std::string_view text);

std::string serialize_ray_map(const MatrixInduced& map, Field field);
std::string serialize_ray_map(const Tabulated& map, Field field);

struct CheckSummary {
    std::string name;
    std::string verdict;
    double worst_residual = 0.0;
    std::uint64_t trials = 0;
    friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct Report {
    std::string command;
    std::string verdict;  // "pass" or "fail"
    std::optional<std::string> kind;
    double worst_residual = 0.0;
    std::optional<Witness> witness;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::uint64_t trials = 0;
    std::optional<ComplexMatrix> matrix;
    std::optional<std::string> sigma;
    std::optional<std::string> mode;
    std::optional<std::string> error;
    std::optional<std::string> message;
    std::vector<CheckSummary> checks;
};

/// JSON with 17 significant digits per number; non-finite residuals are
/// written as the strings "inf", "-inf", "nan".
std::string serialize_report(const Report& report);
Report parse_report(std::string_view text);

struct RunOptions {
    double tol = kCertificateTolerance;
    std::size_t trials = kDefaultTrials;
    Seed seed{1};
};

struct CommandResult {
    int exit_code = kSuccess;
    std::string output;      // report (or generated file) text
    std::string diagnostic;  // human-readable message for stderr
};

CommandResult run_check(std::string_view map_text, const RunOptions& options);

enum class LiftMode { Wigner, Artin };
CommandResult run_lift(std::string_view map_text, LiftMode mode, const RunOptions& options);

CommandResult run_classify(std::string_view map_text, double tol);

enum class GenKind { Unitary, Antiunitary, Invertible };
CommandResult run_gen(Eigen::Index dim, GenKind kind, Seed seed);

CommandResult run_verify(std::string_view map_text, std::string_view operator_text, const RunOptions& options);

}  // namespace projlift::cli
