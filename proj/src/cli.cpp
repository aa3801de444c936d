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

#include "projlift/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "projlift/testkit.hpp"

namespace projlift::cli {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotQuasiUnitary:
        case ErrorCode::NotACollineation:
        case ErrorCode::ImageNotOrthonormal:
        case ErrorCode::CoefficientMagnitudeViolation:
            return kHypothesisViolated;
        case ErrorCode::AutomorphismUndetermined:
        case ErrorCode::CompatibilityFailure:
        case ErrorCode::DegenerateJoin:
            return kNumericIndeterminacy;
        case ErrorCode::ZeroVector:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::DimensionTooSmall:
        case ErrorCode::TooFewRays:
        case ErrorCode::WrongFrameSize:
        case ErrorCode::InvalidMap:
        case ErrorCode::ProbeNotTabulated:
        case ErrorCode::SigmaMismatch:
        case ErrorCode::KindMismatch:
        case ErrorCode::ParseError:
            return kInputError;
    }
    return kInputError;
}

// ---------------------------------------------------------------------------
// Writing

namespace {

std::string format_double(double x) {
    if (std::isnan(x)) return "\"nan\"";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool is_inline(const Json& j) {
    if (!j.is_array()) return true;
    for (const auto& e : j) {
        if (e.is_object()) return false;
        if (e.is_array()) {
            for (const auto& inner : e) {
                if (inner.is_array() || inner.is_object()) return false;
            }
        }
    }
    return true;
}

void write_json(std::string& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(key).dump() + ": ";
                write_json(out, value, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (is_inline(j)) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    write_json(out, j[i], depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                write_json(out, j[i], depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string to_text(const Json& j) {
    std::string out;
    write_json(out, j, 0);
    return out + "\n";
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const StateVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v[i]));
    return out;
}

Json matrix_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
    return rows;
}

}  // namespace

std::string serialize_ray_map(const MatrixInduced& map, Field field) {
    Json j;
    j["kind"] = "matrix";
    j["field"] = std::string(field_name(field));
    j["conjugate"] = map.conjugate_first;
    j["matrix"] = matrix_json(map.matrix);
    return to_text(j);
}

std::string serialize_ray_map(const Tabulated& map, Field field) {
    Json j;
    j["kind"] = "tabulated";
    j["field"] = std::string(field_name(field));
    j["dim"] = map.dim;
    Json pairs = Json::array();
    for (const auto& [in, out] : map.pairs) {
        Json p;
        p["in"] = vector_json(in.representative());
        p["out"] = vector_json(out.representative());
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    return to_text(j);
}

std::string serialize_report(const Report& r) {
    Json j;
    j["command"] = r.command;
    if (r.mode) j["mode"] = *r.mode;
    j["verdict"] = r.verdict;
    if (r.kind) j["kind"] = *r.kind;
    if (r.sigma) j["sigma"] = *r.sigma;
    if (r.error) j["error"] = *r.error;
    if (r.message) j["message"] = *r.message;
    j["worst_residual"] = r.worst_residual;
    if (r.witness) {
        Json w;
        Json inputs = Json::array();
        for (const auto& v : r.witness->inputs) inputs.push_back(vector_json(v));
        w["inputs"] = std::move(inputs);
        w["expected"] = r.witness->expected;
        w["observed"] = r.witness->observed;
        j["witness"] = std::move(w);
    }
    j["seed"] = r.seed;
    j["tol"] = r.tol;
    j["trials"] = r.trials;
    if (!r.checks.empty()) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json cj;
            cj["name"] = c.name;
            cj["verdict"] = c.verdict;
            cj["worst_residual"] = c.worst_residual;
            cj["trials"] = c.trials;
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
    }
    if (r.matrix) j["matrix"] = matrix_json(*r.matrix);
    return to_text(j);
}

// ---------------------------------------------------------------------------
// Reading

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ParseError, "field \"" + field + "\" " + what);
}

Json parse_document(std::string_view text) {
    try {
        Json j = Json::parse(text.begin(), text.end());
        if (!j.is_object()) throw Error(ErrorCode::ParseError, "document must be a JSON object");
        return j;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("document is not valid JSON: ") + e.what());
    }
}

const Json& require(const Json& obj, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end()) parse_fail(key, "is missing");
    return *it;
}

double finite_number(const Json& j, const std::string& path) {
    if (!j.is_number()) parse_fail(path, "must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) parse_fail(path, "must be finite");
    return x;
}

// Numbers, plus the "inf"/"-inf"/"nan" spellings written for residuals.
double extended_number(const Json& j, const std::string& path) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        parse_fail(path, "must be a number");
    }
    if (!j.is_number()) parse_fail(path, "must be a number");
    return j.get<double>();
}

std::uint64_t unsigned_number(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) parse_fail(path, "must be a non-negative integer");
    return j.get<std::uint64_t>();
}

std::string string_field(const Json& j, const std::string& path) {
    if (!j.is_string()) parse_fail(path, "must be a string");
    return j.get<std::string>();
}

bool is_pair(const Json& j) { return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(); }

Complex complex_value(const Json& j, const std::string& path, Field field) {
    if (!j.is_array() || j.size() != 2) parse_fail(path, "must be a [re, im] pair");
    const Complex z(finite_number(j[0], path + "[0]"), finite_number(j[1], path + "[1]"));
    if (field == Field::Real && z.imag() != 0.0) parse_fail(path, "has a nonzero imaginary part in a real-field map");
    return z;
}

StateVector vector_value(const Json& j, const std::string& path, Field field, Eigen::Index dim = -1) {
    if (!j.is_array()) parse_fail(path, "must be an array of [re, im] pairs");
    if (dim >= 0 && static_cast<Eigen::Index>(j.size()) != dim) {
        parse_fail(path, "has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dim));
    }
    StateVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = complex_value(j[i], path + "[" + std::to_string(i) + "]", field);
    }
    return v;
}

ComplexMatrix matrix_value(const Json& j, const std::string& path, Field field) {
    if (!j.is_array() || j.empty()) parse_fail(path, "must be a non-empty array");
    if (is_pair(j[0])) {
        // Flat row-major list of n*n pairs.
        const auto count = static_cast<Eigen::Index>(j.size());
        const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
        if (n * n != count) parse_fail(path, "is not square: " + std::to_string(count) + " entries");
        ComplexMatrix m(n, n);
        for (Eigen::Index k = 0; k < count; ++k) {
            m(k / n, k % n) = complex_value(j[static_cast<std::size_t>(k)], path + "[" + std::to_string(k) + "]", field);
        }
        return m;
    }
    const auto n = static_cast<Eigen::Index>(j.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array()) parse_fail(row_path, "must be a row of [re, im] pairs");
        if (static_cast<Eigen::Index>(row.size()) != n) {
            parse_fail(path, "is not square: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
        }
        m.row(i) = vector_value(row, row_path, field).transpose();
    }
    return m;
}

Ray ray_value(const Json& j, const std::string& path, Field field, Eigen::Index dim) {
    const StateVector v = vector_value(j, path, field, dim);
    if (!(v.cwiseAbs().maxCoeff() > 1e-300)) parse_fail(path, "must be a nonzero vector");
    return Ray::from_vector(v);
}

}  // namespace

RayMapFile parse_ray_map(std::string_view text) {
    const Json j = parse_document(text);
    Field field = Field::Complex;
    if (const auto it = j.find("field"); it != j.end()) {
        const std::string f = string_field(*it, "field");
        if (f == "real") {
            field = Field::Real;
        } else if (f != "complex") {
            parse_fail("field", "must be \"real\" or \"complex\", got \"" + f + "\"");
        }
    }
    const std::string kind = string_field(require(j, "kind"), "kind");
    if (kind == "matrix") {
        bool conjugate = false;
        if (const auto it = j.find("conjugate"); it != j.end()) {
            if (!it->is_boolean()) parse_fail("conjugate", "must be a boolean");
            conjugate = it->get<bool>();
        }
        ComplexMatrix m = matrix_value(require(j, "matrix"), "matrix", field);
        if (m.rows() < 2) parse_fail("matrix", "must be at least 2x2");
        return {field, RayMap::matrix_induced(std::move(m), conjugate)};
    }
    if (kind == "tabulated") {
        const Json& dim_json = require(j, "dim");
        if (!dim_json.is_number_integer() || dim_json.get<long long>() < 2) {
            parse_fail("dim", "must be an integer >= 2");
        }
        const auto dim = static_cast<Eigen::Index>(dim_json.get<long long>());
        const Json& pairs_json = require(j, "pairs");
        if (!pairs_json.is_array()) parse_fail("pairs", "must be an array");
        std::vector<std::pair<Ray, Ray>> pairs;
        for (std::size_t i = 0; i < pairs_json.size(); ++i) {
            const std::string path = "pairs[" + std::to_string(i) + "]";
            const Json& p = pairs_json[i];
            if (!p.is_object()) parse_fail(path, "must be an object with \"in\" and \"out\"");
            const auto in = p.find("in");
            const auto out = p.find("out");
            if (in == p.end()) parse_fail(path + ".in", "is missing");
            if (out == p.end()) parse_fail(path + ".out", "is missing");
            pairs.emplace_back(ray_value(*in, path + ".in", field, dim), ray_value(*out, path + ".out", field, dim));
        }
        return {field, RayMap::tabulated(dim, std::move(pairs))};
    }
    parse_fail("kind", "must be \"matrix\" or \"tabulated\", got \"" + kind + "\"");
}

Report parse_report(std::string_view text) {
    const Json j = parse_document(text);
    Report r;
    r.command = string_field(require(j, "command"), "command");
    r.verdict = string_field(require(j, "verdict"), "verdict");
    const auto optional_string = [&j](const char* key) -> std::optional<std::string> {
        const auto it = j.find(key);
        if (it == j.end()) return std::nullopt;
        return string_field(*it, key);
    };
    r.mode = optional_string("mode");
    r.kind = optional_string("kind");
    r.sigma = optional_string("sigma");
    r.error = optional_string("error");
    r.message = optional_string("message");
    r.worst_residual = extended_number(require(j, "worst_residual"), "worst_residual");
    if (const auto it = j.find("witness"); it != j.end()) {
        Witness w;
        const Json& inputs = require(*it, "inputs");
        if (!inputs.is_array()) parse_fail("witness.inputs", "must be an array");
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            w.inputs.push_back(vector_value(inputs[i], "witness.inputs[" + std::to_string(i) + "]", Field::Complex));
        }
        w.expected = extended_number(require(*it, "expected"), "witness.expected");
        w.observed = extended_number(require(*it, "observed"), "witness.observed");
        r.witness = std::move(w);
    }
    r.seed = unsigned_number(require(j, "seed"), "seed");
    r.tol = extended_number(require(j, "tol"), "tol");
    r.trials = unsigned_number(require(j, "trials"), "trials");
    if (const auto it = j.find("checks"); it != j.end()) {
        if (!it->is_array()) parse_fail("checks", "must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& c = (*it)[i];
            const std::string path = "checks[" + std::to_string(i) + "]";
            r.checks.push_back({string_field(require(c, "name"), path + ".name"),
                                string_field(require(c, "verdict"), path + ".verdict"),
                                extended_number(require(c, "worst_residual"), path + ".worst_residual"),
                                unsigned_number(require(c, "trials"), path + ".trials")});
        }
    }
    if (const auto it = j.find("matrix"); it != j.end()) r.matrix = matrix_value(*it, "matrix", Field::Complex);
    return r;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

Report base_report(std::string command, const RunOptions& options) {
    Report r;
    r.command = std::move(command);
    r.verdict = "pass";
    r.seed = options.seed.value;
    r.tol = options.tol;
    r.trials = options.trials;
    return r;
}

void add_check(Report& r, std::string name, const VerificationReport& v) {
    r.checks.push_back({std::move(name), v.passed ? "pass" : "fail", v.worst_residual, v.trials});
    r.worst_residual = std::max(r.worst_residual, v.worst_residual);
    if (!v.passed) {
        if (r.verdict == "pass") r.witness = v.witness;
        r.verdict = "fail";
    }
}

CommandResult failure(Report r, const Error& e) {
    r.verdict = "fail";
    r.error = std::string(error_code_name(e.code()));
    r.message = e.what();
    if (e.witness()) r.witness = e.witness();
    return {exit_code_for(e.code()), serialize_report(r), e.what()};
}

// Input errors before any computation produce no report.
CommandResult input_failure(const Error& e) { return {exit_code_for(e.code()), "", e.what()}; }

ComplexMatrix phase_gauged(ComplexMatrix m) {
    const auto column = m.col(0);
    const double top = column.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(column[pivot]) < top * (1.0 - 1e-10)) ++pivot;
    const Complex phase = std::conj(column[pivot]) / std::abs(column[pivot]);
    m *= phase;
    m(pivot, 0) = Complex(m(pivot, 0).real(), 0.0);
    return m;
}

}  // namespace

CommandResult run_check(std::string_view map_text, const RunOptions& options) {
    std::optional<RayMapFile> file;
    try {
        file.emplace(parse_ray_map(map_text));
    } catch (const Error& e) {
        return input_failure(e);
    }
    Report r = base_report("check", options);
    try {
        add_check(r, "quasi_unitary",
                  check_quasi_unitary(file->map, options.trials, options.tol, options.seed, file->field));
        if (file->map.dim() >= 3) {
            add_check(r, "collineation",
                      check_collineation(file->map, options.trials, options.tol, options.seed, file->field));
        }
    } catch (const Error& e) {
        return failure(std::move(r), e);
    }
    const int code = r.verdict == "pass" ? kSuccess : kHypothesisViolated;
    return {code, serialize_report(r), code == kSuccess ? "" : "check failed"};
}

CommandResult run_lift(std::string_view map_text, LiftMode mode, const RunOptions& options) {
    std::optional<RayMapFile> file;
    try {
        file.emplace(parse_ray_map(map_text));
    } catch (const Error& e) {
        return input_failure(e);
    }
    Report r = base_report("lift", options);
    r.mode = mode == LiftMode::Wigner ? "wigner" : "artin";
    try {
        if (mode == LiftMode::Wigner) {
            WignerLift lift = lift_symmetry(file->map, file->field, options.tol, options.trials, options.seed);
            add_check(r, "quasi_unitary", lift.certificate.quasi_unitarity);
            add_check(r, "compatibility", lift.certificate.compatibility);
            r.kind = std::string(kind_name(lift.op.kind()));
            r.sigma = std::string(sigma_name(sigma_of(lift.op.kind())));
            r.matrix = lift.op.matrix();
        } else {
            ArtinLift lift = lift_collineation(file->map, file->field, options.tol, options.trials, options.seed);
            add_check(r, "compatibility", lift.diagnostics.verification);
            r.sigma = std::string(sigma_name(lift.map.sigma()));
            r.matrix = phase_gauged(lift.map.matrix());
        }
    } catch (const Error& e) {
        return failure(std::move(r), e);
    }
    return {kSuccess, serialize_report(r), ""};
}

CommandResult run_classify(std::string_view map_text, double tol) {
    std::optional<RayMapFile> file;
    try {
        file.emplace(parse_ray_map(map_text));
    } catch (const Error& e) {
        return input_failure(e);
    }
    RunOptions options;
    options.tol = tol;
    options.trials = 0;
    options.seed = Seed{0};
    Report r = base_report("classify", options);
    try {
        const SymmetryKind kind = classify(file->map, file->field, tol);
        r.kind = std::string(kind_name(kind));
        r.sigma = std::string(sigma_name(sigma_of(kind)));
    } catch (const Error& e) {
        return failure(std::move(r), e);
    }
    return {kSuccess, serialize_report(r), ""};
}

CommandResult run_gen(Eigen::Index dim, GenKind kind, Seed seed) {
    if (dim < 2) return {kInputError, "", "--dim must be >= 2"};
    MatrixInduced map;
    switch (kind) {
        case GenKind::Unitary:
        case GenKind::Antiunitary:
            map.matrix = testkit::haar_unitary(dim, seed);
            map.conjugate_first = kind == GenKind::Antiunitary;
            break;
        case GenKind::Invertible:
            map.matrix = testkit::random_invertible(dim, seed);
            break;
    }
    return {kSuccess, serialize_ray_map(map, Field::Complex), ""};
}

CommandResult run_verify(std::string_view map_text, std::string_view operator_text, const RunOptions& options) {
    std::optional<RayMapFile> file;
    std::optional<SemiLinearMap> op;
    try {
        file.emplace(parse_ray_map(map_text));
        const Report source = parse_report(operator_text);
        if (!source.matrix) parse_fail("matrix", "is missing from the operator report");
        if (!source.sigma) parse_fail("sigma", "is missing from the operator report");
        Sigma sigma = Sigma::Identity;
        if (*source.sigma == "conjugation") {
            sigma = Sigma::Conjugation;
        } else if (*source.sigma != "identity") {
            parse_fail("sigma", "must be \"identity\" or \"conjugation\"");
        }
        op.emplace(SemiLinearMap::create(*source.matrix, sigma));
        if (op->dim() != file->map.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "operator and ray map dimensions differ");
        }
    } catch (const Error& e) {
        return input_failure(e);
    }
    Report r = base_report("verify", options);
    r.sigma = std::string(sigma_name(op->sigma()));
    try {
        add_check(r, "compatibility",
                  check_compatibility(
                      file->map, [&](const StateVector& x) { return apply_semilinear(*op, x); }, options.trials,
                      options.tol, options.seed, file->field));
    } catch (const Error& e) {
        return failure(std::move(r), e);
    }
    const int code = r.verdict == "pass" ? kSuccess : kHypothesisViolated;
    return {code, serialize_report(r), code == kSuccess ? "" : "operator is not compatible with the ray map"};
}

}  // namespace projlift::cli
