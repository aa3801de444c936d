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

// projlift: check, lift, classify, generate and verify ray maps from the shell.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "projlift/cli.hpp"

namespace {

using projlift::cli::CommandResult;
using projlift::cli::kInputError;

bool read_input(const std::string& path, std::string& text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

int emit(const CommandResult& result, const std::string& out_path) {
    if (!result.diagnostic.empty()) std::cerr << "projlift: " << result.diagnostic << "\n";
    if (!result.output.empty()) {
        if (out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "projlift: cannot write " << out_path << "\n";
                return kInputError;
            }
            out << result.output;
        }
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lift collineations and symmetry transformations of rays to semi-linear operators"};
    app.require_subcommand(1);

    projlift::cli::RunOptions options;
    std::uint64_t seed = options.seed.value;
    std::string input;
    std::string operator_path;
    std::string out_path;
    std::string mode = "wigner";
    std::string kind;
    int dim = 0;

    const auto add_common = [&](CLI::App* cmd, bool sampling) {
        cmd->add_option("--tol", options.tol, "tolerance")->check(CLI::PositiveNumber);
        if (sampling) {
            cmd->add_option("--trials", options.trials, "random trials");
            cmd->add_option("--seed", seed, "PRNG seed");
        }
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
    };

    auto* check = app.add_subcommand("check", "test quasi-unitarity and (dim >= 3) the collineation property");
    check->add_option("input", input, "ray map file, or - for stdin")->required();
    add_common(check, true);

    auto* lift = app.add_subcommand("lift", "reconstruct the inducing operator");
    lift->add_option("input", input, "ray map file, or - for stdin")->required();
    lift->add_option("--mode", mode, "wigner or artin")->check(CLI::IsMember({"wigner", "artin"}));
    add_common(lift, true);

    auto* classify = app.add_subcommand("classify", "decide between unitary and anti-unitary");
    classify->add_option("input", input, "ray map file, or - for stdin")->required();
    add_common(classify, false);

    auto* gen = app.add_subcommand("gen", "generate a matrix-induced ray map");
    gen->add_option("--dim", dim, "vector dimension")->required();
    gen->add_option("--kind", kind, "unitary, antiunitary or invertible")
        ->required()
        ->check(CLI::IsMember({"unitary", "antiunitary", "invertible"}));
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--out", out_path, "write the file here instead of stdout");

    auto* verify = app.add_subcommand("verify", "check a lifted operator against a ray map");
    verify->add_option("input", input, "ray map file, or - for stdin")->required();
    verify->add_option("operator", operator_path, "report file holding the operator")->required();
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    options.seed = projlift::Seed{seed};

    if (gen->parsed()) {
        static const std::map<std::string, projlift::cli::GenKind> kinds{
            {"unitary", projlift::cli::GenKind::Unitary},
            {"antiunitary", projlift::cli::GenKind::Antiunitary},
            {"invertible", projlift::cli::GenKind::Invertible}};
        return emit(projlift::cli::run_gen(dim, kinds.at(kind), options.seed), out_path);
    }

    std::string text;
    if (!read_input(input, text)) {
        std::cerr << "projlift: cannot read " << input << "\n";
        return kInputError;
    }
    if (check->parsed()) return emit(projlift::cli::run_check(text, options), out_path);
    if (lift->parsed()) {
        const auto m = mode == "artin" ? projlift::cli::LiftMode::Artin : projlift::cli::LiftMode::Wigner;
        return emit(projlift::cli::run_lift(text, m, options), out_path);
    }
    if (classify->parsed()) return emit(projlift::cli::run_classify(text, options.tol), out_path);

    std::string operator_text;
    if (!read_input(operator_path, operator_text)) {
        std::cerr << "projlift: cannot read " << operator_path << "\n";
        return kInputError;
    }
    return emit(projlift::cli::run_verify(text, operator_text, options), out_path);
}
