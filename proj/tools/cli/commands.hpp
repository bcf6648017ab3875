// Copyright 2026 The homotonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMOTONIC_TOOLS_CLI_COMMANDS_HPP
#define HOMOTONIC_TOOLS_CLI_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "homotonic/spectral.hpp"

namespace homotonic::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,           ///< holds / certified
    exit_failed = 1,       ///< a condition fails / certificate refuted
    exit_input_error = 2,  ///< unreadable or invalid input, unknown name
    exit_precondition = 3, ///< certify refused: algebra not homotonic
    exit_inconsistent = 4, ///< checkers disagree or a closed form is missed
};

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    double tol = 1e-9;
    bool json = false;
    bool force = false;
};

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

CommandResult cmd_check(const std::string& algebra_path, const RunConfig& config);
CommandResult cmd_certify(const std::string& algebra_path, const std::string& weight_path,
                          const RunConfig& config);

struct ThresholdFamily {
    std::string name; ///< matrix-uniform | convolution | dilation | custom
    std::size_t n = 3;
    double kappa = 1.0;
    double period = 1.0;
    std::size_t grid = 128;
    std::string algebra_path;
    std::string weight_path;
};

CommandResult cmd_threshold(const ThresholdFamily& family, const RunConfig& config);

inline const std::vector<std::string> demo_names{"jordan-nonassoc", "plane-complex", "radius"};

CommandResult cmd_demo(const std::string& name, std::size_t n, const RunConfig& config);

CommandResult cmd_radius(const std::string& matrix_path, unsigned berger_power,
                         const RadiusOptions& options, const RunConfig& config);

/// Parses argv and dispatches; returns the exit code.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

} // namespace homotonic::cli

#endif // HOMOTONIC_TOOLS_CLI_COMMANDS_HPP
