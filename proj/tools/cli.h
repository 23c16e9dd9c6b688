// Copyright 2026 The cvcat Authors
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


#ifndef CVCAT_TOOLS_CLI_H
#define CVCAT_TOOLS_CLI_H

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace cvcat::cli {

inline constexpr const char *kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitConvergenceError = 2;
inline constexpr int kExitUsage = 64;

/// Effective settings of one invocation. Every field is both a flag
/// (--name) and a key of the flat JSON accepted by --config.
struct RunConfig {
    double gamma = 0.1;
    double ym = 3.0;
    double db = 0.0;
    std::string out;
    std::string format = "csv";
    std::string gamma_rule = "fixed";
    std::string db_range = "0:20";
    std::size_t n_values = 60;
    std::string ym_range;
    std::string kind;
    std::string convention = "momentum";
    double half_width = 0.0;
    std::size_t n_points = 0;
    std::string x_range;
    std::string p_range;
    std::size_t n_x = 256;
    std::size_t n_p = 256;
    double sigma_level = 2.0;
    std::size_t n_boundary = 256;
    bool wln = false;
    bool optimize_cat = false;
};

/// Runs one command. args excludes the program name. Results go to the
/// --out file, or to `out` when no file is given; diagnostics go to `err`.
/// Returns 0, 1 (domain error or failed verify), 2 (convergence error)
/// or 64 (usage error).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cvcat::cli

#endif
