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


#ifndef CVCAT_SWEEP_H
#define CVCAT_SWEEP_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cvcat/states.h"

namespace cvcat {

enum class SweepVariable { kInverseS, kYm };
enum class GammaRule { kFixed, kYmOver30 };

std::string_view to_string(SweepVariable variable);
std::string_view to_string(GammaRule rule);
/// "inverse_s" | "y_m"
SweepVariable sweep_variable_from_string(std::string_view name);
/// "fixed" | "ym/30"
GammaRule gamma_rule_from_string(std::string_view name);

struct SweepOutputs {
    bool infidelity = true;
    bool probability = true;
    bool wln = false;
    bool efficiency = true;
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::kInverseS;
    std::vector<double> values;
    /// Template; the swept field and (under kYmOver30) gamma are overwritten per row.
    GateParams fixed;
    GammaRule gamma_rule = GammaRule::kFixed;
    SweepOutputs outputs;
    CoherentConvention convention = CoherentConvention::kMomentumDisplacement;
    /// Points of the vacuum input grid; its half-width is p_plus + 8.
    std::size_t grid_points = 2048;
    /// Wigner lattice for the wln column.
    std::size_t wigner_points = 256;
    /// Replace the predicted cat parameters by a local fit (off: use them verbatim).
    bool optimize_cat = false;
    /// Worker cap; 0 reads CVCAT_THREADS, then falls back to the core count.
    std::size_t threads = 0;

    /// Throws DomainError unless values is nonempty, finite and strictly increasing.
    void validate() const;
};

/// Missing outputs are NaN; a failed row carries its message in `error`.
struct SweepRow {
    double variable_value = 0.0;
    GateParams params;
    double fidelity = 0.0;
    double infidelity = 0.0;
    double probability_density = 0.0;
    double wln = 0.0;
    double efficiency = 0.0;
    std::string error;
};

/// n points from a to b with constant ratio; endpoints exact.
std::vector<double> log_spaced(double a, double b, std::size_t n);

/// 60 log-spaced values of 1/s on [1, 10].
std::vector<double> default_inverse_s_values();

/// Parameters of the row at `value`.
GateParams row_params(const SweepSpec &spec, double value);

/// Evaluates one row; never throws (errors land in SweepRow::error).
SweepRow evaluate_row(const SweepSpec &spec, double value);

/// One row per value, in input order, computed by up to `threads` workers.
/// The output does not depend on the worker count.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

/// Worker count: spec.threads, else CVCAT_THREADS, else hardware concurrency.
std::size_t sweep_thread_count(const SweepSpec &spec);

/// Header "variable_value,infidelity,probability_density,wln,efficiency,error".
/// NaN fields are left empty; errors are quoted.
std::string sweep_to_csv(const std::vector<SweepRow> &rows);

}  // namespace cvcat

#endif
