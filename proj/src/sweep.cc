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


#include "cvcat/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "cvcat/analysis.h"
#include "cvcat/errors.h"
#include "cvcat/gate.h"
#include "cvcat/io.h"
#include "cvcat/phase_space.h"

namespace cvcat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kVacuumMargin = 8.0;

std::string csv_field(double value) {
    return std::isnan(value) ? std::string() : format_real(value);
}

std::string csv_quoted(const std::string &text) {
    if (text.empty()) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += "\"\"";
        } else if (c == '\n' || c == '\r') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out + '"';
}

double predicted_p_plus(const GateParams &params) {
    if (params.gamma > 0 && params.y_m >= 0) {
        return cat_params_from_gate(params).p_plus;
    }
    return 0.0;
}

}  // namespace

std::string_view to_string(SweepVariable variable) {
    return variable == SweepVariable::kYm ? "y_m" : "inverse_s";
}

std::string_view to_string(GammaRule rule) {
    return rule == GammaRule::kYmOver30 ? "ym/30" : "fixed";
}

SweepVariable sweep_variable_from_string(std::string_view name) {
    if (name == "inverse_s") {
        return SweepVariable::kInverseS;
    }
    if (name == "y_m") {
        return SweepVariable::kYm;
    }
    throw DomainError("unknown sweep variable '" + std::string(name) + "' (expected inverse_s|y_m)");
}

GammaRule gamma_rule_from_string(std::string_view name) {
    if (name == "fixed") {
        return GammaRule::kFixed;
    }
    if (name == "ym/30") {
        return GammaRule::kYmOver30;
    }
    throw DomainError("unknown gamma rule '" + std::string(name) + "' (expected fixed|ym/30)");
}

void SweepSpec::validate() const {
    if (values.empty()) {
        throw DomainError("SweepSpec: values must be nonempty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw DomainError("SweepSpec: values must be finite");
        }
        if (i > 0 && !(values[i] > values[i - 1])) {
            throw DomainError("SweepSpec: values must be strictly increasing");
        }
    }
    if (grid_points < Grid::kMinPoints || wigner_points < 2) {
        throw DomainError("SweepSpec: grid_points >= 16 and wigner_points >= 2 required");
    }
}

std::vector<double> log_spaced(double a, double b, std::size_t n) {
    if (!(a > 0) || !(b > a) || n < 2) {
        throw DomainError("log_spaced: need 0 < a < b and n >= 2");
    }
    std::vector<double> values(n);
    double ratio = std::log(b / a);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = a * std::exp(ratio * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    values.front() = a;
    values.back() = b;
    return values;
}

std::vector<double> default_inverse_s_values() {
    return log_spaced(1.0, 10.0, 60);
}

GateParams row_params(const SweepSpec &spec, double value) {
    GateParams params = spec.fixed;
    if (spec.variable == SweepVariable::kInverseS) {
        if (!(value > 0)) {
            throw DomainError("sweep: 1/s must be > 0, got " + format_real(value));
        }
        params.s = 1.0 / value;
    } else {
        params.y_m = value;
    }
    if (spec.gamma_rule == GammaRule::kYmOver30) {
        params.gamma = params.y_m / 30.0;
    }
    return params;
}

SweepRow evaluate_row(const SweepSpec &spec, double value) {
    SweepRow row{value, spec.fixed, kNaN, kNaN, kNaN, kNaN, kNaN, {}};
    const SweepOutputs &want = spec.outputs;
    try {
        GateParams params = row_params(spec, value);
        row.params = params;
        double p_plus = predicted_p_plus(params);
        Grid grid = Grid::symmetric(p_plus + kVacuumMargin, spec.grid_points);
        WaveFunction vacuum = make_vacuum(grid);

        if (want.probability || want.efficiency) {
            row.probability_density = outcome_probability_density(vacuum, params.gamma, params.s, params.y_m);
        }
        if (!(want.infidelity || want.efficiency || want.wln)) {
            return row;
        }
        ConditionalOutput out = apply_gate(vacuum, params);
        if (want.infidelity || want.efficiency) {
            CatParams cat = cat_params_from_gate(params);
            if (spec.optimize_cat) {
                row.fidelity = optimize_cat(out.state, cat, spec.convention).fidelity;
            } else {
                row.fidelity = fidelity(out.state, make_ideal_cat(cat, grid, spec.convention));
            }
            if (want.infidelity) {
                row.infidelity = 1.0 - row.fidelity;
            }
            if (want.efficiency) {
                row.efficiency = efficiency_score(row.fidelity, out.probability_density);
            }
        }
        if (want.wln) {
            double p_reach = p_plus + kVacuumMargin;
            PhaseSpaceBounds bounds{grid.x_min, grid.x_max, -p_reach, p_reach};
            row.wln = wigner_log_negativity(wigner_transform(out.state, bounds, spec.wigner_points, spec.wigner_points));
        }
    } catch (const std::exception &e) {
        row.error = e.what();
    }
    return row;
}

std::size_t sweep_thread_count(const SweepSpec &spec) {
    if (spec.threads > 0) {
        return spec.threads;
    }
    if (const char *env = std::getenv("CVCAT_THREADS")) {
        char *end = nullptr;
        long requested = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && requested > 0) {
            return static_cast<std::size_t>(requested);
        }
        throw DomainError("CVCAT_THREADS must be a positive integer, got '" + std::string(env) + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    spec.validate();
    std::vector<SweepRow> rows(spec.values.size());
    std::size_t workers = std::min(sweep_thread_count(spec), rows.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            rows[i] = evaluate_row(spec, spec.values[i]);
        }
    };
    if (workers <= 1) {
        work();
        return rows;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    pool.clear();
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow> &rows) {
    std::string out = "variable_value,infidelity,probability_density,wln,efficiency,error\n";
    for (const SweepRow &row : rows) {
        out += format_real(row.variable_value) + ',' + csv_field(row.infidelity) + ',' +
               csv_field(row.probability_density) + ',' + csv_field(row.wln) + ',' + csv_field(row.efficiency) +
               ',' + csv_quoted(row.error) + '\n';
    }
    return out;
}

}  // namespace cvcat
