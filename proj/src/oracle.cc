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


#include "cvcat/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cvcat/analysis.h"
#include "cvcat/errors.h"
#include "cvcat/io.h"

namespace cvcat {

namespace {

using Complex = std::complex<double>;

constexpr double kAncillaHalfWidthInSigmas = 7.0;
constexpr double kEdgeDensity = 1e-10;

void require_gaussian_width(double s, const char *who) {
    if (!(s > 0) || !std::isfinite(s)) {
        throw DomainError(std::string(who) + ": s must be finite and > 0");
    }
}

double max_abs_coordinate(const Grid &grid) {
    return std::max(std::abs(grid.x_min), std::abs(grid.x_max));
}

Complex unit(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

Complex oracle_added_factor(double x, const GateParams &params, const QuadratureSpec &spec) {
    require_gaussian_width(params.s, "oracle_added_factor");
    double prefactor = std::sqrt(params.s) / (std::pow(std::numbers::pi, 0.75) * std::numbers::sqrt2);
    return prefactor * integrate_oscillatory_gaussian(x - params.y_m, params.gamma, params.s, spec);
}

Complex oracle_added_factor(double x, const GateParams &params) {
    require_gaussian_width(params.s, "oracle_added_factor");
    return oracle_added_factor(x, params, QuadratureSpec::for_gaussian_envelope(params.s));
}

ConditionalOutput oracle_apply_gate(const WaveFunction &input, const GateParams &params, const QuadratureSpec &spec) {
    WaveFunction psi = input.normalized();
    const Grid &grid = psi.grid();
    std::vector<Complex> out(grid.n_points);
    std::vector<double> density(grid.n_points);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = psi[i] * oracle_added_factor(grid.node(i), params, spec);
        density[i] = std::norm(out[i]);
    }
    double p = trapezoid(density, grid.spacing());
    if (!(p >= kProbabilityFloor)) {
        throw ZeroProbabilityError("oracle_apply_gate: probability density below 1e-300");
    }
    for (Complex &a : out) {
        a /= std::sqrt(p);
    }
    return {WaveFunction(grid, std::move(out), "oracle gate output"), p, params};
}

double TwoModeGrid::norm_squared() const {
    std::size_t n_1 = grid_1.n_points;
    std::size_t n_2 = grid_2.n_points;
    std::vector<double> rows(n_1);
    std::vector<double> row(n_2);
    for (std::size_t i = 0; i < n_1; ++i) {
        for (std::size_t k = 0; k < n_2; ++k) {
            double weight = (k == 0 || k + 1 == n_2) ? 0.5 : 1.0;
            row[k] = weight * std::norm(at(i, k));
        }
        rows[i] = ((i == 0 || i + 1 == n_1) ? 0.5 : 1.0) * pairwise_sum(row);
    }
    return pairwise_sum(rows) * grid_1.spacing() * grid_2.spacing();
}

TwoModeGrid make_product_state(const WaveFunction &target, double s, const Grid &ancilla) {
    ancilla.validate();
    require_gaussian_width(s, "make_product_state");
    const Grid &grid_1 = target.grid();
    if (grid_1.n_points > TwoModeGrid::kMaxEntries / ancilla.n_points) {
        throw DomainError(
            "make_product_state: " + std::to_string(grid_1.n_points) + " x " + std::to_string(ancilla.n_points) +
            " entries exceed the 2^26 cap");
    }
    std::vector<double> envelope(ancilla.n_points);
    double peak = std::sqrt(s) * std::pow(std::numbers::pi, -0.25);
    for (std::size_t k = 0; k < envelope.size(); ++k) {
        double sx = s * ancilla.node(k);
        envelope[k] = peak * std::exp(-0.5 * sx * sx);
    }
    TwoModeGrid state{grid_1, ancilla, std::vector<Complex>(grid_1.n_points * ancilla.n_points)};
    for (std::size_t i = 0; i < grid_1.n_points; ++i) {
        Complex a = target[i];
        Complex *row = state.amplitudes.data() + i * ancilla.n_points;
        for (std::size_t k = 0; k < ancilla.n_points; ++k) {
            row[k] = a * envelope[k];
        }
    }
    return state;
}

void apply_cubic_phase(TwoModeGrid &state, double gamma) {
    std::size_t n_2 = state.grid_2.n_points;
    std::vector<Complex> phases(n_2);
    for (std::size_t k = 0; k < n_2; ++k) {
        double x = state.grid_2.node(k);
        phases[k] = unit(gamma * x * x * x);
    }
    for (std::size_t i = 0; i < state.grid_1.n_points; ++i) {
        Complex *row = state.amplitudes.data() + i * n_2;
        for (std::size_t k = 0; k < n_2; ++k) {
            row[k] *= phases[k];
        }
    }
}

void apply_cz(TwoModeGrid &state) {
    std::size_t n_2 = state.grid_2.n_points;
    for (std::size_t i = 0; i < state.grid_1.n_points; ++i) {
        double x_1 = state.grid_1.node(i);
        Complex *row = state.amplitudes.data() + i * n_2;
        for (std::size_t k = 0; k < n_2; ++k) {
            row[k] *= unit(x_1 * state.grid_2.node(k));
        }
    }
}

std::vector<Complex> project_ancilla_momentum(const TwoModeGrid &state, double y_m) {
    std::size_t n_2 = state.grid_2.n_points;
    std::vector<Complex> bra(n_2);
    for (std::size_t k = 0; k < n_2; ++k) {
        double weight = (k == 0 || k + 1 == n_2) ? 0.5 : 1.0;
        bra[k] = weight * unit(-y_m * state.grid_2.node(k));
    }
    double scale = state.grid_2.spacing() / std::sqrt(2.0 * std::numbers::pi);
    std::vector<Complex> out(state.grid_1.n_points);
    std::vector<Complex> terms(n_2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Complex *row = state.amplitudes.data() + i * n_2;
        for (std::size_t k = 0; k < n_2; ++k) {
            terms[k] = bra[k] * row[k];
        }
        out[i] = scale * pairwise_sum(terms);
    }
    return out;
}

Grid default_ancilla_grid(const Grid &target, const GateParams &params) {
    require_gaussian_width(params.s, "default_ancilla_grid");
    double half_width = kAncillaHalfWidthInSigmas / params.s;
    double f_max = std::abs(params.y_m) + max_abs_coordinate(target) + 3.0 * std::abs(params.gamma) * half_width * half_width;
    double intervals = std::ceil(2.0 * half_width * f_max / std::numbers::pi);
    auto n = static_cast<std::size_t>(intervals) + 1;
    if (n % 2 == 0) {
        ++n;
    }
    return Grid::symmetric(half_width, std::max(n, Grid::kMinPoints + 1));
}

double ancilla_phase_step(const Grid &target, const Grid &ancilla, const GateParams &params) {
    double edge = max_abs_coordinate(ancilla);
    double f_max = std::abs(params.y_m) + max_abs_coordinate(target) + 3.0 * std::abs(params.gamma) * edge * edge;
    return f_max * ancilla.spacing();
}

ConditionalOutput oracle_two_mode(const WaveFunction &input, const GateParams &params, std::optional<Grid> ancilla) {
    if (!std::isfinite(params.gamma) || !std::isfinite(params.y_m)) {
        throw DomainError("oracle_two_mode: gamma and y_m must be finite");
    }
    require_gaussian_width(params.s, "oracle_two_mode");
    WaveFunction psi = input.normalized();
    if (psi.edge_density() >= kEdgeDensity) {
        throw DomainError(
            "oracle_two_mode: target grid too narrow, edge density " + format_real(psi.edge_density()));
    }
    Grid grid_2 = ancilla ? *ancilla : default_ancilla_grid(psi.grid(), params);
    grid_2.validate();
    double step = ancilla_phase_step(psi.grid(), grid_2, params);
    if (step > std::numbers::pi) {
        throw DomainError(
            "oracle_two_mode: ancilla grid too coarse, phase advance per step " + format_real(step) + " > pi");
    }
    double ancilla_edge = std::max(std::abs(grid_2.x_min), std::abs(grid_2.x_max));
    double envelope_edge = params.s / std::sqrt(std::numbers::pi) * std::exp(-std::pow(params.s * ancilla_edge, 2));
    if (envelope_edge >= kEdgeDensity) {
        throw DomainError("oracle_two_mode: ancilla grid too narrow for s = " + format_real(params.s));
    }

    TwoModeGrid joint = make_product_state(psi, params.s, grid_2);
    apply_cubic_phase(joint, params.gamma);
    apply_cz(joint);
    std::vector<Complex> out = project_ancilla_momentum(joint, params.y_m);

    std::vector<double> density(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        density[i] = std::norm(out[i]);
    }
    double p = trapezoid(density, psi.grid().spacing());
    if (!(p >= kProbabilityFloor) || !std::isfinite(p)) {
        throw ZeroProbabilityError("oracle_two_mode: probability density below 1e-300");
    }
    for (Complex &a : out) {
        a /= std::sqrt(p);
    }
    return {WaveFunction(psi.grid(), std::move(out), "two-mode oracle output"), p, params};
}

ClosedFormDeviation compare_closed_form(
    const std::vector<double> &gammas, const std::vector<double> &dbs, const std::vector<double> &y_ms,
    double delta_min, double delta_max, double delta_step) {
    if (!(delta_step > 0) || !(delta_min <= delta_max)) {
        throw DomainError("compare_closed_form: need delta_min <= delta_max and delta_step > 0");
    }
    auto steps = static_cast<std::size_t>(std::floor((delta_max - delta_min) / delta_step + 1e-9));
    ClosedFormDeviation result;
    for (double gamma : gammas) {
        for (double db : dbs) {
            for (double y_m : y_ms) {
                GateParams params{gamma, db_to_s(db), y_m};
                QuadratureSpec spec = QuadratureSpec::for_gaussian_envelope(params.s);
                for (std::size_t k = 0; k <= steps; ++k) {
                    double x = y_m + delta_min + static_cast<double>(k) * delta_step;
                    Complex closed = added_factor(x, params);
                    Complex reference = oracle_added_factor(x, params, spec);
                    double deviation = std::abs(closed - reference) / std::max(std::abs(reference), 1e-4);
                    ++result.points;
                    if (deviation > result.max_relative_deviation || std::isnan(deviation)) {
                        result.max_relative_deviation = deviation;
                        result.worst_params = params;
                        result.worst_x = x;
                    }
                }
            }
        }
    }
    return result;
}

ClosedFormDeviation standard_closed_form_check() {
    return compare_closed_form({0.1, 0.2, 0.5}, {0.0, 5.0, 9.0, 14.0}, {3.0, 6.0, 15.0}, -10.0, 10.0, 0.5);
}

}  // namespace cvcat
