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

#include "cvcat/states.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cvcat/errors.h"

namespace cvcat {

namespace {

using Complex = std::complex<double>;

constexpr double kEdgeEnvelope = 1e-12;

const double kInvPiQuarter = std::pow(std::numbers::pi, -0.25);

void require_quiet_edges(double edge_envelope, const char *who) {
    if (edge_envelope > kEdgeEnvelope) {
        throw DomainError(
            std::string(who) + ": grid too narrow, envelope at the edge is " + std::to_string(edge_envelope) +
            " (> 1e-12)");
    }
}

double wavenumber(double p, CoherentConvention convention) {
    return convention == CoherentConvention::kSqrt2 ? std::numbers::sqrt2 * p : p;
}

}  // namespace

double GateParams::squeezing_db() const {
    return 20.0 * std::log10(1.0 / s);
}

void GateParams::validate_for_airy() const {
    if (!std::isfinite(gamma) || !std::isfinite(s) || !std::isfinite(y_m)) {
        throw DomainError("GateParams: gamma, s and y_m must be finite");
    }
    if (!(gamma > 0)) {
        throw DomainError("GateParams: the Airy path needs gamma > 0 (use the Gaussian special case for gamma = 0)");
    }
    if (!(s > 0)) {
        throw DomainError("GateParams: s must be > 0");
    }
}

CatParams CatParams::from_momentum(double p_plus, double theta) {
    if (!(p_plus >= 0)) {
        throw DomainError("CatParams: p_plus must be >= 0");
    }
    return {Complex(0.0, p_plus), reduce_angle(theta), p_plus};
}

std::string_view to_string(CoherentConvention convention) {
    return convention == CoherentConvention::kSqrt2 ? "sqrt2" : "momentum";
}

CoherentConvention coherent_convention_from_string(std::string_view name) {
    if (name == "momentum") {
        return CoherentConvention::kMomentumDisplacement;
    }
    if (name == "sqrt2") {
        return CoherentConvention::kSqrt2;
    }
    throw DomainError("unknown coherent-state convention '" + std::string(name) + "' (expected momentum|sqrt2)");
}

double reduce_angle(double theta) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    double r = std::fmod(theta, kTwoPi);
    if (r <= -std::numbers::pi) {
        r += kTwoPi;
    } else if (r > std::numbers::pi) {
        r -= kTwoPi;
    }
    return r;
}

WaveFunction make_squeezed_vacuum(double s, const Grid &grid) {
    grid.validate();
    if (!(s > 0) || !std::isfinite(s)) {
        throw DomainError("make_squeezed_vacuum: s must be finite and > 0");
    }
    double peak = std::sqrt(s) * kInvPiQuarter;
    auto envelope = [&](double x) {
        double sx = s * x;
        return peak * std::exp(-0.5 * sx * sx);
    };
    require_quiet_edges(std::max(envelope(grid.x_min), envelope(grid.x_max)), "make_squeezed_vacuum");
    std::vector<Complex> amplitudes(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        amplitudes[i] = envelope(grid.node(i));
    }
    return WaveFunction(grid, std::move(amplitudes), s == 1.0 ? "vacuum" : "squeezed vacuum");
}

WaveFunction make_vacuum(const Grid &grid) {
    return make_squeezed_vacuum(1.0, grid);
}

WaveFunction make_cubic_phase_state(double gamma, double s, const Grid &grid) {
    if (!std::isfinite(gamma)) {
        throw DomainError("make_cubic_phase_state: gamma must be finite");
    }
    WaveFunction squeezed = make_squeezed_vacuum(s, grid);
    if (gamma == 0.0) {
        return squeezed;
    }
    std::vector<Complex> amplitudes(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        double phase = gamma * x * x * x;
        amplitudes[i] = squeezed[i] * Complex(std::cos(phase), std::sin(phase));
    }
    return WaveFunction(grid, std::move(amplitudes), "cubic phase state");
}

WaveFunction make_coherent_state(double p, const Grid &grid, CoherentConvention convention) {
    grid.validate();
    if (!std::isfinite(p)) {
        throw DomainError("make_coherent_state: p must be finite");
    }
    require_quiet_edges(
        kInvPiQuarter * std::exp(-0.5 * std::min(grid.x_min * grid.x_min, grid.x_max * grid.x_max)),
        "make_coherent_state");
    double k = wavenumber(p, convention);
    std::vector<Complex> amplitudes(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        amplitudes[i] = kInvPiQuarter * std::exp(-0.5 * x * x) * Complex(std::cos(k * x), std::sin(k * x));
    }
    return WaveFunction(grid, std::move(amplitudes), "coherent state");
}

WaveFunction make_ideal_cat(const CatParams &cat, const Grid &grid, CoherentConvention convention) {
    grid.validate();
    if (!(cat.p_plus >= 0) || cat.alpha != Complex(0.0, cat.p_plus)) {
        throw DomainError("make_ideal_cat: need alpha = i p_plus with p_plus >= 0");
    }
    require_quiet_edges(
        kInvPiQuarter * std::exp(-0.5 * std::min(grid.x_min * grid.x_min, grid.x_max * grid.x_max)),
        "make_ideal_cat");
    double k = wavenumber(cat.p_plus, convention);
    // <-alpha|alpha> = exp(-k^2) for components exp(+-i k x) on the vacuum envelope.
    double denominator = 2.0 * (1.0 + std::cos(2.0 * cat.theta) * std::exp(-k * k));
    if (denominator < 1e-12) {
        throw DomainError("make_ideal_cat: degenerate superposition (alpha = 0, theta = pi/2)");
    }
    double scale = 2.0 * kInvPiQuarter / std::sqrt(denominator);
    std::vector<Complex> amplitudes(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        // e^{i theta} e^{ikx} + e^{-i theta} e^{-ikx} = 2 cos(kx + theta)
        amplitudes[i] = scale * std::exp(-0.5 * x * x) * std::cos(k * x + cat.theta);
    }
    return WaveFunction(grid, std::move(amplitudes), "ideal cat");
}

CatParams cat_params_from_gate(const GateParams &params) {
    if (!(params.gamma > 0)) {
        throw DomainError("cat_params_from_gate: gamma must be > 0");
    }
    if (!(params.y_m >= 0)) {
        throw DomainError("cat_params_from_gate: y_m must be >= 0, got " + std::to_string(params.y_m));
    }
    double three_gamma = 3.0 * params.gamma;
    double p_plus = std::sqrt(params.y_m / three_gamma);
    double theta = std::numbers::pi / 4 - 2.0 / (3.0 * std::sqrt(three_gamma)) * params.y_m * std::sqrt(params.y_m);
    return CatParams::from_momentum(p_plus, theta);
}

Grid default_grid(double p_plus) {
    return Grid::symmetric(p_plus + 8.0, 2048);
}

}  // namespace cvcat
