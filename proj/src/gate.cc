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

#include "cvcat/gate.h"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cvcat/airy.h"
#include "cvcat/errors.h"

namespace cvcat {

namespace {

using Complex = std::complex<double>;

struct Unnormalized {
    std::vector<Complex> amplitudes;
    double probability_density;
};

Unnormalized unnormalized_output(const WaveFunction &input, const GateParams &params) {
    bool gaussian = params.gamma == 0.0 && params.s > 0 && std::isfinite(params.s) && std::isfinite(params.y_m);
    if (!gaussian) {
        params.validate_for_airy();
    }
    double norm2 = input.norm_squared();
    if (!(norm2 > 0)) {
        throw DomainError("apply_gate: input state '" + input.label() + "' is zero");
    }
    double input_scale = 1.0 / std::sqrt(norm2);
    const Grid &grid = input.grid();
    Unnormalized out;
    out.amplitudes.resize(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        double x = grid.node(i);
        Complex factor = gaussian ? gaussian_added_factor(x, params.s, params.y_m) : added_factor(x, params);
        out.amplitudes[i] = input_scale * input[i] * factor;
    }
    std::vector<double> density(out.amplitudes.size());
    for (std::size_t i = 0; i < density.size(); ++i) {
        density[i] = std::norm(out.amplitudes[i]);
    }
    out.probability_density = trapezoid(density, grid.spacing());
    return out;
}

}  // namespace

Complex added_factor(double x, const GateParams &params) {
    params.validate_for_airy();
    if (!std::isfinite(x)) {
        throw DomainError("added_factor: x must be finite");
    }
    const double gamma = params.gamma;
    const double s2 = params.s * params.s;
    const double s4 = s2 * s2;
    const double cube_root = std::cbrt(3.0 * gamma);
    const double delta = x - params.y_m;

    double log_prefactor = 0.5 * std::log(2.0 * params.s) + 0.25 * std::log(std::numbers::pi) - std::log(cube_root);
    double exponent = s2 / (6.0 * gamma) * (delta + s4 / (18.0 * gamma));
    double z = (delta + s4 / (12.0 * gamma)) / cube_root;
    if (z > 0) {
        // exp(exponent) and Ai(z) can separately overflow/underflow; their product cannot.
        double decay = (2.0 / 3.0) * z * std::sqrt(z);
        return std::exp(log_prefactor + exponent + std::log(airy_ai_scaled(z)) - decay);
    }
    // z <= 0 forces delta + s^4/(18 gamma) < 0, so exp(exponent) <= 1 here.
    return std::exp(log_prefactor + exponent) * airy_ai(z);
}

Complex gaussian_added_factor(double x, double s, double y_m) {
    if (!(s > 0) || !std::isfinite(s)) {
        throw DomainError("gaussian_added_factor: s must be finite and > 0");
    }
    double delta = x - y_m;
    return std::pow(std::numbers::pi, -0.25) / std::sqrt(s) * std::exp(-delta * delta / (2.0 * s * s));
}

ConditionalOutput apply_gate(const WaveFunction &input, const GateParams &params) {
    Unnormalized out = unnormalized_output(input, params);
    double p = out.probability_density;
    if (!(p >= kProbabilityFloor) || !std::isfinite(p)) {
        throw ZeroProbabilityError(
            "apply_gate: outcome y_m = " + std::to_string(params.y_m) + " has probability density " +
            std::to_string(p) + " below 1e-300; the conditional state is undefined");
    }
    double scale = 1.0 / std::sqrt(p);
    for (Complex &a : out.amplitudes) {
        a *= scale;
    }
    return {WaveFunction(input.grid(), std::move(out.amplitudes), "gate output"), p, params};
}

double outcome_probability_density(const WaveFunction &input, double gamma, double s, double y_m) {
    return unnormalized_output(input, GateParams{gamma, s, y_m}).probability_density;
}

}  // namespace cvcat
