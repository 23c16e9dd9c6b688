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

#ifndef CVCAT_GATE_H
#define CVCAT_GATE_H

#include <complex>

#include "cvcat/states.h"
#include "cvcat/wavefunction.h"

namespace cvcat {

/// Outcomes below this density are treated as impossible.
inline constexpr double kProbabilityFloor = 1e-300;

/// Normalized conditional state and the density of the outcome that produced it.
struct ConditionalOutput {
    WaveFunction state;
    /// P(y_m), per unit ancilla momentum.
    double probability_density;
    GateParams params;
};

/// Multiplicative factor the homodyne outcome imprints on the target:
///
///   sqrt(2s) pi^(1/4) / (3 gamma)^(1/3)
///     * exp[(s^2 / (6 gamma)) (x - y_m + s^4 / (18 gamma))]
///     * Ai[(3 gamma)^(-1/3) (x - y_m + s^4 / (12 gamma))]
///
/// which equals sqrt(s) / (pi^(3/4) sqrt 2) * int dx' e^{i x'(x - y_m + gamma x'^2)} e^{-(s x')^2/2}.
/// Assembled in log space with the scaled Ai when the Ai argument is
/// positive, so strong squeezing cannot overflow the exponential.
/// The value is real; it is returned as complex to match the quadrature route.
///
/// Throws DomainError for gamma <= 0 (see gaussian_added_factor) or s <= 0.
std::complex<double> added_factor(double x, const GateParams &params);

/// gamma = 0 limit: pi^(-1/4) s^(-1/2) exp(-(x - y_m)^2 / (2 s^2)).
std::complex<double> gaussian_added_factor(double x, double s, double y_m);

/// Conditional output for `input`: the product input(x) * added_factor(x),
/// its norm P(y_m), and the normalized state. The input is treated as a ray: it is
/// normalized first, so global phase and positive rescaling do not matter.
/// gamma = 0 routes to the Gaussian factor.
///
/// Throws DomainError for invalid params or a zero input, and
/// ZeroProbabilityError when P(y_m) < 1e-300.
ConditionalOutput apply_gate(const WaveFunction &input, const GateParams &params);

/// P(y_m) = int |input(x) * added_factor(x)|^2 dx; same value apply_gate reports.
double outcome_probability_density(const WaveFunction &input, double gamma, double s, double y_m);

}  // namespace cvcat

#endif
