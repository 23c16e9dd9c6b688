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


#ifndef CVCAT_ORACLE_H
#define CVCAT_ORACLE_H

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "cvcat/gate.h"
#include "cvcat/quadrature.h"
#include "cvcat/states.h"
#include "cvcat/wavefunction.h"

namespace cvcat {

/// Brute-force reference implementations of the gate. Slow and memory
/// hungry by design; use them to check the closed form, not in production.

/// sqrt(s) / (pi^(3/4) sqrt 2) * integrate_oscillatory_gaussian(x - y_m, gamma, s).
/// gamma = 0 is accepted. Throws DomainError for s <= 0.
std::complex<double> oracle_added_factor(double x, const GateParams &params, const QuadratureSpec &spec);
std::complex<double> oracle_added_factor(double x, const GateParams &params);

/// apply_gate with the factor taken from oracle_added_factor at every node.
ConditionalOutput oracle_apply_gate(const WaveFunction &input, const GateParams &params, const QuadratureSpec &spec);

/// Joint amplitude of target (x_1) and ancilla (x_2) on a product grid.
/// amplitudes is row-major in x_1: amplitudes[i * n_2 + k].
struct TwoModeGrid {
    static constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

    Grid grid_1;
    Grid grid_2;
    std::vector<std::complex<double>> amplitudes;

    std::complex<double> at(std::size_t i, std::size_t k) const {
        return amplitudes[i * grid_2.n_points + k];
    }
    /// Trapezoidal sum |amplitudes|^2 dx_1 dx_2 (pairwise summation).
    double norm_squared() const;
};

/// psi(x_1) * psi_sq(x_2). Throws DomainError if the product exceeds kMaxEntries.
TwoModeGrid make_product_state(const WaveFunction &target, double s, const Grid &ancilla);

/// Multiplies by exp(i gamma x_2^3).
void apply_cubic_phase(TwoModeGrid &state, double gamma);

/// Multiplies by exp(i x_1 x_2).
void apply_cz(TwoModeGrid &state);

/// (2 pi)^(-1/2) int dx_2 exp(-i y_m x_2) state(x_1, x_2), trapezoidal with
/// pairwise summation. Returns the unnormalized target amplitudes.
std::vector<std::complex<double>> project_ancilla_momentum(const TwoModeGrid &state, double y_m);

/// Half-width 7/s, step pi / f_max where f_max = |y_m| + max|x_1| + 3|gamma| (7/s)^2
/// bounds the integrand's local frequency; odd point count.
Grid default_ancilla_grid(const Grid &target, const GateParams &params);

/// Largest local frequency times step on the ancilla grid; the build
/// requires it to be at most pi.
double ancilla_phase_step(const Grid &target, const Grid &ancilla, const GateParams &params);

/// Whole protocol on the two-mode grid: product state, cubic phase, C_Z,
/// projection on ancilla momentum y_m, normalization.
///
/// Throws DomainError when the target edge density is not below 1e-10,
/// the ancilla grid is too coarse or the matrix too large, and
/// ZeroProbabilityError below the probability floor.
ConditionalOutput oracle_two_mode(
    const WaveFunction &input, const GateParams &params, std::optional<Grid> ancilla = std::nullopt);

/// Largest disagreement found by compare_closed_form. The deviation at a
/// point is |closed - oracle| / max(|oracle|, 1e-4), which is at most 1e-8
/// exactly when |closed - oracle| <= max(1e-8 |oracle|, 1e-12).
struct ClosedFormDeviation {
    double max_relative_deviation = 0.0;
    GateParams worst_params;
    double worst_x = 0.0;
    std::size_t points = 0;
};

/// added_factor against oracle_added_factor over gammas x dbs x y_ms x
/// (x - y_m) in [delta_min, delta_max] with the given step.
ClosedFormDeviation compare_closed_form(
    const std::vector<double> &gammas, const std::vector<double> &dbs, const std::vector<double> &y_ms,
    double delta_min, double delta_max, double delta_step);

/// gamma in {0.1, 0.2, 0.5}, dB in {0, 5, 9, 14}, y_m in {3, 6, 15},
/// x - y_m in [-10, 10] step 0.5.
ClosedFormDeviation standard_closed_form_check();

}  // namespace cvcat

#endif
