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

#ifndef CVCAT_STATES_H
#define CVCAT_STATES_H

#include <complex>
#include <string_view>

#include "cvcat/wavefunction.h"

namespace cvcat {

/// Physical knobs of the gate, in units with hbar = 1.
struct GateParams {
    /// Cubic deformation coefficient of the resource, exp(i gamma q^3).
    double gamma = 0.1;
    /// Momentum squeeze factor of the ancilla; 1/s stretches its coordinate.
    /// Values above 1 are accepted as anti-squeezing.
    double s = 1.0;
    /// Homodyne outcome for the ancilla momentum.
    double y_m = 3.0;

    double inverse_s() const {
        return 1.0 / s;
    }
    /// 20 log10(1/s).
    double squeezing_db() const;

    /// Airy path needs gamma > 0 and s > 0 (all finite).
    void validate_for_airy() const;

    bool operator==(const GateParams &) const = default;
};

/// Target cat (e^{i theta}|alpha> + e^{-i theta}|-alpha>) / N with alpha = i p_plus.
struct CatParams {
    std::complex<double> alpha;
    /// Reduced to (-pi, pi].
    double theta = 0.0;
    double p_plus = 0.0;

    /// alpha == i p_plus with p_plus >= 0.
    static CatParams from_momentum(double p_plus, double theta);
};

/// Coordinate wavefunction of |alpha>, alpha = i p.
enum class CoherentConvention {
    /// Vacuum displaced by p in momentum: pi^(-1/4) exp(-x^2/2 + i p x).
    /// Matches the gate output (copies spaced by +-p_plus in momentum).
    kMomentumDisplacement,
    /// Standard x = (a + a^dag)/sqrt(2): pi^(-1/4) exp(-x^2/2 + i sqrt(2) p x).
    kSqrt2,
};

std::string_view to_string(CoherentConvention convention);
/// Accepts "momentum" or "sqrt2". Throws DomainError otherwise.
CoherentConvention coherent_convention_from_string(std::string_view name);

/// Wraps an angle into (-pi, pi].
double reduce_angle(double theta);

/// sqrt(s) pi^(-1/4) exp(-(s x)^2 / 2). Throws DomainError when s <= 0 or the
/// envelope at either grid edge exceeds 1e-12.
WaveFunction make_squeezed_vacuum(double s, const Grid &grid);

WaveFunction make_vacuum(const Grid &grid);

/// exp(i gamma x^3) times the squeezed vacuum; gamma = 0 gives the squeezed vacuum.
WaveFunction make_cubic_phase_state(double gamma, double s, const Grid &grid);

/// Single coherent component |i p> in the given convention.
WaveFunction make_coherent_state(double p, const Grid &grid, CoherentConvention convention = CoherentConvention::kMomentumDisplacement);

/// Normalized two-component cat. The normalization uses the exact component
/// overlap of the chosen convention (e^{-p^2} or e^{-2 p^2}).
///
/// Throws DomainError when the superposition degenerates (alpha = 0,
/// theta = pi/2) or the grid cuts the components.
WaveFunction make_ideal_cat(const CatParams &cat, const Grid &grid, CoherentConvention convention = CoherentConvention::kMomentumDisplacement);

/// p_plus = sqrt(y_m / (3 gamma)), theta = pi/4 - 2 y_m^(3/2) / (3 sqrt(3 gamma)).
/// Throws DomainError for y_m < 0 or gamma <= 0.
CatParams cat_params_from_gate(const GateParams &params);

/// [-(p_plus + 8), p_plus + 8] with 2048 points.
Grid default_grid(double p_plus);

}  // namespace cvcat

#endif
