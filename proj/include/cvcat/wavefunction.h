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

#ifndef CVCAT_WAVEFUNCTION_H
#define CVCAT_WAVEFUNCTION_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace cvcat {

/// Uniform grid with inclusive endpoints.
struct Grid {
    double x_min = -10.0;
    double x_max = 10.0;
    std::size_t n_points = 2048;

    static constexpr std::size_t kMinPoints = 16;

    double spacing() const {
        return (x_max - x_min) / static_cast<double>(n_points - 1);
    }
    double node(std::size_t i) const {
        return x_min + static_cast<double>(i) * spacing();
    }
    std::vector<double> nodes() const;

    /// Throws DomainError unless x_min < x_max (both finite) and n_points >= 16.
    void validate() const;

    /// Symmetric grid [-half_width, half_width].
    static Grid symmetric(double half_width, std::size_t n_points);

    bool operator==(const Grid &) const = default;
};

/// Pure-state wavefunction sampled on a uniform coordinate grid. Immutable.
class WaveFunction {
   public:
    static constexpr double kNormTolerance = 1e-6;

    /// Throws DomainError on an invalid grid, a size mismatch or non-finite samples.
    WaveFunction(Grid grid, std::vector<std::complex<double>> amplitudes, std::string label = "");

    const Grid &grid() const {
        return grid_;
    }
    std::span<const std::complex<double>> amplitudes() const {
        return amplitudes_;
    }
    std::complex<double> operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    const std::string &label() const {
        return label_;
    }

    /// Trapezoidal int |psi|^2 dx.
    double norm_squared() const;
    /// |norm^2 - 1| <= kNormTolerance.
    bool is_normalized() const;
    /// Copy scaled to unit trapezoidal norm. Throws DomainError for a zero state.
    WaveFunction normalized() const;
    WaveFunction relabeled(std::string label) const;
    /// Pointwise |psi(x_i)|^2.
    std::vector<double> density() const;
    /// Largest |psi|^2 on the two end nodes.
    double edge_density() const;

   private:
    Grid grid_;
    std::vector<std::complex<double>> amplitudes_;
    std::string label_;
};

/// Trapezoidal rule on uniformly spaced samples.
double trapezoid(std::span<const double> samples, double spacing);
std::complex<double> trapezoid(std::span<const std::complex<double>> samples, double spacing);

/// Trapezoidal <a|b> = int conj(a) b dx. Throws DomainError unless both share a grid.
std::complex<double> overlap(const WaveFunction &a, const WaveFunction &b);

/// min over phi of ||a - e^{i phi} b|| (trapezoidal), evaluated directly
/// rather than from norms so tiny distances keep their precision.
/// Throws DomainError unless both share a grid.
double phase_aligned_distance(const WaveFunction &a, const WaveFunction &b);

/// <x^k> under the trapezoidal density |psi|^2 (not renormalized).
double coordinate_moment(const WaveFunction &psi, int order);

/// Whittaker-Shannon (sinc) interpolation of psi onto `target`. Target nodes
/// outside psi's grid are set to zero.
WaveFunction resample_sinc(const WaveFunction &psi, const Grid &target);

/// Momentum-space amplitudes (2 pi)^(-1/2) int exp(-i p x) psi(x) dx on `momentum_grid`.
WaveFunction to_momentum(const WaveFunction &psi, const Grid &momentum_grid);

/// {x_min, x_max, n_points, re[], im[], label}
nlohmann::json to_json(const WaveFunction &psi);
/// Throws DomainError on missing fields or inconsistent sizes.
WaveFunction wavefunction_from_json(const nlohmann::json &j);

}  // namespace cvcat

#endif
