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


#ifndef CVCAT_PHASE_SPACE_H
#define CVCAT_PHASE_SPACE_H

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cvcat/wavefunction.h"

namespace cvcat {

/// Closed rectangle [x_min, x_max] x [p_min, p_max].
struct PhaseSpaceBounds {
    double x_min = -8.0;
    double x_max = 8.0;
    double p_min = -8.0;
    double p_max = 8.0;

    /// Throws DomainError unless both ranges are finite and nonempty.
    void validate() const;
};

/// Wigner function samples on an inclusive n_x by n_p lattice. values is
/// row-major in x: values[i * n_p + j] = W(x_i, p_j).
struct WignerGrid {
    static constexpr std::size_t kDefaultPoints = 256;

    PhaseSpaceBounds bounds;
    std::size_t n_x = kDefaultPoints;
    std::size_t n_p = kDefaultPoints;
    std::vector<double> values;

    double dx() const {
        return (bounds.x_max - bounds.x_min) / static_cast<double>(n_x - 1);
    }
    double dp() const {
        return (bounds.p_max - bounds.p_min) / static_cast<double>(n_p - 1);
    }
    double x(std::size_t i) const {
        return bounds.x_min + static_cast<double>(i) * dx();
    }
    double p(std::size_t j) const {
        return bounds.p_min + static_cast<double>(j) * dp();
    }
    double at(std::size_t i, std::size_t j) const {
        return values[i * n_p + j];
    }

    /// sum W dx dp
    double total_mass() const;
    double min_value() const;
    double max_abs() const;
    /// 2 pi sum W^2 dx dp; 1 for a pure state.
    double purity() const;
    /// sum_j W(x_i, p_j) dp for every i.
    std::vector<double> coordinate_marginal() const;
};

struct WignerCheck {
    double mass;
    double max_abs;
    bool mass_ok;
    bool bound_ok;

    bool ok() const {
        return mass_ok && bound_ok;
    }
};

/// Unit mass to 1e-3 and |W| <= 1/pi + 1e-6.
WignerCheck check_wigner(const WignerGrid &w);

/// W(x, p) = (1/pi) int psi*(x + y) psi(x - y) exp(2 i p y) dy.
///
/// The state is first band-limited-resampled onto a spacing that divides
/// the Wigner x step, so every x_i + y and x_i - y is a node. The y sum
/// pairs +y with -y, which makes each value real. Half-range equals the
/// state's own extent.
///
/// Throws DomainError if the state is not normalized, if |psi|^2 reaches
/// 1e-10 outside [x_min, x_max], or for n_x, n_p < 2.
WignerGrid wigner_transform(
    const WaveFunction &state, const PhaseSpaceBounds &bounds, std::size_t n_x = WignerGrid::kDefaultPoints,
    std::size_t n_p = WignerGrid::kDefaultPoints);

/// log(sum |W| dx dp).
double wigner_log_negativity(const WignerGrid &w);

struct PhasePoint {
    double x;
    double p;

    bool operator==(const PhasePoint &) const = default;
};

/// (x, y) -> (x, y + 3 gamma x^2). Area preserving; gamma -> -gamma inverts it.
PhasePoint semiclassical_shear(double x, double y, double gamma);

/// Closed polyline (first point repeated at the end) around a sheared
/// squeezed-vacuum ellipse.
struct SupportRegion {
    std::vector<PhasePoint> boundary;
    double sigma_level = 2.0;
};

/// Samples the sigma_level contour of the squeezed vacuum (standard
/// deviations 1/(sqrt2 s) in x and s/sqrt2 in p) at n_boundary angles and
/// shears it with gamma.
///
/// Throws DomainError unless s > 0, sigma_level > 0, gamma finite and
/// n_boundary >= 32.
SupportRegion build_support_region(double s, double gamma, double sigma_level = 2.0, std::size_t n_boundary = 256);

/// Shoelace area of a closed polyline (absolute value).
double polygon_area(const std::vector<PhasePoint> &closed);

/// x-intervals where the horizontal line p = level lies inside the region.
std::vector<std::pair<double, double>> horizontal_intersections(const SupportRegion &region, double level);

/// "x_min,x_max,p_min,p_max,n_x,n_p" header line, one value line, then
/// n_x rows of n_p comma-separated values.
std::string wigner_to_csv(const WignerGrid &w);

/// "x,p" header then one line per boundary point.
std::string support_region_to_csv(const SupportRegion &region);

}  // namespace cvcat

#endif
