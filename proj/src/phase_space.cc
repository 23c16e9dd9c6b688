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


#include "cvcat/phase_space.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cvcat/errors.h"
#include "cvcat/io.h"
#include "cvcat/quadrature.h"

namespace cvcat {

namespace {

using Complex = std::complex<double>;

constexpr double kEdgeDensity = 1e-10;
constexpr double kMassTolerance = 1e-3;
constexpr double kBoundSlack = 1e-6;

double density_outside(const WaveFunction &state, double x_min, double x_max) {
    double worst = state.edge_density();
    const Grid &grid = state.grid();
    for (std::size_t i = 0; i < state.size(); ++i) {
        double x = grid.node(i);
        if (x < x_min || x > x_max) {
            worst = std::max(worst, std::norm(state[i]));
        }
    }
    return worst;
}

// State on a grid whose spacing divides the Wigner x step and which has
// every Wigner x node as one of its own nodes. first_offset is the
// (possibly negative) index of x_min within it.
struct AlignedState {
    WaveFunction state;
    long first_offset;
    std::size_t stride;
};

AlignedState align(const WaveFunction &state, double x_min, double step) {
    const Grid &source = state.grid();
    auto stride = static_cast<std::size_t>(std::max(1.0, std::ceil(step / source.spacing() - 1e-9)));
    double h = step / static_cast<double>(stride);
    auto lo = static_cast<long>(std::floor((source.x_min - x_min) / h + 1e-9));
    auto hi = static_cast<long>(std::ceil((source.x_max - x_min) / h - 1e-9));
    Grid target{x_min + static_cast<double>(lo) * h, x_min + static_cast<double>(hi) * h,
                static_cast<std::size_t>(hi - lo + 1)};
    double shift = std::abs(target.x_min - source.x_min);
    bool already_aligned = target.n_points == source.n_points && shift <= 1e-12 * h &&
                           std::abs(target.spacing() - source.spacing()) <= 1e-12 * h;
    if (already_aligned) {
        return {state, -lo, stride};
    }
    return {resample_sinc(state, target), -lo, stride};
}

}  // namespace

void PhaseSpaceBounds::validate() const {
    bool finite = std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(p_min) && std::isfinite(p_max);
    if (!finite || !(x_min < x_max) || !(p_min < p_max)) {
        throw DomainError("PhaseSpaceBounds: need finite x_min < x_max and p_min < p_max");
    }
}

double WignerGrid::total_mass() const {
    return pairwise_sum(values) * dx() * dp();
}

double WignerGrid::min_value() const {
    return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

double WignerGrid::max_abs() const {
    double worst = 0.0;
    for (double v : values) {
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

double WignerGrid::purity() const {
    std::vector<double> squares(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        squares[i] = values[i] * values[i];
    }
    return 2.0 * std::numbers::pi * pairwise_sum(squares) * dx() * dp();
}

std::vector<double> WignerGrid::coordinate_marginal() const {
    std::vector<double> marginal(n_x);
    for (std::size_t i = 0; i < n_x; ++i) {
        marginal[i] = pairwise_sum(std::span<const double>(values.data() + i * n_p, n_p)) * dp();
    }
    return marginal;
}

WignerCheck check_wigner(const WignerGrid &w) {
    WignerCheck check{w.total_mass(), w.max_abs(), false, false};
    check.mass_ok = std::abs(check.mass - 1.0) <= kMassTolerance;
    check.bound_ok = check.max_abs <= 1.0 / std::numbers::pi + kBoundSlack;
    return check;
}

WignerGrid wigner_transform(const WaveFunction &state, const PhaseSpaceBounds &bounds, std::size_t n_x, std::size_t n_p) {
    bounds.validate();
    if (n_x < 2 || n_p < 2) {
        throw DomainError("wigner_transform: need n_x, n_p >= 2");
    }
    if (!state.is_normalized()) {
        throw DomainError(
            "wigner_transform: state '" + state.label() + "' is not normalized (norm^2 = " +
            format_real(state.norm_squared()) + ")");
    }
    double leak = density_outside(state, bounds.x_min, bounds.x_max);
    if (leak >= kEdgeDensity) {
        throw DomainError(
            "wigner_transform: bounds too tight, |psi|^2 = " + format_real(leak) +
            " outside the x range or at the state's grid edge (need < 1e-10)");
    }

    WignerGrid w{bounds, n_x, n_p, std::vector<double>(n_x * n_p, 0.0)};
    AlignedState aligned = align(state, bounds.x_min, w.dx());
    const WaveFunction &psi = aligned.state;
    const auto n = static_cast<long>(psi.size());
    const double h = psi.grid().spacing();

    double peak = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        peak = std::max(peak, std::norm(psi[i]));
    }
    const double negligible = 1e-17 * peak;

    // cos/sin of 2 p_j y_k, built lazily up to the largest y any row needs.
    std::vector<double> cos_table;
    std::vector<double> sin_table;
    long tabulated = 0;
    auto extend_tables = [&](long k_max) {
        if (k_max < tabulated) {
            return;
        }
        cos_table.resize(static_cast<std::size_t>(k_max + 1) * n_p);
        sin_table.resize(cos_table.size());
        for (long k = tabulated; k <= k_max; ++k) {
            double y = static_cast<double>(k) * h;
            for (std::size_t j = 0; j < n_p; ++j) {
                double angle = 2.0 * w.p(j) * y;
                cos_table[static_cast<std::size_t>(k) * n_p + j] = std::cos(angle);
                sin_table[static_cast<std::size_t>(k) * n_p + j] = std::sin(angle);
            }
        }
        tabulated = k_max + 1;
    };

    std::vector<double> row(n_p);
    for (std::size_t i = 0; i < n_x; ++i) {
        long c = aligned.first_offset + static_cast<long>(i * aligned.stride);
        if (c < 0 || c >= n) {
            continue;
        }
        long k_max = std::min(c, n - 1 - c);
        extend_tables(k_max);
        std::fill(row.begin(), row.end(), 0.0);
        for (long k = 0; k <= k_max; ++k) {
            Complex f = std::conj(psi[static_cast<std::size_t>(c + k)]) * psi[static_cast<std::size_t>(c - k)];
            if (std::abs(f) <= negligible) {
                continue;
            }
            double weight = k == 0 ? 1.0 : 2.0;
            double fr = weight * f.real();
            double fi = weight * f.imag();
            const double *cs = cos_table.data() + static_cast<std::size_t>(k) * n_p;
            const double *sn = sin_table.data() + static_cast<std::size_t>(k) * n_p;
            for (std::size_t j = 0; j < n_p; ++j) {
                row[j] += fr * cs[j] - fi * sn[j];
            }
        }
        double scale = h / std::numbers::pi;
        for (std::size_t j = 0; j < n_p; ++j) {
            w.values[i * n_p + j] = scale * row[j];
        }
    }
    return w;
}

double wigner_log_negativity(const WignerGrid &w) {
    std::vector<double> magnitudes(w.values.size());
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        magnitudes[i] = std::abs(w.values[i]);
    }
    return std::log(pairwise_sum(magnitudes) * w.dx() * w.dp());
}

PhasePoint semiclassical_shear(double x, double y, double gamma) {
    return {x, y + 3.0 * gamma * x * x};
}

SupportRegion build_support_region(double s, double gamma, double sigma_level, std::size_t n_boundary) {
    if (!(s > 0) || !std::isfinite(s) || !(sigma_level > 0) || !std::isfinite(sigma_level) || !std::isfinite(gamma)) {
        throw DomainError("build_support_region: need finite s > 0, sigma_level > 0 and gamma");
    }
    if (n_boundary < 32) {
        throw DomainError("build_support_region: need n_boundary >= 32");
    }
    double semi_x = sigma_level / (std::numbers::sqrt2 * s);
    double semi_p = sigma_level * s / std::numbers::sqrt2;
    SupportRegion region{{}, sigma_level};
    region.boundary.reserve(n_boundary + 1);
    for (std::size_t k = 0; k < n_boundary; ++k) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_boundary);
        region.boundary.push_back(semiclassical_shear(semi_x * std::cos(t), semi_p * std::sin(t), gamma));
    }
    region.boundary.push_back(region.boundary.front());
    return region;
}

double polygon_area(const std::vector<PhasePoint> &closed) {
    long double twice = 0;
    for (std::size_t k = 0; k + 1 < closed.size(); ++k) {
        twice += static_cast<long double>(closed[k].x) * closed[k + 1].p -
                 static_cast<long double>(closed[k + 1].x) * closed[k].p;
    }
    return static_cast<double>(std::abs(twice) / 2);
}

std::vector<std::pair<double, double>> horizontal_intersections(const SupportRegion &region, double level) {
    std::vector<double> crossings;
    const auto &b = region.boundary;
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        const PhasePoint &a = b[k];
        const PhasePoint &c = b[k + 1];
        if ((a.p <= level) == (c.p <= level)) {
            continue;
        }
        crossings.push_back(a.x + (level - a.p) * (c.x - a.x) / (c.p - a.p));
    }
    std::sort(crossings.begin(), crossings.end());
    std::vector<std::pair<double, double>> intervals;
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
        intervals.emplace_back(crossings[k], crossings[k + 1]);
    }
    return intervals;
}

std::string wigner_to_csv(const WignerGrid &w) {
    std::string out = "x_min,x_max,p_min,p_max,n_x,n_p\n";
    out += format_real(w.bounds.x_min) + ',' + format_real(w.bounds.x_max) + ',' + format_real(w.bounds.p_min) + ',' +
           format_real(w.bounds.p_max) + ',' + std::to_string(w.n_x) + ',' + std::to_string(w.n_p) + '\n';
    for (std::size_t i = 0; i < w.n_x; ++i) {
        for (std::size_t j = 0; j < w.n_p; ++j) {
            if (j > 0) {
                out += ',';
            }
            out += format_real(w.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string support_region_to_csv(const SupportRegion &region) {
    std::string out = "x,p\n";
    for (const PhasePoint &point : region.boundary) {
        out += format_real(point.x) + ',' + format_real(point.p) + '\n';
    }
    return out;
}

}  // namespace cvcat
