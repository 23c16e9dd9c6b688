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

#include "cvcat/wavefunction.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "cvcat/errors.h"

namespace cvcat {

using Complex = std::complex<double>;

std::vector<double> Grid::nodes() const {
    std::vector<double> result(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        result[i] = node(i);
    }
    return result;
}

void Grid::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        throw DomainError("Grid: need finite x_min < x_max");
    }
    if (n_points < kMinPoints) {
        throw DomainError("Grid: need n_points >= " + std::to_string(kMinPoints));
    }
}

Grid Grid::symmetric(double half_width, std::size_t n_points) {
    Grid grid{-half_width, half_width, n_points};
    grid.validate();
    return grid;
}

WaveFunction::WaveFunction(Grid grid, std::vector<Complex> amplitudes, std::string label)
    : grid_(grid), amplitudes_(std::move(amplitudes)), label_(std::move(label)) {
    grid_.validate();
    if (amplitudes_.size() != grid_.n_points) {
        throw DomainError(
            "WaveFunction: " + std::to_string(amplitudes_.size()) + " amplitudes for a grid of " +
            std::to_string(grid_.n_points) + " points");
    }
    for (const Complex &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("WaveFunction: non-finite amplitude in '" + label_ + "'");
        }
    }
}

double WaveFunction::norm_squared() const {
    return trapezoid(density(), grid_.spacing());
}

bool WaveFunction::is_normalized() const {
    return std::abs(norm_squared() - 1.0) <= kNormTolerance;
}

WaveFunction WaveFunction::normalized() const {
    double norm2 = norm_squared();
    if (!(norm2 > 0)) {
        throw DomainError("WaveFunction::normalized: zero state '" + label_ + "'");
    }
    double scale = 1.0 / std::sqrt(norm2);
    std::vector<Complex> scaled(amplitudes_.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = amplitudes_[i] * scale;
    }
    return WaveFunction(grid_, std::move(scaled), label_);
}

WaveFunction WaveFunction::relabeled(std::string label) const {
    return WaveFunction(grid_, amplitudes_, std::move(label));
}

std::vector<double> WaveFunction::density() const {
    std::vector<double> result(amplitudes_.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
        result[i] = std::norm(amplitudes_[i]);
    }
    return result;
}

double WaveFunction::edge_density() const {
    return std::max(std::norm(amplitudes_.front()), std::norm(amplitudes_.back()));
}

double trapezoid(std::span<const double> samples, double spacing) {
    if (samples.empty()) {
        return 0.0;
    }
    long double sum = 0.5L * (samples.front() + samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        sum += samples[i];
    }
    return static_cast<double>(sum * spacing);
}

Complex trapezoid(std::span<const Complex> samples, double spacing) {
    if (samples.empty()) {
        return 0.0;
    }
    long double re = 0.5L * (samples.front().real() + samples.back().real());
    long double im = 0.5L * (samples.front().imag() + samples.back().imag());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        re += samples[i].real();
        im += samples[i].imag();
    }
    return {static_cast<double>(re * spacing), static_cast<double>(im * spacing)};
}

Complex overlap(const WaveFunction &a, const WaveFunction &b) {
    if (!(a.grid() == b.grid())) {
        throw DomainError("overlap: states '" + a.label() + "' and '" + b.label() + "' live on different grids");
    }
    std::vector<Complex> products(a.size());
    for (std::size_t i = 0; i < products.size(); ++i) {
        products[i] = std::conj(a[i]) * b[i];
    }
    return trapezoid(products, a.grid().spacing());
}

double phase_aligned_distance(const WaveFunction &a, const WaveFunction &b) {
    Complex ba = overlap(b, a);
    Complex phase = std::abs(ba) > 0 ? ba / std::abs(ba) : Complex(1.0);
    std::vector<double> gaps(a.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        gaps[i] = std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(trapezoid(gaps, a.grid().spacing()));
}

double coordinate_moment(const WaveFunction &psi, int order) {
    std::vector<double> weighted = psi.density();
    for (std::size_t i = 0; i < weighted.size(); ++i) {
        weighted[i] *= std::pow(psi.grid().node(i), order);
    }
    return trapezoid(weighted, psi.grid().spacing());
}

WaveFunction resample_sinc(const WaveFunction &psi, const Grid &target) {
    target.validate();
    const Grid &source = psi.grid();
    double dx = source.spacing();
    std::size_t n = psi.size();
    std::vector<Complex> out(target.n_points);
    for (std::size_t j = 0; j < target.n_points; ++j) {
        double x = target.node(j);
        if (x < source.x_min - 0.5 * dx || x > source.x_max + 0.5 * dx) {
            continue;
        }
        double u = (x - source.x_min) / dx;
        double nearest = std::round(u);
        if (std::abs(u - nearest) < 1e-12) {
            auto k = static_cast<std::size_t>(std::clamp(nearest, 0.0, static_cast<double>(n - 1)));
            out[j] = psi[k];
            continue;
        }
        // sinc(u - k) = (-1)^k sin(pi u) / (pi (u - k))
        Complex sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            double term = 1.0 / (u - static_cast<double>(k));
            sum += (k % 2 == 0 ? term : -term) * psi[k];
        }
        out[j] = sum * (std::sin(std::numbers::pi * u) / std::numbers::pi);
    }
    return WaveFunction(target, std::move(out), psi.label());
}

WaveFunction to_momentum(const WaveFunction &psi, const Grid &momentum_grid) {
    momentum_grid.validate();
    const Grid &grid = psi.grid();
    double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    std::vector<Complex> out(momentum_grid.n_points);
    std::vector<Complex> integrand(psi.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        double p = momentum_grid.node(j);
        for (std::size_t i = 0; i < psi.size(); ++i) {
            double phase = -p * grid.node(i);
            integrand[i] = Complex(std::cos(phase), std::sin(phase)) * psi[i];
        }
        out[j] = scale * trapezoid(integrand, grid.spacing());
    }
    return WaveFunction(momentum_grid, std::move(out), psi.label() + " (momentum)");
}

nlohmann::json to_json(const WaveFunction &psi) {
    std::vector<double> re(psi.size());
    std::vector<double> im(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        re[i] = psi[i].real();
        im[i] = psi[i].imag();
    }
    return {
        {"x_min", psi.grid().x_min},
        {"x_max", psi.grid().x_max},
        {"n_points", psi.grid().n_points},
        {"re", re},
        {"im", im},
        {"label", psi.label()},
    };
}

WaveFunction wavefunction_from_json(const nlohmann::json &j) {
    try {
        Grid grid{j.at("x_min").get<double>(), j.at("x_max").get<double>(), j.at("n_points").get<std::size_t>()};
        auto re = j.at("re").get<std::vector<double>>();
        auto im = j.at("im").get<std::vector<double>>();
        if (re.size() != im.size()) {
            throw DomainError("wavefunction_from_json: re[] and im[] differ in length");
        }
        std::vector<Complex> amplitudes(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            amplitudes[i] = {re[i], im[i]};
        }
        return WaveFunction(grid, std::move(amplitudes), j.value("label", std::string{}));
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("wavefunction_from_json: ") + e.what());
    }
}

}  // namespace cvcat
