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

#ifndef CVCAT_QUADRATURE_H
#define CVCAT_QUADRATURE_H

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace cvcat {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_subdivisions = std::size_t{1} << 22;
    /// Infinite integration limits are replaced by +-truncation_radius.
    double truncation_radius = 10.0;

    /// Throws DomainError unless every field is positive.
    void validate() const;

    /// Default tolerances with the truncation radius 10/s used for integrands
    /// carrying the envelope exp(-(s x)^2 / 2); the envelope is below 2e-22 there.
    static QuadratureSpec for_gaussian_envelope(double s);
};

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
///
/// The interval with the largest error estimate |K15 - G7| is bisected
/// until the summed estimate is at most max(abs_tol, rel_tol * |value|).
/// Infinite limits are truncated to +-spec.truncation_radius.
///
/// Throws DomainError if a >= b, ConvergenceError (with the best estimate)
/// if max_subdivisions intervals are not enough.
QuadratureResult integrate_adaptive(const ComplexIntegrand &f, double a, double b, const QuadratureSpec &spec);

/// int dx exp(i x (delta + gamma x^2)) exp(-(s x)^2 / 2) over |x| <= truncation_radius.
///
/// Composite 6-point Gauss-Legendre panels, each sized so that the largest
/// local rate |delta| + 3|gamma| x^2 (plus the envelope's log-derivative)
/// times the panel width stays below 0.5 rad. Negative gamma is accepted;
/// the result obeys I(delta, -gamma) = conj(I(-delta, gamma)).
///
/// Throws DomainError for s <= 0, ConvergenceError if more than
/// max_subdivisions panels are needed.
std::complex<double> integrate_oscillatory_gaussian(double delta, double gamma, double s, const QuadratureSpec &spec);

/// Number of panels integrate_oscillatory_gaussian uses for these arguments.
std::size_t oscillatory_panel_count(double delta, double gamma, double s, double truncation_radius);

/// Pairwise (cascade) summation with a fixed split order, so results are
/// reproducible bit for bit and rounding grows like log(n).
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);
double pairwise_sum(std::span<const double> values);

}  // namespace cvcat

#endif
