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

#include "cvcat/quadrature.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "cvcat/errors.h"

namespace cvcat {

namespace {

using Complex = std::complex<double>;

// Kronrod 15-point abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

// 6-point Gauss-Legendre on [-1, 1], positive half.
constexpr double kPanelNodes[3] = {
    0.238619186083196908630501721680711,
    0.661209386466264513661399595019906,
    0.932469514203152027812301554493995,
};
constexpr double kPanelWeights[3] = {
    0.467913934572691047389870343989551,
    0.360761573048138607569833513837716,
    0.171324492379170345040296142172732,
};

constexpr double kMaxPanelPhase = 0.5;

struct Segment {
    double a;
    double b;
    Complex value;
    double error;

    bool operator<(const Segment &other) const {
        return error < other.error;
    }
};

Segment gauss_kronrod_15(const ComplexIntegrand &f, double a, double b) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    Complex f_center = f(center);
    Complex kronrod = f_center * kKronrodWeights[7];
    Complex gauss = f_center * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        double dx = half * kKronrodNodes[j];
        Complex pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

double local_rate(double far, double delta, double gamma, double s) {
    return std::abs(delta) + 3.0 * std::abs(gamma) * far * far + s * s * far + s;
}

// Width of the panel starting at x, bounded by the rate at whichever end
// is farther from the origin. Shrinks monotonically to a fixed point.
double panel_width(double x, double delta, double gamma, double s) {
    double width = kMaxPanelPhase / local_rate(std::abs(x), delta, gamma, s);
    for (int iteration = 0; iteration < 64; ++iteration) {
        double far = std::max(std::abs(x), std::abs(x + width));
        double rate = local_rate(far, delta, gamma, s);
        if (width * rate <= kMaxPanelPhase * (1.0 + 1e-9)) {
            return width;
        }
        width = kMaxPanelPhase / rate;
    }
    return 0.5 * width;
}

template <typename T>
T pairwise_sum_impl(std::span<const T> values) {
    constexpr std::size_t kLeaf = 16;
    if (values.size() <= kLeaf) {
        T sum{};
        for (const T &v : values) {
            sum += v;
        }
        return sum;
    }
    std::size_t mid = values.size() / 2;
    return pairwise_sum_impl(values.first(mid)) + pairwise_sum_impl(values.subspan(mid));
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0) || max_subdivisions < 1 || !(truncation_radius > 0)) {
        throw DomainError("QuadratureSpec: abs_tol, rel_tol, truncation_radius must be > 0 and max_subdivisions >= 1");
    }
}

QuadratureSpec QuadratureSpec::for_gaussian_envelope(double s) {
    if (!(s > 0)) {
        throw DomainError("QuadratureSpec::for_gaussian_envelope: s must be > 0");
    }
    QuadratureSpec spec;
    spec.truncation_radius = 10.0 / s;
    return spec;
}

QuadratureResult integrate_adaptive(const ComplexIntegrand &f, double a, double b, const QuadratureSpec &spec) {
    spec.validate();
    if (std::isinf(a)) {
        a = a < 0 ? -spec.truncation_radius : spec.truncation_radius;
    }
    if (std::isinf(b)) {
        b = b < 0 ? -spec.truncation_radius : spec.truncation_radius;
    }
    if (!(a < b)) {
        throw DomainError("integrate_adaptive: need a < b");
    }

    std::priority_queue<Segment> heap;
    heap.push(gauss_kronrod_15(f, a, b));
    Complex total = heap.top().value;
    double total_error = heap.top().error;
    double min_width = 64 * std::numeric_limits<double>::epsilon() * (b - a);

    auto converged = [&] {
        return total_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    };
    while (!converged()) {
        if (heap.size() >= spec.max_subdivisions || heap.top().b - heap.top().a < min_width) {
            throw ConvergenceError(
                "integrate_adaptive: no convergence within " + std::to_string(spec.max_subdivisions) + " subdivisions",
                total,
                total_error);
        }
        Segment worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod_15(f, worst.a, mid);
        Segment right = gauss_kronrod_15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in interval order: the running total drifts with the update history.
    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(), [](const Segment &x, const Segment &y) {
        return x.a < y.a;
    });
    std::vector<Complex> values;
    values.reserve(segments.size());
    double error = 0;
    for (const Segment &segment : segments) {
        values.push_back(segment.value);
        error += segment.error;
    }
    return {pairwise_sum(values), error};
}

std::size_t oscillatory_panel_count(double delta, double gamma, double s, double truncation_radius) {
    std::size_t panels = 0;
    double x = -truncation_radius;
    while (x < truncation_radius) {
        x += panel_width(x, delta, gamma, s);
        ++panels;
    }
    return panels;
}

std::complex<double> integrate_oscillatory_gaussian(double delta, double gamma, double s, const QuadratureSpec &spec) {
    spec.validate();
    if (!(s > 0) || !std::isfinite(s)) {
        throw DomainError("integrate_oscillatory_gaussian: s must be finite and > 0");
    }
    if (!std::isfinite(delta) || !std::isfinite(gamma)) {
        throw DomainError("integrate_oscillatory_gaussian: delta and gamma must be finite");
    }
    double radius = spec.truncation_radius;
    double half_s2 = 0.5 * s * s;
    auto integrand = [&](double x) {
        double phase = x * (delta + gamma * x * x);
        return std::exp(-half_s2 * x * x) * Complex(std::cos(phase), std::sin(phase));
    };

    long double re = 0;
    long double im = 0;
    std::size_t panels = 0;
    double x = -radius;
    while (x < radius) {
        if (++panels > spec.max_subdivisions) {
            throw ConvergenceError(
                "integrate_oscillatory_gaussian: step control needs more than " +
                    std::to_string(spec.max_subdivisions) + " panels",
                Complex(static_cast<double>(re), static_cast<double>(im)),
                INFINITY);
        }
        double end = std::min(radius, x + panel_width(x, delta, gamma, s));
        double center = 0.5 * (x + end);
        double half = 0.5 * (end - x);
        Complex panel = 0;
        for (int j = 0; j < 3; ++j) {
            double dx = half * kPanelNodes[j];
            panel += kPanelWeights[j] * (integrand(center - dx) + integrand(center + dx));
        }
        panel *= half;
        re += panel.real();
        im += panel.imag();
        x = end;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
    return pairwise_sum_impl(values);
}

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values);
}

}  // namespace cvcat
