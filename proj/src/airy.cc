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

#include "cvcat/airy.h"

#include <array>
#include <cmath>
#include <string>

#include "cvcat/errors.h"

namespace cvcat {

namespace {

using Real = long double;

constexpr Real kAi0 = 0.355028053887817239260063186004183176L;
constexpr Real kAiPrime0 = -0.258819403792806798405183560189203963L;
constexpr Real kPi = 3.141592653589793238462643383279502884L;

constexpr Real kNodeSpacing = 0.25L;
constexpr int kFirstNode = -42;  // z = -10.5
constexpr int kLastNode = 8;     // z = 2
constexpr int kNodeCount = kLastNode - kFirstNode + 1;

constexpr double kOscillatorySeam = -10.375;
constexpr double kIntegralSeam = 2.0;

struct AiryPair {
    Real value;
    Real derivative;
};

// Power series of a solution of y'' = z y about z0, given y(z0) and y'(z0).
// Coefficients obey (n+2)(n+1) a_{n+2} = z0 a_n + a_{n-1}.
AiryPair taylor_about(Real z0, AiryPair at_z0, Real t, bool want_derivative) {
    Real a_prev = 0;  // a_{n-1}
    Real a_n = at_z0.value;
    Real a_next = at_z0.derivative;
    Real t_pow = 1;  // t^n
    Real value = 0;
    Real derivative = 0;
    Real scale = std::fabs(at_z0.value) + std::fabs(at_z0.derivative) + 1e-30L;
    int quiet_terms = 0;
    for (int n = 0; n < 80; ++n) {
        Real term = a_n * t_pow;
        value += term;
        if (want_derivative) {
            derivative += (n + 1) * a_next * t_pow;
        }
        Real a_after = (z0 * a_n + a_prev) / ((n + 2) * (n + 1));
        a_prev = a_n;
        a_n = a_next;
        a_next = a_after;
        t_pow *= t;
        // a_n can vanish for isolated n (e.g. a_2 at z0 = 0), so require a run of tiny terms.
        if (std::fabs(a_n * t_pow) + std::fabs(a_next * t_pow * t) < 1e-24L * scale) {
            if (++quiet_terms >= 3) {
                break;
            }
        } else {
            quiet_terms = 0;
        }
    }
    return {value, derivative};
}

struct NodeTable {
    std::array<AiryPair, kNodeCount> nodes;

    NodeTable() {
        nodes[-kFirstNode] = {kAi0, kAiPrime0};
        // Continue outward from the Maclaurin data in fixed steps. On the
        // positive side the dominant Bi component amplifies rounding by at most
        // Bi(2)/Ai(2) ~ 1e2, far below long double resolution.
        for (int k = 1; k <= kLastNode; ++k) {
            Real z0 = (k - 1) * kNodeSpacing;
            nodes[k - kFirstNode] = taylor_about(z0, nodes[k - 1 - kFirstNode], kNodeSpacing, true);
        }
        for (int k = -1; k >= kFirstNode; --k) {
            Real z0 = (k + 1) * kNodeSpacing;
            nodes[k - kFirstNode] = taylor_about(z0, nodes[k + 1 - kFirstNode], -kNodeSpacing, true);
        }
    }
};

const NodeTable &node_table() {
    static const NodeTable table;
    return table;
}

double ai_from_nodes(double z) {
    long k = std::lround(z / static_cast<double>(kNodeSpacing));
    if (k < kFirstNode) {
        k = kFirstNode;
    }
    if (k > kLastNode) {
        k = kLastNode;
    }
    Real z0 = k * kNodeSpacing;
    Real t = static_cast<Real>(z) - z0;
    return static_cast<double>(taylor_about(z0, node_table().nodes[k - kFirstNode], t, false).value);
}

// Ai(-x) ~ pi^(-1/2) x^(-1/4) [cos(zeta - pi/4) P + sin(zeta - pi/4) Q] with
// u_k = (2k+1)(2k+3)...(6k-1) / (216^k k!).
double ai_oscillatory_asymptotic(double z) {
    Real x = -static_cast<Real>(z);
    Real zeta = (2.0L / 3.0L) * x * std::sqrt(x);
    Real p_sum = 0;
    Real q_sum = 0;
    Real u = 1;
    Real zeta_pow = 1;
    Real last_term = INFINITY;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            u *= static_cast<Real>((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / ((2 * k - 1) * 216.0L * k);
            zeta_pow *= zeta;
        }
        Real term = u / zeta_pow;
        if (term > last_term) {
            break;  // past the smallest term of the divergent series
        }
        last_term = term;
        Real sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            p_sum += sign * term;
        } else {
            q_sum += sign * term;
        }
        if (term < 1e-21L) {
            break;
        }
    }
    Real phase = zeta - kPi / 4;
    Real amplitude = 1 / (std::sqrt(kPi) * std::sqrt(std::sqrt(x)));
    return static_cast<double>(amplitude * (std::cos(phase) * p_sum + std::sin(phase) * q_sum));
}

// Trapezoid sum of the K_{1/3} integral; the integrand is even in t and
// analytic in a strip, so the error decays like exp(-const / step).
double ai_scaled_integral(double z) {
    Real zr = z;
    Real zeta = (2.0L / 3.0L) * zr * std::sqrt(zr);
    Real step = 0.2L;
    Real narrow = 0.5L / std::sqrt(zeta);
    if (narrow < step) {
        step = narrow;
    }
    Real sum = 0.5L;
    for (int k = 1; k < 100000; ++k) {
        Real t = k * step;
        Real half_sinh = std::sinh(t / 2);
        Real term = std::exp(-2 * zeta * half_sinh * half_sinh) * std::cosh(t / 3);
        sum += term;
        if (term < 1e-21L * sum) {
            break;
        }
    }
    return static_cast<double>(std::sqrt(zr / 3) / kPi * step * sum);
}

double scaling_exponent(double z) {
    return (2.0 / 3.0) * z * std::sqrt(z);
}

}  // namespace

double airy_ai(double z) {
    if (!std::isfinite(z)) {
        throw DomainError("airy_ai: argument must be finite, got " + std::to_string(z));
    }
    if (z < kOscillatorySeam) {
        return ai_oscillatory_asymptotic(z);
    }
    if (z <= kIntegralSeam) {
        return ai_from_nodes(z);
    }
    return ai_scaled_integral(z) * std::exp(-scaling_exponent(z));
}

double airy_ai_scaled(double z) {
    if (!std::isfinite(z) || z < 0) {
        throw DomainError("airy_ai_scaled: argument must be finite and >= 0, got " + std::to_string(z));
    }
    if (z <= kIntegralSeam) {
        return ai_from_nodes(z) * std::exp(scaling_exponent(z));
    }
    return ai_scaled_integral(z);
}

}  // namespace cvcat
