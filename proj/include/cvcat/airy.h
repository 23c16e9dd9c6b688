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

#ifndef CVCAT_AIRY_H
#define CVCAT_AIRY_H

namespace cvcat {

/// Ai(0) = 3^(-2/3) / Gamma(2/3).
inline constexpr double kAiryAiAtZero = 0.35502805388781723926;

/// Airy function Ai(z) for real z.
///
/// Accurate to a few units of 1e-16 absolute on the oscillatory branch
/// down to z ~ -10 and to a few ulps relative on the positive axis. For
/// large positive z the result underflows to zero once Ai(z) drops below
/// the smallest normal double.
///
/// Evaluation regions:
///   z < -10.375         oscillatory asymptotic series (zeta > 22)
///   -10.375 <= z <= 2   Taylor re-expansion about tabulated nodes that are
///                       continued from the Maclaurin data at z = 0
///   z > 2               airy_ai_scaled(z) * exp(-(2/3) z^(3/2))
///
/// Throws DomainError on non-finite input.
double airy_ai(double z);

/// Exponentially scaled Ai(z) * exp((2/3) z^(3/2)) for z >= 0.
///
/// Finite for every representable z >= 0 and behaves like
/// 1 / (2 sqrt(pi) z^(1/4)) for large z. On z > 2 it is evaluated from
///   Ai(z) e^zeta = (1/pi) sqrt(z/3) * int_0^inf exp(-zeta (cosh t - 1)) cosh(t/3) dt,
/// whose trapezoid sum converges exponentially in the step.
///
/// Throws DomainError for z < 0 or non-finite z.
double airy_ai_scaled(double z);

}  // namespace cvcat

#endif
