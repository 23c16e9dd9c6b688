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


#ifndef CVCAT_ANALYSIS_H
#define CVCAT_ANALYSIS_H

#include "cvcat/states.h"
#include "cvcat/wavefunction.h"

namespace cvcat {

/// Tolerance on F above 1 that still counts as a valid fidelity.
inline constexpr double kFidelitySlack = 1e-9;

/// |<a|b>|^2 by the trapezoidal overlap. If the grids differ, b is
/// sinc-resampled onto a's grid first.
///
/// Throws DomainError unless both states are normalized.
double fidelity(const WaveFunction &a, const WaveFunction &b);

/// s = 10^(-db/20). Throws DomainError for db < 0 or non-finite db.
double db_to_s(double db);
/// 20 log10(1/s). Throws DomainError for s <= 0.
double s_to_db(double s);

/// f_cat * probability_density: one admissible way to weigh a fidelity
/// by how often the outcome occurs.
double efficiency_score(double f_cat, double probability_density);

struct CatFit {
    CatParams cat;
    double fidelity;
    int iterations;
};

/// Local Nelder-Mead search over (p_plus, theta) maximizing the fidelity
/// between `state` and make_ideal_cat, started from `start`. This goes
/// beyond the fixed cat parameters the gate predicts and is off by default
/// everywhere it is exposed.
CatFit optimize_cat(
    const WaveFunction &state, const CatParams &start,
    CoherentConvention convention = CoherentConvention::kMomentumDisplacement, int max_iterations = 400);

}  // namespace cvcat

#endif
