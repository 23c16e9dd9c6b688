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


#include "cvcat/analysis.h"

#include <gsl/gsl_multimin.h>

#include <cmath>
#include <memory>

#include "cvcat/errors.h"
#include "cvcat/io.h"

namespace cvcat {

namespace {

struct FitContext {
    const WaveFunction *state;
    CoherentConvention convention;
};

double negative_fidelity(const gsl_vector *v, void *params) {
    const auto *context = static_cast<const FitContext *>(params);
    double p_plus = std::abs(gsl_vector_get(v, 0));
    double theta = gsl_vector_get(v, 1);
    try {
        WaveFunction cat = make_ideal_cat(CatParams::from_momentum(p_plus, theta), context->state->grid(), context->convention);
        return -std::norm(overlap(*context->state, cat));
    } catch (const DomainError &) {
        return 0.0;
    }
}

}  // namespace

double fidelity(const WaveFunction &a, const WaveFunction &b) {
    for (const WaveFunction *psi : {&a, &b}) {
        if (!psi->is_normalized()) {
            throw DomainError(
                "fidelity: state '" + psi->label() + "' is not normalized (norm^2 = " +
                format_real(psi->norm_squared()) + ")");
        }
    }
    if (a.grid() == b.grid()) {
        return std::norm(overlap(a, b));
    }
    return std::norm(overlap(a, resample_sinc(b, a.grid())));
}

double db_to_s(double db) {
    if (!(db >= 0) || !std::isfinite(db)) {
        throw DomainError("db_to_s: need finite db >= 0, got " + format_real(db));
    }
    return std::pow(10.0, -db / 20.0);
}

double s_to_db(double s) {
    if (!(s > 0) || !std::isfinite(s)) {
        throw DomainError("s_to_db: need finite s > 0");
    }
    return 20.0 * std::log10(1.0 / s);
}

double efficiency_score(double f_cat, double probability_density) {
    return f_cat * probability_density;
}

CatFit optimize_cat(const WaveFunction &state, const CatParams &start, CoherentConvention convention, int max_iterations) {
    if (!state.is_normalized()) {
        throw DomainError("optimize_cat: state is not normalized");
    }
    FitContext context{&state, convention};
    gsl_multimin_function objective{&negative_fidelity, 2, &context};

    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(2), &gsl_vector_free);
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> steps(gsl_vector_alloc(2), &gsl_vector_free);
    gsl_vector_set(x.get(), 0, start.p_plus);
    gsl_vector_set(x.get(), 1, start.theta);
    gsl_vector_set(steps.get(), 0, 0.1);
    gsl_vector_set(steps.get(), 1, 0.1);

    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> minimizer(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2), &gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(minimizer.get(), &objective, x.get(), steps.get());

    int iteration = 0;
    while (iteration < max_iterations) {
        ++iteration;
        if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer.get()), 1e-9) == GSL_SUCCESS) {
            break;
        }
    }
    const gsl_vector *best = gsl_multimin_fminimizer_x(minimizer.get());
    CatParams cat = CatParams::from_momentum(std::abs(gsl_vector_get(best, 0)), gsl_vector_get(best, 1));
    return {cat, -gsl_multimin_fminimizer_minimum(minimizer.get()), iteration};
}

}  // namespace cvcat
