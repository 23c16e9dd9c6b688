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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cvcat/errors.h"
#include "cvcat/gate.h"
#include "cvcat/sweep.h"

namespace cvcat {
namespace {

using Complex = std::complex<double>;

WaveFunction rotated(const WaveFunction &psi, double phase) {
    std::vector<Complex> out(psi.amplitudes().begin(), psi.amplitudes().end());
    for (Complex &a : out) {
        a *= std::polar(1.0, phase);
    }
    return WaveFunction(psi.grid(), std::move(out), psi.label());
}

TEST(Fidelity, SelfOverlapIsOne) {
    WaveFunction cat = make_ideal_cat(CatParams::from_momentum(2.0, 0.3), default_grid(2.0));
    EXPECT_NEAR(fidelity(cat, cat), 1.0, 1e-9);
}

TEST(Fidelity, SymmetricAndPhaseBlind) {
    Grid grid = default_grid(std::sqrt(10.0));
    WaveFunction a = make_ideal_cat(CatParams::from_momentum(2.0, 0.3), grid);
    WaveFunction b = apply_gate(make_vacuum(grid), {0.1, 0.5, 3.0}).state;
    double f = fidelity(a, b);
    EXPECT_LE(std::abs(f - fidelity(b, a)), 1e-12);
    EXPECT_LE(std::abs(f - fidelity(rotated(a, 1.1), b)), 1e-12);
    EXPECT_LE(std::abs(f - fidelity(a, rotated(b, -2.3))), 1e-12);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + kFidelitySlack);
}

TEST(Fidelity, DisplacedVacuumOverlap) {
    // |<0| e^{i p x} |0>|^2 = e^{-p^2/2} for a momentum kick of p.
    Grid grid = Grid::symmetric(18.0, 4096);
    double f = fidelity(make_vacuum(grid), make_coherent_state(10.0, grid));
    EXPECT_LT(f, 1e-20);
    EXPECT_NEAR(f / std::exp(-50.0), 1.0, 1e-3);
}

TEST(Fidelity, ResamplesMismatchedGrids) {
    CatParams cat = CatParams::from_momentum(2.0, 0.3);
    WaveFunction fine = make_ideal_cat(cat, Grid::symmetric(11.0, 2048));
    WaveFunction coarse = make_ideal_cat(cat, Grid::symmetric(10.0, 801));
    EXPECT_NEAR(fidelity(fine, coarse), 1.0, 1e-9);
}

TEST(Fidelity, RequiresNormalizedInputs) {
    WaveFunction vacuum = make_vacuum(Grid::symmetric(10.0, 512));
    std::vector<Complex> half(vacuum.amplitudes().begin(), vacuum.amplitudes().end());
    for (Complex &a : half) {
        a *= 0.5;
    }
    EXPECT_THROW(fidelity(vacuum, WaveFunction(vacuum.grid(), half)), DomainError);
}

TEST(Decibels, ConversionAndRoundTrip) {
    EXPECT_EQ(db_to_s(0.0), 1.0);
    EXPECT_NEAR(1.0 / db_to_s(5.0), 1.7783, 1e-4);
    EXPECT_NEAR(1.0 / db_to_s(9.0), 2.818, 1e-3);
    EXPECT_NEAR(1.0 / db_to_s(14.0), 5.012, 1e-3);
    for (double db : {0.0, 0.5, 5.0, 14.0, 37.0}) {
        EXPECT_NEAR(20.0 * std::log10(1.0 / db_to_s(db)), db, 1e-12);
        EXPECT_NEAR(s_to_db(db_to_s(db)), db, 1e-12);
    }
    EXPECT_THROW(db_to_s(-1.0), DomainError);
    EXPECT_THROW(s_to_db(0.0), DomainError);
}

TEST(Efficiency, VanishesWithEitherFactor) {
    EXPECT_EQ(efficiency_score(0.0, 0.3), 0.0);
    EXPECT_EQ(efficiency_score(0.9, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(efficiency_score(0.5, 0.2), 0.1);
}

TEST(Efficiency, InteriorMaximumInSqueezing) {
    SweepSpec spec;
    spec.values = default_inverse_s_values();
    spec.fixed = {0.1, 1.0, 3.0};
    spec.threads = 1;
    std::vector<SweepRow> rows = run_sweep(spec);
    std::size_t best = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        ASSERT_TRUE(rows[k].error.empty()) << rows[k].error;
        if (rows[k].efficiency > rows[best].efficiency) {
            best = k;
        }
    }
    EXPECT_GT(best, 0u);
    EXPECT_LT(best + 1, rows.size());
}

TEST(OptimizeCat, NeverWorseThanStart) {
    GateParams params{0.1, 1.0 / 2.82, 3.0};
    WaveFunction input = make_vacuum(default_grid(std::sqrt(10.0)));
    WaveFunction out = apply_gate(input, params).state;
    CatParams start = cat_params_from_gate(params);
    double baseline = fidelity(out, make_ideal_cat(start, input.grid()));
    CatFit fit = optimize_cat(out, start);
    EXPECT_GE(fit.fidelity, baseline - 1e-12);
    EXPECT_LE(fit.fidelity, 1.0 + kFidelitySlack);
    EXPECT_NEAR(fidelity(out, make_ideal_cat(fit.cat, input.grid())), fit.fidelity, 1e-12);
}

}  // namespace
}  // namespace cvcat
