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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvcat/errors.h"
#include "cvcat/gate.h"
#include "cvcat/quadrature.h"
#include "cvcat/states.h"

namespace cvcat {
namespace {

const double kInvPi = 1.0 / std::numbers::pi;
const double k14dB = std::pow(10.0, -14.0 / 20.0);

// Cubic phase state Wigner function in closed form: inserting the state into
// the Wigner integral leaves a Gaussian-damped cubic-phase integral,
// W = (s / pi^(3/2)) e^{-s^2 x^2} int dy e^{-s^2 y^2} e^{i y (2p - 6 gamma x^2) - 2 i gamma y^3}.
double cubic_wigner(double x, double p, double gamma, double s) {
    QuadratureSpec spec = QuadratureSpec::for_gaussian_envelope(std::numbers::sqrt2 * s);
    auto integral = integrate_oscillatory_gaussian(2.0 * p - 6.0 * gamma * x * x, -2.0 * gamma, std::numbers::sqrt2 * s, spec);
    return s / std::pow(std::numbers::pi, 1.5) * std::exp(-s * s * x * x) * integral.real();
}

WignerGrid vacuum_wigner(std::size_t n = 129) {
    return wigner_transform(make_vacuum(Grid::symmetric(10.0, 1024)), {-6.0, 6.0, -6.0, 6.0}, n, n);
}

WaveFunction high_fidelity_output() {
    return apply_gate(make_vacuum(default_grid(std::sqrt(10.0))), {0.5, k14dB, 15.0}).state;
}

TEST(Wigner, VacuumIsGaussian) {
    WignerGrid w = vacuum_wigner();
    EXPECT_NEAR(w.at(64, 64), kInvPi, 1e-6);
    for (std::size_t i = 0; i < w.n_x; i += 7) {
        for (std::size_t j = 0; j < w.n_p; j += 5) {
            double expected = kInvPi * std::exp(-w.x(i) * w.x(i) - w.p(j) * w.p(j));
            ASSERT_NEAR(w.at(i, j), expected, 1e-6) << w.x(i) << " " << w.p(j);
        }
    }
}

TEST(Wigner, InvariantsAndPurityForPureStates) {
    std::vector<std::pair<WaveFunction, PhaseSpaceBounds>> cases = {
        {make_vacuum(Grid::symmetric(10.0, 1024)), {-7.0, 7.0, -7.0, 7.0}},
        {make_ideal_cat(CatParams::from_momentum(2.5, 0.4), default_grid(2.5)), {-8.0, 8.0, -9.0, 9.0}},
        {high_fidelity_output(), {-9.0, 9.0, -10.0, 10.0}},
    };
    for (const auto &[state, bounds] : cases) {
        WignerGrid w = wigner_transform(state, bounds);
        WignerCheck check = check_wigner(w);
        EXPECT_TRUE(check.ok()) << state.label() << " mass " << check.mass << " max " << check.max_abs;
        EXPECT_NEAR(w.purity(), 1.0, 1e-3) << state.label();
    }
}

TEST(Wigner, CoordinateMarginalIsDensity) {
    for (const WaveFunction &state : {make_ideal_cat(CatParams::from_momentum(2.0, 0.7), Grid::symmetric(10.0, 1001)),
                                      make_cubic_phase_state(0.1, 0.8, Grid::symmetric(10.0, 1001))}) {
        // Wigner x nodes coincide with every fourth state node.
        WignerGrid w = wigner_transform(state, {-10.0, 10.0, -14.0, 14.0}, 251, 401);
        std::vector<double> marginal = w.coordinate_marginal();
        for (std::size_t i = 0; i < w.n_x; ++i) {
            ASSERT_NEAR(marginal[i], std::norm(state[4 * i]), 1e-4) << state.label() << " x=" << w.x(i);
        }
    }
}

TEST(Wigner, CubicStateMatchesClosedForm) {
    double gamma = 0.1;
    double s = 1.0 / 1.78;
    WaveFunction state = make_cubic_phase_state(gamma, s, Grid::symmetric(14.0, 2048));
    WignerGrid w = wigner_transform(state, {-12.0, 12.0, -6.0, 30.0}, 97, 145);
    for (std::size_t i = 4; i < w.n_x; i += 9) {
        for (std::size_t j = 2; j < w.n_p; j += 11) {
            ASSERT_NEAR(w.at(i, j), cubic_wigner(w.x(i), w.p(j), gamma, s), 1e-6) << w.x(i) << " " << w.p(j);
        }
    }
}

TEST(Wigner, HighFidelityCatHasLobesAndFringes) {
    WignerGrid w = wigner_transform(high_fidelity_output(), {-8.0, 8.0, -8.0, 8.0}, 161, 161);
    EXPECT_LT(w.min_value(), -0.05);
    // Lobes: largest values sit near p = +-sqrt(10) on the x = 0 column.
    std::size_t centre = 80;
    std::size_t upper = 80;
    std::size_t lower = 0;
    for (std::size_t j = 0; j < w.n_p; ++j) {
        if (w.p(j) > 0 && w.at(centre, j) > w.at(centre, upper)) {
            upper = j;
        }
        if (w.p(j) < 0 && w.at(centre, j) > w.at(centre, lower)) {
            lower = j;
        }
    }
    EXPECT_NEAR(w.p(upper), std::sqrt(10.0), 0.3);
    EXPECT_NEAR(w.p(lower), -std::sqrt(10.0), 0.3);
    // Each lobe carries half the mass of a coherent state, peak 1/(2 pi).
    EXPECT_NEAR(w.at(centre, upper), 0.5 / std::numbers::pi, 0.02);
    // Fringes: sign changes along x through the origin.
    int sign_changes = 0;
    for (std::size_t i = 60; i < 100; ++i) {
        if ((w.at(i, centre) < 0) != (w.at(i + 1, centre) < 0)) {
            ++sign_changes;
        }
    }
    EXPECT_GE(sign_changes, 4);
}

TEST(Wigner, RejectsTightBoundsAndUnnormalizedStates) {
    WaveFunction vacuum = make_vacuum(Grid::symmetric(10.0, 1024));
    EXPECT_THROW(wigner_transform(vacuum, {-3.0, 3.0, -6.0, 6.0}), DomainError);
    std::vector<std::complex<double>> doubled(vacuum.amplitudes().begin(), vacuum.amplitudes().end());
    for (auto &a : doubled) {
        a *= 2.0;
    }
    EXPECT_THROW(wigner_transform(WaveFunction(vacuum.grid(), doubled), {-6.0, 6.0, -6.0, 6.0}), DomainError);
    EXPECT_THROW(wigner_transform(vacuum, {-6.0, 6.0, -6.0, 6.0}, 1, 10), DomainError);
}

TEST(WignerLogNegativity, ZeroForGaussianStates) {
    EXPECT_NEAR(wigner_log_negativity(vacuum_wigner()), 0.0, 1e-3);
    WaveFunction squeezed = make_squeezed_vacuum(0.5, Grid::symmetric(20.0, 2048));
    WignerGrid w = wigner_transform(squeezed, {-14.0, 14.0, -4.0, 4.0}, 201, 201);
    EXPECT_LE(wigner_log_negativity(w), 1e-3);
}

TEST(WignerLogNegativity, CatSelfConvergent) {
    WaveFunction cat = make_ideal_cat(CatParams::from_momentum(std::sqrt(10.0), std::numbers::pi / 4), default_grid(std::sqrt(10.0)));
    PhaseSpaceBounds bounds{-8.0, 8.0, -10.0, 10.0};
    double coarse = wigner_log_negativity(wigner_transform(cat, bounds, 512, 512));
    double fine = wigner_log_negativity(wigner_transform(cat, bounds, 1023, 1023));
    EXPECT_GT(coarse, 0.1);
    EXPECT_NEAR(coarse, fine, 1e-3);
}

TEST(SemiclassicalShear, FixedLineAndDirectValue) {
    EXPECT_EQ(semiclassical_shear(0.0, 1.7, 0.4), (PhasePoint{0.0, 1.7}));
    PhasePoint moved = semiclassical_shear(3.0, 0.0, 0.1);
    EXPECT_EQ(moved.x, 3.0);
    EXPECT_NEAR(moved.p, 2.7, 1e-15);
}

TEST(SemiclassicalShear, UnitJacobianAndInverse) {
    const double h = 1e-5;
    for (double x : {-2.0, 0.3, 4.0}) {
        for (double y : {-1.0, 2.0}) {
            PhasePoint dx_plus = semiclassical_shear(x + h, y, 0.3);
            PhasePoint dx_minus = semiclassical_shear(x - h, y, 0.3);
            PhasePoint dy_plus = semiclassical_shear(x, y + h, 0.3);
            PhasePoint dy_minus = semiclassical_shear(x, y - h, 0.3);
            double a = (dx_plus.x - dx_minus.x) / (2 * h);
            double b = (dy_plus.x - dy_minus.x) / (2 * h);
            double c = (dx_plus.p - dx_minus.p) / (2 * h);
            double d = (dy_plus.p - dy_minus.p) / (2 * h);
            EXPECT_NEAR(a * d - b * c, 1.0, 1e-8);
            PhasePoint forward = semiclassical_shear(x, y, 0.3);
            PhasePoint back = semiclassical_shear(forward.x, forward.p, -0.3);
            EXPECT_NEAR(back.x, x, 1e-15);
            EXPECT_NEAR(back.p, y, 4e-15);
        }
    }
}

TEST(SupportRegion, UnshearedEllipse) {
    double s = 0.5;
    SupportRegion region = build_support_region(s, 0.0, 2.0, 64);
    ASSERT_EQ(region.boundary.size(), 65u);
    EXPECT_EQ(region.boundary.front(), region.boundary.back());
    double a = 2.0 / (std::numbers::sqrt2 * s);
    double b = 2.0 * s / std::numbers::sqrt2;
    for (const PhasePoint &point : region.boundary) {
        EXPECT_NEAR(point.x * point.x / (a * a) + point.p * point.p / (b * b), 1.0, 1e-12);
    }
    EXPECT_NEAR(region.boundary[0].x, a, 1e-12);
    EXPECT_NEAR(region.boundary[16].p, b, 1e-12);
}

TEST(SupportRegion, ShearPreservesArea) {
    double s = k14dB;
    double flat = polygon_area(build_support_region(s, 0.0).boundary);
    double sheared = polygon_area(build_support_region(s, 0.1).boundary);
    EXPECT_NEAR(sheared, flat, 1e-6);
    EXPECT_NEAR(flat, std::numbers::pi * 2.0, 1e-3);
}

TEST(SupportRegion, HorizontalCutAtOutcomeGivesTwoIntervals) {
    SupportRegion region = build_support_region(k14dB, 0.1);
    auto intervals = horizontal_intersections(region, 3.0);
    ASSERT_EQ(intervals.size(), 2u);
    EXPECT_LT(intervals[0].second, intervals[1].first);
    EXPECT_LT(intervals[0].second, 0.0);
    EXPECT_GT(intervals[1].first, 0.0);
    EXPECT_EQ(horizontal_intersections(build_support_region(k14dB, 0.0), 3.0).size(), 0u);
}

TEST(SupportRegion, RejectsBadArguments) {
    EXPECT_THROW(build_support_region(0.0, 0.1), DomainError);
    EXPECT_THROW(build_support_region(1.0, 0.1, 2.0, 31), DomainError);
    EXPECT_THROW(build_support_region(1.0, 0.1, -1.0), DomainError);
}

TEST(Serialization, WignerCsvLayout) {
    WignerGrid w = vacuum_wigner(16);
    std::string csv = wigner_to_csv(w);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "x_min,x_max,p_min,p_max,n_x,n_p");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 18);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), ','), 5 + 5 + 16 * 15);
}

TEST(Serialization, SupportRegionCsv) {
    std::string csv = support_region_to_csv(build_support_region(1.0, 0.1, 2.0, 32));
    EXPECT_EQ(csv.substr(0, 4), "x,p\n");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 34);
}

}  // namespace
}  // namespace cvcat
