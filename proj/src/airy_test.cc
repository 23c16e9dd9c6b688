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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "cvcat/errors.h"
#include "cvcat/quadrature.h"

namespace cvcat {
namespace {

// Ai(z) = (1/pi) Re[e^{i pi/6} int_0^inf exp(-u^3/3 - z u/2 + i sqrt3 z u/2) du],
// the cubic-phase integral rotated onto the ray of steepest descent.
double airy_by_quadrature(double z) {
    const std::complex<double> rotation = std::polar(1.0, std::numbers::pi / 6);
    ComplexIntegrand f = [z](double u) {
        double decay = -u * u * u / 3.0 - 0.5 * z * u;
        double phase = 0.5 * std::numbers::sqrt3 * z * u;
        return std::exp(decay) * std::complex<double>(std::cos(phase), std::sin(phase));
    };
    QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-14;
    return (rotation * integrate_adaptive(f, 0.0, 12.0, spec).value).real() / std::numbers::pi;
}

TEST(AiryAi, OriginMatchesGammaFunctionClosedForm) {
    double expected = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    EXPECT_NEAR(airy_ai(0.0), expected, 1e-15);
    EXPECT_NEAR(airy_ai(0.0), 0.3550280539, 1e-10);
    EXPECT_DOUBLE_EQ(airy_ai(0.0), kAiryAiAtZero);
}

TEST(AiryAi, PositiveAndStrictlyDecreasingOnPositiveAxis) {
    double previous = airy_ai(0.0);
    for (double z = 0.05; z <= 40.0; z += 0.05) {
        double value = airy_ai(z);
        ASSERT_GT(value, 0.0) << "z=" << z;
        ASSERT_LT(value, previous) << "z=" << z;
        previous = value;
    }
}

TEST(AiryAi, AgreesWithRotatedIntegral) {
    for (double z : {-6.0, -2.0, 0.0, 1.0, 2.5, 4.0}) {
        EXPECT_NEAR(airy_ai(z), airy_by_quadrature(z), 1e-10) << "z=" << z;
    }
}

TEST(AiryAi, MatchesHighPrecisionReferenceValues) {
    struct Case {
        double z;
        double value;
    };
    const Case cases[] = {
        {-20.0, -0.17640612707798468959},
        {-9.9, 0.1362350264479797514},
        {-5.0, 0.35076100902411431979},
        {-1.0, 0.5355608832923521188},
        {0.5, 0.23169360648083348977},
        {1.0, 0.13529241631288141552},
        {2.0, 0.034924130423274379135},
        {3.0, 0.0065911393574607191443},
        {7.0, 7.4921288639971670808e-7},
        {10.5, 2.2022745192834016435e-11},
    };
    for (const Case &c : cases) {
        EXPECT_NEAR(airy_ai(c.z), c.value, 1e-14) << "z=" << c.z;
        EXPECT_NEAR(airy_ai(c.z) / c.value, 1.0, 1e-12) << "z=" << c.z;
    }
    EXPECT_NEAR(airy_ai(-2.3381074104597670385), 0.0, 1e-15);
}

TEST(AiryAi, DifferentialEquationResidual) {
    const double h = 1e-3;
    for (int k = -100; k <= 50; ++k) {
        double z = 0.1 * k;
        double second = (airy_ai(z + h) - 2.0 * airy_ai(z) + airy_ai(z - h)) / (h * h);
        double z_ai = z * airy_ai(z);
        EXPECT_LE(std::abs(second - z_ai), 1e-6 * std::max(1.0, std::abs(z_ai))) << "z=" << z;
    }
}

TEST(AiryAi, ContinuousAcrossInternalSeams) {
    for (double seam : {-10.375, 2.0}) {
        double below = airy_ai(std::nextafter(seam, -100.0));
        double above = airy_ai(std::nextafter(seam, 100.0));
        EXPECT_NEAR(below, above, 1e-15 + 1e-13 * std::abs(above)) << "seam " << seam;
    }
}

TEST(AiryAi, UnderflowsOnlyBelowNormalRange) {
    EXPECT_GT(airy_ai(100.0), std::numeric_limits<double>::min());
    EXPECT_GE(airy_ai(200.0), 0.0);
    EXPECT_TRUE(std::isfinite(airy_ai(-1e6)));
}

TEST(AiryAi, RejectsNonFinite) {
    EXPECT_THROW(airy_ai(std::numeric_limits<double>::quiet_NaN()), DomainError);
    EXPECT_THROW(airy_ai(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(AiryAiScaled, OneAtOrigin) {
    EXPECT_NEAR(airy_ai_scaled(0.0), 0.3550280539, 1e-10);
}

TEST(AiryAiScaled, UnscalesToPlainAi) {
    for (double z = 0.0; z <= 30.0; z += 0.25) {
        double rebuilt = airy_ai_scaled(z) * std::exp(-2.0 / 3.0 * z * std::sqrt(z));
        EXPECT_NEAR(rebuilt / airy_ai(z), 1.0, 1e-12) << "z=" << z;
    }
    for (double z : {1.0, 10.0, 100.0}) {
        double rebuilt = airy_ai_scaled(z) * std::exp(-2.0 / 3.0 * z * std::sqrt(z));
        EXPECT_NEAR(rebuilt / airy_ai(z), 1.0, 1e-12) << "z=" << z;
    }
}

TEST(AiryAiScaled, MatchesReferenceAndAsymptote) {
    EXPECT_NEAR(airy_ai_scaled(2.0), 0.23016491865251160594, 1e-14);
    EXPECT_NEAR(airy_ai_scaled(5.0), 0.18700211893594342704, 1e-14);
    EXPECT_NEAR(airy_ai_scaled(30.0), 0.12045939663973668389, 1e-14);
    EXPECT_NEAR(airy_ai_scaled(100.0), 0.089196920936330413175, 1e-14);
    double leading = 1.0 / (2.0 * std::sqrt(std::numbers::pi) * std::pow(100.0, 0.25));
    EXPECT_NEAR(airy_ai_scaled(100.0) / leading, 1.0, 1e-3);
}

TEST(AiryAiScaled, FiniteForHugeArguments) {
    for (double z : {1e3, 1e6, 1e12, 1e300}) {
        double value = airy_ai_scaled(z);
        EXPECT_TRUE(std::isfinite(value));
        EXPECT_GT(value, 0.0);
    }
}

TEST(AiryAiScaled, RejectsNegativeArgument) {
    EXPECT_THROW(airy_ai_scaled(-1e-9), DomainError);
    EXPECT_THROW(airy_ai_scaled(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(AiryAi, BitIdenticalOnRepeat) {
    for (double z : {-7.3, 0.1, 5.5}) {
        EXPECT_EQ(airy_ai(z), airy_ai(z));
    }
}

}  // namespace
}  // namespace cvcat
