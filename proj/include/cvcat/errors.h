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

#ifndef CVCAT_ERRORS_H
#define CVCAT_ERRORS_H

#include <complex>
#include <stdexcept>
#include <string>

namespace cvcat {

/// Invalid argument or state outside an operation's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The measurement outcome has (numerically) zero probability, so the
/// conditional state does not exist.
struct ZeroProbabilityError : DomainError {
    using DomainError::DomainError;
};

/// A numerical procedure exhausted its budget before meeting tolerance.
/// Carries the best estimate reached so callers can still inspect it.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string &what, std::complex<double> best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate(best_estimate), error_estimate(error_estimate) {
    }
    std::complex<double> best_estimate;
    double error_estimate;
};

}  // namespace cvcat

#endif
