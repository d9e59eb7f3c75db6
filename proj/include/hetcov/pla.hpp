// hetcov - coverage and rate analysis for multi-tier cellular networks
// Copyright (C) 2026 The hetcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HETCOV_PLA_HPP
#define HETCOV_PLA_HPP

namespace hetcov {

/// Piecewise-linear surrogate of f(x) = exp(-x^(alpha/2)):
///
///     1          x <= x1
///     m x + c    x1 < x < x2
///     0          x >= x2
///
/// The line is the tangent of f at its inflection point x0.
struct PlaCoefficients {
    double alpha = 0.0;
    double m = 0.0;  ///< slope, negative
    double c = 0.0;  ///< intercept
    double x0 = 0.0; ///< inflection point of f
    double x1 = 0.0; ///< left knot, m x1 + c = 1
    double x2 = 0.0; ///< right knot, m x2 + c = 0

    double operator()(double x) const noexcept;
};

/// Throws std::domain_error for alpha <= 2.
PlaCoefficients pla_coefficients(double alpha);

// Both kernels below approximate / evaluate
//
//     int_0^inf exp(-V t - U t^(alpha/2)) t^power dt,
//
// where `power` is the real exponent (n/2 in the half-integer notation).
// They throw std::domain_error unless U > 0, V > 0, power >= 0, alpha > 2.

/// Closed form obtained by replacing exp(-y^(alpha/2)) with the PLA
/// surrogate after the substitution y = U^(2/alpha) t.
double approx_gamma_kernel_integral(double U, double V, double power, double alpha);

/// Adaptive quadrature of the same integral, truncated where
/// V t + U t^(alpha/2) reaches 745. Relative tolerance 1e-10; throws
/// QuadratureError when it cannot get there.
double exact_gamma_kernel_integral(double U, double V, double power, double alpha);

} // namespace hetcov

#endif
