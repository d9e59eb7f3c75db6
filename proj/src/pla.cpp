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

#include "hetcov/pla.hpp"

#include "hetcov/quadrature.hpp"
#include "hetcov/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetcov {

namespace {

// exp(-745) is the smallest positive double; nothing past it registers.
constexpr double underflow_exponent = 745.0;

void check_kernel_domain(double U, double V, double power, double alpha)
{
    if (!(U > 0.0) || !std::isfinite(U)) throw std::domain_error("gamma kernel: U must be positive");
    if (!(V > 0.0) || !std::isfinite(V)) throw std::domain_error("gamma kernel: V must be positive");
    if (!(power >= 0.0)) throw std::domain_error("gamma kernel: power must be non-negative");
    if (!(alpha > 2.0)) throw std::domain_error("gamma kernel: alpha must exceed 2");
}

} // namespace

double PlaCoefficients::operator()(double x) const noexcept
{
    if (x <= x1) return 1.0;
    if (x >= x2) return 0.0;
    return m * x + c;
}

PlaCoefficients pla_coefficients(double alpha)
{
    if (!(alpha > 2.0) || !std::isfinite(alpha))
        throw std::domain_error("pla_coefficients: alpha must exceed 2");
    const double half = alpha / 2.0;
    const double q = 1.0 - 2.0 / alpha;

    PlaCoefficients pla;
    pla.alpha = alpha;
    pla.x0 = std::pow(q, 2.0 / alpha);
    pla.m = -half * std::pow(q, q) * std::exp(-q);
    pla.c = half * std::exp(-q);
    pla.x1 = (1.0 - pla.c) / pla.m;
    pla.x2 = -pla.c / pla.m;
    return pla;
}

double approx_gamma_kernel_integral(double U, double V, double power, double alpha)
{
    check_kernel_domain(U, V, power, alpha);
    const PlaCoefficients pla = pla_coefficients(alpha);
    // Rate of the exponential in the scaled variable y = U^(2/alpha) t.
    const double scale = V / std::pow(U, 2.0 / alpha);
    const double s = power + 1.0;

    const double g1_lo = lower_incomplete_gamma(s, scale * pla.x1);
    const double g1_hi = lower_incomplete_gamma(s, scale * pla.x2);
    const double g2_lo = lower_incomplete_gamma(s + 1.0, scale * pla.x1);
    const double g2_hi = lower_incomplete_gamma(s + 1.0, scale * pla.x2);

    const double bracket = g1_lo + pla.c * (g1_hi - g1_lo) + pla.m / scale * (g2_hi - g2_lo);
    return bracket * std::pow(V, -s);
}

double exact_gamma_kernel_integral(double U, double V, double power, double alpha)
{
    check_kernel_domain(U, V, power, alpha);
    const double half = alpha / 2.0;
    auto exponent = [&](double t) { return V * t + U * std::pow(t, half); };

    // Bisection for V t + U t^(alpha/2) = 745; both terms bound t from above.
    double lo = 0.0;
    double hi = std::min(underflow_exponent / V, std::pow(underflow_exponent / U, 1.0 / half));
    for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (exponent(mid) < underflow_exponent ? lo : hi) = mid;
    }

    auto integrand = [&](double t) {
        if (t <= 0.0) return power == 0.0 ? 1.0 : 0.0;
        return std::exp(-exponent(t) + power * std::log(t));
    };
    return integrate(integrand, 0.0, hi, {.rel_tol = 1e-10}).value;
}

} // namespace hetcov
