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

#include "hetcov/analysis.hpp"

#include "hetcov/pla.hpp"
#include "hetcov/quadrature.hpp"
#include "hetcov/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hetcov {

namespace {

constexpr double clamp_slack = 1e-9;

// lambda_i P_i^(2/alpha) t^(-2/alpha), the per-tier weight at threshold t.
double tier_weight(const NetworkParams& params, std::size_t i, double threshold)
{
    const double delta = 2.0 / params.alpha;
    const auto& tier = params.tiers[i];
    return tier.density * std::pow(tier.power, delta) * std::pow(threshold, -delta);
}

CoverageResult finish_coverage(double raw, Method method, bool loss)
{
    if (!std::isfinite(raw) || raw < -clamp_slack || raw > 1.0 + clamp_slack)
        throw NumericalError("coverage probability " + std::to_string(raw) + " outside [0, 1]");
    return {std::clamp(raw, 0.0, 1.0), method, loss};
}

CoverageResult coverage_from(const NetworkParams& params, KernelKind kind, Method method)
{
    const DerivedConstants constants = derive_constants(params, kind);
    double sum = 0.0;
    for (std::size_t i = 0; i < params.tier_count(); ++i)
        sum += std::numbers::pi * tier_weight(params, i, params.tiers[i].threshold) * constants.script_i[i];
    return finish_coverage(sum, method, constants.loss_of_significance);
}

void require_rayleigh(const NetworkParams& params, const char* who)
{
    if (!params.all_rayleigh())
        throw std::invalid_argument(std::string(who) + ": every tier must have M = 1");
}

} // namespace

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::closed_form: return "closed";
    case Method::rayleigh_closed_form: return "rayleigh";
    case Method::quadrature_reference: return "reference";
    }
    return "unknown";
}

CoverageResult coverage_probability(const NetworkParams& params)
{
    return coverage_from(params, KernelKind::pla, Method::closed_form);
}

CoverageResult coverage_reference(const NetworkParams& params)
{
    return coverage_from(params, KernelKind::exact, Method::quadrature_reference);
}

CoverageResult coverage_rayleigh(const NetworkParams& params)
{
    require_valid(params);
    require_rayleigh(params, "coverage_rayleigh");

    const double alpha = params.alpha;
    const double delta = 2.0 / alpha;
    double power_sum = 0.0;
    for (const auto& tier : params.tiers) power_sum += tier.density * std::pow(tier.power, delta);
    const double v = 2.0 * std::numbers::pi / alpha * std::tgamma(delta) * std::tgamma(1.0 - delta) * power_sum;
    const double u = params.noise;

    const PlaCoefficients pla = pla_coefficients(alpha);
    const double z = v / std::pow(u, delta);
    const double e1 = std::exp(-z * pla.x1);
    const double e2 = std::exp(-z * pla.x2);
    const double bracket = -std::expm1(-z * pla.x1) + pla.c * (e1 - e2) +
                           pla.m * (e1 * (pla.x1 + 1.0 / z) - e2 * (pla.x2 + 1.0 / z));

    double sum = 0.0;
    for (std::size_t i = 0; i < params.tier_count(); ++i)
        sum += std::numbers::pi * tier_weight(params, i, params.tiers[i].threshold) / v * bracket;
    return finish_coverage(sum, Method::rayleigh_closed_form, false);
}

double conditional_ccdf(const NetworkParams& params, const DerivedConstants& constants, double y)
{
    if (!(y >= 0.0)) throw std::domain_error("conditional_ccdf: y must be non-negative");
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < params.tier_count(); ++i) {
        const double beta = params.tiers[i].threshold;
        numerator += tier_weight(params, i, std::max(y, beta)) * constants.script_i[i];
        denominator += tier_weight(params, i, beta) * constants.script_i[i];
    }
    return std::clamp(numerator / denominator, 0.0, 1.0);
}

double conditional_ccdf(const NetworkParams& params, double y)
{
    return conditional_ccdf(params, derive_constants(params), y);
}

RateResult average_rate(const NetworkParams& params)
{
    const DerivedConstants constants = derive_constants(params);
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < params.tier_count(); ++i) {
        const double w = tier_weight(params, i, params.tiers[i].threshold) * constants.script_i[i];
        numerator += w * constants.rate_constants[i];
        denominator += w;
    }
    return {numerator / denominator, Method::closed_form};
}

RateResult rate_rayleigh(const NetworkParams& params)
{
    require_valid(params);
    require_rayleigh(params, "rate_rayleigh");
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < params.tier_count(); ++i) {
        const double w = tier_weight(params, i, params.tiers[i].threshold);
        numerator += w * rate_constant(params, i);
        denominator += w;
    }
    return {numerator / denominator, Method::rayleigh_closed_form};
}

RateResult rate_reference(const NetworkParams& params)
{
    const DerivedConstants constants = derive_constants(params);
    auto integrand = [&](double y) { return conditional_ccdf(params, constants, y) / (1.0 + y); };

    std::vector<double> knots{0.0};
    for (const auto& tier : params.tiers) knots.push_back(tier.threshold);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    const QuadratureOptions opt{.rel_tol = 1e-12};
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < knots.size(); ++j)
        total += integrate(integrand, knots[j], knots[j + 1], opt).value;

    // Tail: y = b u^(-alpha/2) turns the y^(-1-2/alpha) decay into a bounded
    // integrand on (0, 1].
    const double b = knots.back();
    const double q = params.alpha / 2.0;
    auto tail = [&](double u) {
        const double y = b * std::pow(u, -q);
        return integrand(y) * b * q * std::pow(u, -q - 1.0);
    };
    total += integrate(tail, 0.0, 1.0, opt).value;
    return {total, Method::quadrature_reference};
}

} // namespace hetcov
