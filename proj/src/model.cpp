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

#include "hetcov/model.hpp"

#include "hetcov/pla.hpp"
#include "hetcov/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace hetcov {

namespace {

std::string join_violations(const std::vector<Violation>& violations)
{
    std::string text = "invalid network parameters:";
    for (const auto& v : violations) text += "\n  " + v.field + ": " + v.message;
    return text;
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

bool NetworkParams::all_rayleigh() const noexcept
{
    return std::all_of(tiers.begin(), tiers.end(), [](const TierParams& t) { return t.nakagami_m == 1; });
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations))
{
}

std::vector<Violation> validate(const NetworkParams& params)
{
    std::vector<Violation> out;
    if (!(std::isfinite(params.alpha) && params.alpha > 2.0))
        out.push_back({"alpha", "alpha must exceed 2 (finite interference, PLA construction)"});
    if (!positive_finite(params.noise))
        out.push_back({"noise", "noise power must be positive"});
    if (params.tiers.empty())
        out.push_back({"tiers", "at least one tier is required"});

    for (std::size_t i = 0; i < params.tiers.size(); ++i) {
        const auto& tier = params.tiers[i];
        const std::string path = "tiers[" + std::to_string(i) + "].";
        if (!positive_finite(tier.density))
            out.push_back({path + "lambda", "density must be positive"});
        if (!positive_finite(tier.power))
            out.push_back({path + "power", "transmit power must be positive"});
        if (!(std::isfinite(tier.threshold) && tier.threshold > 1.0))
            out.push_back({path + "beta", "SINR threshold must exceed 1 (0 dB): the coverage "
                                          "formulas assume beta_i > 1 so that at most one BS "
                                          "can cover the user"});
        if (tier.nakagami_m < 1 || tier.nakagami_m > max_nakagami_m)
            out.push_back({path + "m", "Nakagami shape must be an integer in [1, " +
                                           std::to_string(max_nakagami_m) + "]"});
    }
    return out;
}

void require_valid(const NetworkParams& params)
{
    auto violations = validate(params);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

double interference_constant(const NetworkParams& params)
{
    const double delta = 2.0 / params.alpha;
    double a = 0.0;
    for (const auto& tier : params.tiers) {
        const unsigned m = tier.nakagami_m;
        double inner = 0.0;
        for (unsigned p = 1; p <= m; ++p)
            inner += binomial(m, p) * beta_function(m - p + delta, p - delta);
        a += tier.density * std::pow(tier.power, delta) * (2.0 * std::numbers::pi / params.alpha) * inner;
    }
    return a;
}

TierKernel tier_kernel(double alpha, double noise, double a_constant, unsigned nakagami_m,
                       KernelKind kind)
{
    const unsigned order = nakagami_m - 1;
    std::vector<double> d(order);
    for (unsigned t = 1; t <= order; ++t) d[t - 1] = d_sequence(alpha, t);
    const BellTable bell(order, d);

    auto kernel = [&](double power) {
        return kind == KernelKind::pla ? approx_gamma_kernel_integral(noise, a_constant, power, alpha)
                                       : exact_gamma_kernel_integral(noise, a_constant, power, alpha);
    };

    TierKernel out;
    double sum = 0.0;
    for (unsigned k = 0; k <= order; ++k) {
        const double inv_k_factorial = 1.0 / factorial(k);
        for (unsigned l = 0; l <= k; ++l) {
            const double outer = inv_k_factorial * binomial(k, l) * std::pow(noise, k - l) *
                                 (l % 2 == 0 ? 1.0 : -1.0);
            // B_{l,0} vanishes for l > 0.
            for (unsigned r = (l == 0 ? 0 : 1); r <= l; ++r) {
                const double power = r + alpha / 2.0 * (k - l);
                const double term = outer * std::pow(-a_constant, static_cast<int>(r)) * bell(l, r) * kernel(power);
                sum += term;
                out.largest_term = std::max(out.largest_term, std::abs(term));
            }
        }
    }
    if (!std::isfinite(sum)) throw NumericalError("coverage kernel is not finite");
    out.value = sum;
    out.loss_of_significance = out.largest_term > 1e6 * std::abs(sum);
    return out;
}

TierKernel tier_script_I(const NetworkParams& params, std::size_t tier_index, KernelKind kind)
{
    require_valid(params);
    if (tier_index >= params.tiers.size()) throw std::out_of_range("tier_script_I: tier index");
    return tier_kernel(params.alpha, params.noise, interference_constant(params),
                       params.tiers[tier_index].nakagami_m, kind);
}

double rate_constant(const NetworkParams& params, std::size_t tier_index)
{
    if (tier_index >= params.tiers.size()) throw std::out_of_range("rate_constant: tier index");
    const double beta = params.tiers[tier_index].threshold;
    return std::log1p(beta) + params.alpha / 2.0 * hyp2f1_rate(params.alpha, beta);
}

DerivedConstants derive_constants(const NetworkParams& params, KernelKind kind)
{
    require_valid(params);
    DerivedConstants out;
    out.a_constant = interference_constant(params);

    unsigned largest_m = 1;
    for (const auto& tier : params.tiers) largest_m = std::max(largest_m, tier.nakagami_m);
    for (unsigned t = 1; t < largest_m; ++t) out.d_values.push_back(d_sequence(params.alpha, t));

    std::map<unsigned, TierKernel> by_shape;
    for (std::size_t i = 0; i < params.tiers.size(); ++i) {
        const unsigned m = params.tiers[i].nakagami_m;
        auto it = by_shape.find(m);
        if (it == by_shape.end())
            it = by_shape.emplace(m, tier_kernel(params.alpha, params.noise, out.a_constant, m, kind)).first;
        out.script_i.push_back(it->second.value);
        out.loss_of_significance = out.loss_of_significance || it->second.loss_of_significance;
        out.rate_constants.push_back(rate_constant(params, i));
    }
    return out;
}

} // namespace hetcov
