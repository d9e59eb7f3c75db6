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

#include "hetcov/specfun.hpp"

#include "hetcov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hetcov {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = 1e-300;
constexpr int max_iterations = 100000;

void require(bool ok, const char* what)
{
    if (!ok) throw std::domain_error(what);
}

double gamma_series(double s, double x)
{
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < max_iterations; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * eps * 0.5)
            return std::exp(s * std::log(x) - x) * sum;
    }
    throw std::runtime_error("lower_incomplete_gamma: series did not converge");
}

// Upper incomplete gamma Gamma(s, x) by modified Lentz evaluation.
double gamma_continued_fraction(double s, double x)
{
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iterations; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) return std::exp(s * std::log(x) - x) * h;
    }
    throw std::runtime_error("lower_incomplete_gamma: continued fraction did not converge");
}

} // namespace

double log_gamma(double x)
{
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double lower_incomplete_gamma(double s, double x)
{
    require(std::isfinite(s) && s > 0.0, "lower_incomplete_gamma: s must be positive");
    require(!std::isnan(x) && x >= 0.0, "lower_incomplete_gamma: x must be non-negative");
    if (x == 0.0) return 0.0;
    const double complete = std::exp(log_gamma(s));
    if (std::isinf(x)) return complete;
    if (x < s + 1.0) return gamma_series(s, x);
    return complete - gamma_continued_fraction(s, x);
}

double beta_function(double a, double b)
{
    require(std::isfinite(a) && a > 0.0, "beta_function: a must be positive");
    require(std::isfinite(b) && b > 0.0, "beta_function: b must be positive");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double binomial(unsigned n, unsigned k)
{
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 60) {
        double result = 1.0;
        for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
        return std::round(result);
    }
    return std::round(std::exp(log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0)));
}

double factorial(unsigned n)
{
    if (n > 170) return std::numeric_limits<double>::infinity();
    double result = 1.0;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

double hyp2f1_rate(double alpha, double beta_threshold)
{
    require(std::isfinite(alpha) && alpha > 2.0, "hyp2f1_rate: alpha must exceed 2");
    require(beta_threshold > 0.0, "hyp2f1_rate: beta must be positive");
    const double delta = 2.0 / alpha;
    const double inv_beta = 1.0 / beta_threshold;
    constexpr int cap = 100000;

    if (inv_beta <= 0.5) {
        // sum_n delta / (delta + n) (-1/beta)^n
        double power = 1.0;
        double sum = 1.0;
        for (int n = 1; n < cap; ++n) {
            power *= -inv_beta;
            const double term = delta / (delta + n) * power;
            sum += term;
            if (std::abs(term) < 1e-15 * std::abs(sum)) return sum;
        }
    }

    // Pfaff transformation: the argument becomes w = 1 / (1 + beta) in (0, 1).
    const double w = 1.0 / (1.0 + beta_threshold);
    if (w <= 0.9) {
        double term = 1.0;
        double sum = 1.0;
        for (int n = 0; n < cap; ++n) {
            term *= (delta + n) * (delta + n) / ((1.0 + delta + n) * (n + 1.0)) * w;
            sum += term;
            if (term < 1e-15 * sum) return std::pow(1.0 + inv_beta, -delta) * sum;
        }
    }
    return hyp2f1_rate_quadrature(alpha, beta_threshold);
}

double hyp2f1_rate_quadrature(double alpha, double beta_threshold)
{
    require(std::isfinite(alpha) && alpha > 2.0, "hyp2f1_rate: alpha must exceed 2");
    require(beta_threshold > 0.0, "hyp2f1_rate: beta must be positive");
    const double exponent = alpha / 2.0;
    const double inv_beta = 1.0 / beta_threshold;
    // 2F1(1, d; 1 + d; z) = int_0^1 du / (1 - z u^(1/d))
    auto integrand = [&](double u) { return 1.0 / (1.0 + inv_beta * std::pow(u, exponent)); };
    return integrate(integrand, 0.0, 1.0, {.rel_tol = 1e-13}).value;
}

double d_sequence(double alpha, unsigned t)
{
    require(std::isfinite(alpha) && alpha > 2.0, "d_sequence: alpha must exceed 2");
    require(t >= 1, "d_sequence: t must be at least 1");
    const double delta = 2.0 / alpha;
    double product = 1.0;
    for (unsigned q = 0; q < t; ++q) product *= delta - q;
    return product;
}

BellArguments::BellArguments(unsigned l, unsigned r, std::vector<double> values)
    : l_(l), r_(r), values_(std::move(values))
{
    if (r > l) throw std::domain_error("BellArguments: r must not exceed l");
    const std::size_t expected = l - r + 1;
    // B_{0,0} = 1 needs no arguments; accept the empty list there too.
    const bool empty_unit = l == 0 && values_.empty();
    if (values_.size() != expected && !empty_unit)
        throw std::invalid_argument("BellArguments: expected " + std::to_string(expected) +
                                    " values for B_{" + std::to_string(l) + "," +
                                    std::to_string(r) + "}, got " +
                                    std::to_string(values_.size()));
}

double partial_bell(unsigned l, unsigned r, const BellArguments& args)
{
    if (r > l) throw std::domain_error("partial_bell: r must not exceed l");
    if (args.l() != l || args.r() != r)
        throw std::invalid_argument("partial_bell: arguments built for a different (l, r)");
    if (l == 0) return 1.0;
    if (r == 0) return 0.0;
    // Entries with n - k <= l - r only touch x_1 .. x_{l-r+1}; pad the rest.
    std::vector<double> xs(l, 0.0);
    const auto given = args.values();
    std::copy(given.begin(), given.end(), xs.begin());
    return BellTable(l, xs)(l, r);
}

BellTable::BellTable(unsigned max_order, std::span<const double> xs)
    : max_order_(max_order), table_((max_order + 1) * (max_order + 1), 0.0)
{
    if (xs.size() < max_order)
        throw std::invalid_argument("BellTable: need at least max_order arguments");
    const unsigned width = max_order + 1;
    table_[0] = 1.0;
    for (unsigned n = 1; n <= max_order; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            double sum = 0.0;
            for (unsigned i = 1; i <= n - k + 1; ++i)
                sum += binomial(n - 1, i - 1) * xs[i - 1] * table_[(n - i) * width + (k - 1)];
            table_[n * width + k] = sum;
        }
    }
}

double BellTable::operator()(unsigned l, unsigned r) const
{
    if (l > max_order_ || r > l) throw std::out_of_range("BellTable: index out of range");
    return table_[l * (max_order_ + 1) + r];
}

} // namespace hetcov
