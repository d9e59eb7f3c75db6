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


#include "oracles.hpp"

#include "hetcov/pla.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace hetcov;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("coefficients at alpha = 4 and 3")
{
    const auto p4 = pla_coefficients(4.0);
    CHECK(p4.m == doctest::Approx(-0.8577638849607068).epsilon(1e-14));
    CHECK(p4.c == doctest::Approx(1.2130613194252668).epsilon(1e-14));
    CHECK(p4.x0 == doctest::Approx(0.70710678118654752).epsilon(1e-14));
    CHECK(p4.x1 == doctest::Approx(0.24839157157453295).epsilon(1e-13));
    CHECK(p4.x2 == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));

    const auto p3 = pla_coefficients(3.0);
    CHECK(p3.m == doctest::Approx(-0.7452225939173594).epsilon(1e-14));
    CHECK(p3.c == doctest::Approx(1.0747969658606839).epsilon(1e-14));
    CHECK(p3.x0 == doctest::Approx(0.48074985676913613).epsilon(1e-14));
    CHECK(p3.x1 == doctest::Approx(0.10036862337667985).epsilon(1e-13));
    CHECK(p3.x2 == doctest::Approx(1.4422495703074084).epsilon(1e-14));
}

TEST_CASE("coefficient invariants over alpha")
{
    for (double alpha = 2.05; alpha <= 8.0; alpha += 0.05) {
        const auto p = pla_coefficients(alpha);
        INFO("alpha=" << alpha);
        CHECK(p.m < 0.0);
        CHECK(0.0 <= p.x1);
        CHECK(p.x1 < p.x0);
        CHECK(p.x0 < p.x2);
        CHECK(std::abs(p.m * p.x1 + p.c - 1.0) < 1e-12);
        CHECK(std::abs(p.m * p.x2 + p.c) < 1e-12);
        CHECK(std::abs(p.m * p.x0 + p.c - std::exp(-std::pow(p.x0, alpha / 2.0))) < 1e-12);
        CHECK(rel(p.c, alpha / 2.0 * std::exp(-(1.0 - 2.0 / alpha))) < 1e-14);
        CHECK(rel(p.x0, std::pow(1.0 - 2.0 / alpha, 2.0 / alpha)) < 1e-14);
        // Tangent: slope of exp(-x^(a/2)) at x0.
        const double slope = -(alpha / 2.0) * std::pow(p.x0, alpha / 2.0 - 1.0) * std::exp(-std::pow(p.x0, alpha / 2.0));
        CHECK(rel(p.m, slope) < 1e-12);
    }
}

TEST_CASE("surrogate shape")
{
    const auto p = pla_coefficients(3.0);
    CHECK(p(0.0) == 1.0);
    CHECK(p(p.x1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p(0.5 * (p.x1 + p.x2)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p(p.x2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(p(10.0) == 0.0);
    const double h = 1e-9;
    CHECK(std::abs(p(p.x1 - h) - p(p.x1 + h)) < 1e-8);
    CHECK(std::abs(p(p.x2 - h) - p(p.x2 + h)) < 1e-8);
}

TEST_CASE("alpha must exceed 2")
{
    CHECK_THROWS_AS(pla_coefficients(2.0), std::domain_error);
    CHECK_THROWS_AS(pla_coefficients(1.5), std::domain_error);
    CHECK_THROWS_AS(approx_gamma_kernel_integral(1.0, 1.0, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(exact_gamma_kernel_integral(1.0, 1.0, 0.0, 2.0), std::domain_error);
}

TEST_CASE("kernel domain errors")
{
    for (auto* kernel : {&approx_gamma_kernel_integral, &exact_gamma_kernel_integral}) {
        CHECK_THROWS_AS(kernel(0.0, 1.0, 0.0, 3.0), std::domain_error);
        CHECK_THROWS_AS(kernel(1.0, 0.0, 0.0, 3.0), std::domain_error);
        CHECK_THROWS_AS(kernel(-1.0, 1.0, 0.0, 3.0), std::domain_error);
        CHECK_THROWS_AS(kernel(1.0, 1.0, -0.5, 3.0), std::domain_error);
    }
}

TEST_CASE("spot values at U = V = 1, alpha = 4")
{
    const double exact_closed = std::exp(0.25) * std::sqrt(std::numbers::pi) / 2.0 * std::erfc(0.5);
    CHECK(rel(exact_gamma_kernel_integral(1.0, 1.0, 0.0, 4.0), 0.5456413607650470421) < 1e-10);
    CHECK(rel(exact_gamma_kernel_integral(1.0, 1.0, 0.0, 4.0), exact_closed) < 1e-10);
    CHECK(rel(approx_gamma_kernel_integral(1.0, 1.0, 0.0, 4.0), 0.53943423084500154013) < 1e-12);
}

TEST_CASE("vanishing U recovers the gamma integral")
{
    CHECK(rel(approx_gamma_kernel_integral(1e-12, 1.0, 0.0, 3.0), 1.0) < 1e-3);
    CHECK(rel(exact_gamma_kernel_integral(1e-12, 1.0, 1.0, 3.0), 1.0) < 1e-6);
}

TEST_CASE("moderate U: values against the high-precision oracle")
{
    // U = 0.5, V = 2, t^1.5, alpha = 3: the PLA is about 5% low here.
    CHECK(rel(exact_gamma_kernel_integral(0.5, 2.0, 1.5, 3.0), 0.12830674319582049865) < 1e-10);
    CHECK(rel(approx_gamma_kernel_integral(0.5, 2.0, 1.5, 3.0), 0.12190720045718937048) < 1e-12);
}

TEST_CASE("exact kernel: two independent quadrature schemes")
{
    CHECK(rel(exact_gamma_kernel_integral(2.0, 3.0, 0.5, 2.5), oracle::gamma_kernel(2.0, 3.0, 0.5, 2.5)) < 1e-9);
    CHECK(rel(exact_gamma_kernel_integral(2.0, 3.0, 0.5, 2.5), 0.089022140875127674231) < 1e-9);
    for (double alpha : {2.5, 3.0, 4.0})
        for (double U : {1e-3, 0.1, 10.0})
            for (double V : {1e-2, 1.0, 100.0})
                for (double p : {0.0, 1.0, 2.5, 4.0}) {
                    INFO("U=" << U << " V=" << V << " p=" << p << " alpha=" << alpha);
                    CHECK(rel(exact_gamma_kernel_integral(U, V, p, alpha), oracle::gamma_kernel(U, V, p, alpha)) <
                          1e-9);
                }
}

TEST_CASE("approximation depends on (U, V) through V^(p+1) and V / U^(2/alpha)")
{
    for (double alpha : {2.5, 3.0, 4.0})
        for (double p : {0.0, 1.5, 3.0}) {
            const double U = 0.7, V = 3.0, s = 4.0;
            // V -> s V and U -> s^(alpha/2) U keep V / U^(2/alpha) fixed.
            const double a = approx_gamma_kernel_integral(U, V, p, alpha) * std::pow(V, p + 1.0);
            const double b = approx_gamma_kernel_integral(U * std::pow(s, alpha / 2.0), s * V, p, alpha) *
                             std::pow(s * V, p + 1.0);
            CHECK(rel(a, b) < 1e-12);
        }
}

TEST_CASE("approximation is decreasing in U and V")
{
    for (double alpha : {2.5, 3.0, 4.0})
        for (double p : {0.0, 2.0}) {
            double previous = approx_gamma_kernel_integral(1e-3, 1.0, p, alpha);
            for (double U = 2e-3; U < 20.0; U *= 1.5) {
                const double v = approx_gamma_kernel_integral(U, 1.0, p, alpha);
                CHECK(v < previous);
                previous = v;
            }
            previous = approx_gamma_kernel_integral(1.0, 1e-2, p, alpha);
            for (double V = 1.5e-2; V < 200.0; V *= 1.5) {
                const double v = approx_gamma_kernel_integral(1.0, V, p, alpha);
                CHECK(v < previous);
                previous = v;
            }
        }
}

TEST_CASE("approximation is positive and finite on the stress grid")
{
    for (double alpha : {2.5, 3.0, 3.5, 4.0})
        for (int n = 0; n <= 8; ++n)
            for (double U = 1e-3; U <= 10.0 * 1.0001; U *= 10.0)
                for (double V = 1e-2; V <= 100.0 * 1.0001; V *= 10.0) {
                    const double v = approx_gamma_kernel_integral(U, V, n / 2.0, alpha);
                    CHECK(std::isfinite(v));
                    CHECK(v > 0.0);
                }
}
