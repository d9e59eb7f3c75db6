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

#ifndef HETCOV_SPECFUN_HPP
#define HETCOV_SPECFUN_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace hetcov {

/// Thread-safe log|Gamma(x)| for x > 0.
double log_gamma(double x);

/// Lower incomplete gamma function gamma(s, x) = int_0^x t^(s-1) e^(-t) dt.
///
/// Power series for x < s + 1, Lentz continued fraction for the upper
/// function otherwise. Throws std::domain_error for s <= 0, x < 0 or NaN.
double lower_incomplete_gamma(double s, double x);

/// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), evaluated in log space.
double beta_function(double a, double b);

/// Binomial coefficient C(n, k) as a double; exact for results below 2^53.
double binomial(unsigned n, unsigned k);

/// n! as a double.
double factorial(unsigned n);

/// 2F1(1, 2/alpha; 1 + 2/alpha; -1/beta), the hypergeometric factor of the
/// per-tier rate constant. Returns a value in (0, 1].
double hyp2f1_rate(double alpha, double beta_threshold);

/// Same quantity evaluated from the Euler integral representation by
/// adaptive quadrature. Used as the fallback close to the series boundary.
double hyp2f1_rate_quadrature(double alpha, double beta_threshold);

/// D_t = prod_{q=0}^{t-1} (2/alpha - q), the derivative coefficients of
/// s^(2/alpha).
double d_sequence(double alpha, unsigned t);

/// The argument list x_1 .. x_{l-r+1} of a partial Bell polynomial B_{l,r}.
class BellArguments {
public:
    /// Throws std::invalid_argument unless values.size() == l - r + 1.
    BellArguments(unsigned l, unsigned r, std::vector<double> values);

    unsigned l() const noexcept { return l_; }
    unsigned r() const noexcept { return r_; }
    std::span<const double> values() const noexcept { return values_; }

private:
    unsigned l_;
    unsigned r_;
    std::vector<double> values_;
};

/// Partial (exponential) Bell polynomial B_{l,r}(x_1, ..., x_{l-r+1}).
/// Throws std::domain_error for r > l.
double partial_bell(unsigned l, unsigned r, const BellArguments& args);

/// All B_{l,r}(x_1, x_2, ...) for 0 <= r <= l <= max_order, built once by
/// the recurrence
///   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
/// `xs` must hold at least max_order values (x_1 first).
class BellTable {
public:
    BellTable(unsigned max_order, std::span<const double> xs);

    unsigned max_order() const noexcept { return max_order_; }
    double operator()(unsigned l, unsigned r) const;

private:
    unsigned max_order_;
    std::vector<double> table_;
};

} // namespace hetcov

#endif
