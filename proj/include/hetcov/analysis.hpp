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

#ifndef HETCOV_ANALYSIS_HPP
#define HETCOV_ANALYSIS_HPP

#include "hetcov/model.hpp"

#include <string_view>

namespace hetcov {

enum class Method { closed_form, rayleigh_closed_form, quadrature_reference };

std::string_view to_string(Method method) noexcept;

struct CoverageResult {
    double value = 0.0; ///< in [0, 1]
    Method method = Method::closed_form;
    bool loss_of_significance = false;
};

/// Average rate of a covered user, in nats per channel use.
struct RateResult {
    double value = 0.0;
    Method method = Method::closed_form;
};

/// P_c = sum_i pi lambda_i P_i^(2/alpha) beta_i^(-2/alpha) I_i with the PLA
/// kernel. Values within 1e-9 of [0, 1] are clamped; anything further out
/// throws NumericalError.
CoverageResult coverage_probability(const NetworkParams& params);

/// Explicit exponential form for all-Rayleigh networks. Throws
/// std::invalid_argument if any tier has M != 1.
CoverageResult coverage_rayleigh(const NetworkParams& params);

/// The same expansion with every gamma-kernel integral done by quadrature,
/// i.e. without the piecewise-linear approximation.
CoverageResult coverage_reference(const NetworkParams& params);

/// P(max SINR > y | covered), the ratio of raised-threshold coverage to
/// baseline coverage.
double conditional_ccdf(const NetworkParams& params, double y);
double conditional_ccdf(const NetworkParams& params, const DerivedConstants& constants, double y);

/// Weighted average of the per-tier rate constants.
RateResult average_rate(const NetworkParams& params);

/// Rayleigh special case: the kernels cancel and noise drops out.
RateResult rate_rayleigh(const NetworkParams& params);

/// int_0^inf P(X > y | C) / (1 + y) dy by adaptive quadrature, split at the
/// thresholds. Throws QuadratureError on non-convergence.
RateResult rate_reference(const NetworkParams& params);

} // namespace hetcov

#endif
