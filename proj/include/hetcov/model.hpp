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

#ifndef HETCOV_MODEL_HPP
#define HETCOV_MODEL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetcov {

/// Largest Nakagami shape accepted. The coverage kernel is an alternating
/// sum whose terms grow combinatorially with M.
inline constexpr unsigned max_nakagami_m = 16;

/// One class of base stations. All quantities are linear.
struct TierParams {
    double density = 0.0;    ///< BSs per unit area
    double power = 0.0;      ///< transmit power
    double threshold = 0.0;  ///< SINR threshold, must exceed 1
    unsigned nakagami_m = 1; ///< fading power ~ Gamma(m, 1)
};

struct NetworkParams {
    double alpha = 0.0; ///< path-loss exponent, > 2
    double noise = 0.0; ///< noise power, > 0
    std::vector<TierParams> tiers;

    std::size_t tier_count() const noexcept { return tiers.size(); }
    bool all_rayleigh() const noexcept;
};

struct Violation {
    std::string field;
    std::string message;
};

/// Every violated constraint, not just the first.
std::vector<Violation> validate(const NetworkParams& params);

class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Raised when a closed-form evaluation lands somewhere it cannot (a
/// probability well outside [0, 1], a non-finite kernel).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ValidationError if validate() reports anything.
void require_valid(const NetworkParams& params);

/// A = sum_m lambda_m P_m^(2/alpha) sum_{p=1}^{M_m} C(M_m, p) (2 pi / alpha)
///     Beta(M_m - p + 2/alpha, p - 2/alpha)
/// so that E[exp(-s I)] = exp(-A s^(2/alpha)) for the aggregate interference.
double interference_constant(const NetworkParams& params);

/// Which evaluation of int_0^inf exp(-A t - sigma^2 t^(alpha/2)) t^p dt the
/// coverage kernel uses.
enum class KernelKind { pla, exact };

struct TierKernel {
    double value = 0.0;
    double largest_term = 0.0;        ///< max |summand| of the alternating sum
    bool loss_of_significance = false; ///< largest_term > 1e6 * |value|
};

/// Per-tier coverage kernel. The triple sum over (k, l, r) of the Nakagami
/// CCDF expansion, the Faa di Bruno derivative of the interference Laplace
/// transform, and one gamma-kernel integral per term with exponent
/// r + (alpha/2)(k - l). Depends on the tier only through M_i.
TierKernel tier_script_I(const NetworkParams& params, std::size_t tier_index,
                         KernelKind kind = KernelKind::pla);

/// Same, for a given shape and a precomputed interference constant.
TierKernel tier_kernel(double alpha, double noise, double a_constant, unsigned nakagami_m,
                       KernelKind kind);

/// ln(1 + beta_i) + (alpha/2) 2F1(1, 2/alpha; 1 + 2/alpha; -1/beta_i)
///
/// Only needs alpha > 2 and beta_i > 0, not a fully valid network.
double rate_constant(const NetworkParams& params, std::size_t tier_index);

struct DerivedConstants {
    double a_constant = 0.0;
    std::vector<double> script_i;
    std::vector<double> rate_constants;
    std::vector<double> d_values; ///< D_1 .. D_{max M - 1}
    bool loss_of_significance = false;
};

/// All constants for a validated network; kernels are shared between tiers
/// with the same M.
DerivedConstants derive_constants(const NetworkParams& params, KernelKind kind = KernelKind::pla);

} // namespace hetcov

#endif
