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

#ifndef HETCOV_CONFIG_HPP
#define HETCOV_CONFIG_HPP

#include "hetcov/mcsim.hpp"
#include "hetcov/model.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hetcov {

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

enum class SweepVariable { beta1_db, noise_db, nakagami_pair };

/// Evaluation methods in their fixed CSV column order.
enum class SweepMethod { closed, rayleigh, reference, mc };

struct SweepSpec {
    SweepVariable variable = SweepVariable::beta1_db;
    double start = 0.0; ///< dB
    double stop = 0.0;  ///< dB
    unsigned points = 0;
    std::vector<std::vector<unsigned>> pairs; ///< nakagami_pair only: one M per tier
    std::vector<SweepMethod> methods;         ///< sorted, unique

    bool has(SweepMethod method) const noexcept;
    /// Sweep values in dB (beta1_db / noise_db).
    std::vector<double> grid() const;
};

struct RunConfig {
    NetworkParams network;
    SweepSpec sweep;
    SimConfig sim;
    bool rate = false; ///< emit R instead of P_c
};

/// Parse or validation failure. For parse errors `violations` holds a single
/// entry whose field is "line L, column C".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string summary, std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

std::string_view to_string(SweepVariable variable) noexcept;
std::string_view to_string(SweepMethod method) noexcept;

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

} // namespace hetcov

#endif
