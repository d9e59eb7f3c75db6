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

#ifndef HETCOV_SWEEP_HPP
#define HETCOV_SWEEP_HPP

#include "hetcov/config.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hetcov {

/// Command-line overrides on top of a RunConfig.
struct RunOptions {
    bool rate = false;
    bool bits = false;
    bool radius_check = false;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
};

struct OutputRow {
    std::string sweep_label; ///< dB value, or "m1;m2;..." for Nakagami sweeps
    std::vector<double> values; ///< aligned with SweepTable::columns after the first
};

struct RadiusCheck {
    std::string sweep_label;
    double radius = 0.0;
    double coverage = 0.0;         ///< at the configured radius
    double coverage_doubled = 0.0; ///< same snapshots extended to twice the radius
    double drift = 0.0;            ///< paired difference
    double drift_se = 0.0;
};

struct SweepTable {
    /// "sweep_db" or "nakagami_m", then closed, rayleigh, reference, mc,
    /// mc_se for whichever methods ran.
    std::vector<std::string> columns;
    std::vector<OutputRow> rows;
    std::vector<RadiusCheck> radius_checks;
    bool loss_of_significance = false;
};

/// Largest |drift| the radius self-check tolerates (absolute coverage).
inline constexpr double radius_drift_tolerance = 1e-3;

/// The network evaluated at every sweep point, in order.
std::vector<NetworkParams> sweep_networks(const RunConfig& config);

SweepTable run_sweep(const RunConfig& config, const RunOptions& options = {});

/// RFC 4180 style: header row, '.' decimal point, no locale, '\n' endings.
void write_csv(std::ostream& out, const SweepTable& table);

/// CSV number format: 10 significant digits, locale-free.
std::string format_number(double value);

} // namespace hetcov

#endif
