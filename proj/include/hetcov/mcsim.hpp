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

#ifndef HETCOV_MCSIM_HPP
#define HETCOV_MCSIM_HPP

#include "hetcov/model.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hetcov {

/// Monte Carlo settings. Each geometry (location realization) is reused for
/// n_fading independent fading draws.
struct SimConfig {
    double region_radius = 0.0; ///< disk radius; 0 selects default_region_radius()
    std::uint64_t n_geometry = 10000;
    std::uint64_t n_fading = 100;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    /// Add the mean interference of the PPP outside the disk to the noise.
    bool tail_compensation = true;
};

/// Violations of the SimConfig invariants (empty if usable).
std::vector<Violation> validate(const SimConfig& sim);

/// Non-fatal advice, e.g. a trial budget below 10^3.
std::optional<std::string> sim_warning(const SimConfig& sim);

/// Radius whose disk holds on average default_mean_bs_count base stations.
inline constexpr double default_mean_bs_count = 400.0;
double default_region_radius(const NetworkParams& params);

/// Mean received power from the PPP outside radius R,
/// sum_i 2 pi lambda_i P_i M_i R^(2 - alpha) / (alpha - 2).
double tail_interference_mean(const NetworkParams& params, double radius);

/// BS distances from the origin, one list per tier.
struct Realization {
    std::vector<std::vector<double>> distances;
    std::size_t size() const noexcept;
};

/// PPP in the disk: N_i ~ Poisson(lambda_i pi R^2), d = R sqrt(u). The
/// stream is a pure function of (seed, stream_index).
Realization sample_geometry(const NetworkParams& params, const SimConfig& sim, std::uint64_t stream_index);

struct TierSinr {
    std::size_t tier = 0;
    double sinr = 0.0;
};

/// SINR of every BS with the given fading powers (same shape as the
/// realization). The interference for BS b is everything except b.
std::vector<TierSinr> snapshot_sinrs(const NetworkParams& params, const Realization& realization,
                                     const std::vector<std::vector<double>>& fading);

/// What a coverage / rate decision needs from one snapshot: total received
/// power and the strongest received power in each tier.
struct TrialSummary {
    double total = 0.0;
    std::vector<double> strongest;
};

TrialSummary summarize_snapshot(const NetworkParams& params, const Realization& realization,
                                const std::vector<std::vector<double>>& fading);

/// Union event: some BS of some tier i with SINR > thresholds[i]. With
/// S the strongest power of tier i this is S (1 + beta_i) > beta_i (T + noise).
bool covered(const TrialSummary& trial, std::span<const double> thresholds, double noise);

/// max over BSs of SINR.
double max_sinr(const TrialSummary& trial, double noise);

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0; ///< geometries for coverage, covered trials for rate
};

struct RateEstimate {
    Estimate rate;            ///< nats, conditioned on coverage
    double coverage_fraction = 0.0;
};

/// One evaluation point sharing the simulated snapshots: only thresholds and
/// noise may differ from the simulated network.
struct SweepVariant {
    std::vector<double> thresholds;
    double noise = 0.0;
};

struct SweepPoint {
    Estimate coverage;
    Estimate rate; ///< mean is NaN when no trial was covered
};

struct SweepResult {
    double region_radius = 0.0;
    std::vector<SweepPoint> points;
    /// Filled when requested: the same snapshots extended to twice the radius,
    /// and the paired per-geometry coverage difference (2R minus R).
    std::vector<SweepPoint> doubled;
    std::vector<Estimate> coverage_drift;
};

/// Simulates the network once and evaluates every variant on the same
/// snapshots. Deterministic for a given (params, sim, variants) whatever
/// the thread count.
SweepResult mc_sweep(const NetworkParams& params, const SimConfig& sim,
                     const std::vector<SweepVariant>& variants, bool radius_check = false);

Estimate mc_coverage(const NetworkParams& params, const SimConfig& sim);

/// Throws NumericalError when no trial is covered.
RateEstimate mc_conditional_rate(const NetworkParams& params, const SimConfig& sim);

} // namespace hetcov

#endif
