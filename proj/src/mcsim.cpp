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

#include "hetcov/mcsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

namespace hetcov {

namespace {

enum class StreamPurpose : std::uint32_t { geometry = 0, fading = 1 };

// Each (seed, geometry, ring, purpose) owns an independent engine, so a
// geometry's draws never depend on which thread ran it or what ran before.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t geometry, std::uint32_t ring,
                            StreamPurpose purpose)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(geometry), static_cast<std::uint32_t>(geometry >> 32),
                      ring, static_cast<std::uint32_t>(purpose)};
    return std::mt19937_64(seq);
}

// Uniform on (0, 1] from the top 53 bits.
inline double unit_open_left(std::mt19937_64& engine)
{
    return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

// Gamma(M, 1) as a sum of M unit exponentials, -log of a product of uniforms.
inline double gamma_integer_shape(std::mt19937_64& engine, unsigned shape)
{
    double product = unit_open_left(engine);
    for (unsigned j = 1; j < shape; ++j) product *= unit_open_left(engine);
    return -std::log(product);
}

std::vector<std::vector<double>> sample_annulus(const NetworkParams& params, double inner, double outer,
                                                std::mt19937_64& engine)
{
    const double inner_sq = inner * inner;
    const double area_sq = outer * outer - inner_sq;
    std::vector<std::vector<double>> distances(params.tier_count());
    for (std::size_t i = 0; i < params.tier_count(); ++i) {
        std::poisson_distribution<long long> count(params.tiers[i].density * std::numbers::pi * area_sq);
        const long long n = count(engine);
        distances[i].reserve(static_cast<std::size_t>(n));
        for (long long b = 0; b < n; ++b)
            distances[i].push_back(std::sqrt(inner_sq + unit_open_left(engine) * area_sq));
    }
    return distances;
}

// Mean path gains of one ring, flattened with the owning tier.
struct Ring {
    std::vector<double> gain;
    std::vector<unsigned> tier;
};

Ring flatten(const NetworkParams& params, const std::vector<std::vector<double>>& distances)
{
    Ring ring;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        for (double d : distances[i]) {
            ring.gain.push_back(params.tiers[i].power * std::pow(d, -params.alpha));
            ring.tier.push_back(static_cast<unsigned>(i));
        }
    }
    return ring;
}

void draw_summary(const NetworkParams& params, const Ring& ring, std::mt19937_64& engine, TrialSummary& out)
{
    out.total = 0.0;
    std::fill(out.strongest.begin(), out.strongest.end(), 0.0);
    for (std::size_t b = 0; b < ring.gain.size(); ++b) {
        const unsigned t = ring.tier[b];
        const double received = ring.gain[b] * gamma_integer_shape(engine, params.tiers[t].nakagami_m);
        out.total += received;
        out.strongest[t] = std::max(out.strongest[t], received);
    }
}

struct Accumulator {
    std::vector<double> covered; // per (geometry, variant): covered fraction
    std::vector<double> rate;    // per (geometry, variant): sum of ln(1 + SINR) over covered / n_fading

    Accumulator(std::size_t cells) : covered(cells, 0.0), rate(cells, 0.0) {}
};

SweepPoint reduce(const Accumulator& acc, std::size_t variant, std::size_t n_variants, std::uint64_t n_geometry,
                  std::uint64_t n_fading)
{
    const double g = static_cast<double>(n_geometry);
    double cov_sum = 0.0;
    double rate_sum = 0.0;
    for (std::uint64_t k = 0; k < n_geometry; ++k) {
        cov_sum += acc.covered[k * n_variants + variant];
        rate_sum += acc.rate[k * n_variants + variant];
    }
    const double cov_mean = cov_sum / g;
    const double rate_mean = cov_sum > 0.0 ? rate_sum / cov_sum : std::numeric_limits<double>::quiet_NaN();

    double cov_var = 0.0;
    double rate_var = 0.0;
    for (std::uint64_t k = 0; k < n_geometry; ++k) {
        const double c = acc.covered[k * n_variants + variant];
        cov_var += (c - cov_mean) * (c - cov_mean);
        if (cov_sum > 0.0) {
            const double e = acc.rate[k * n_variants + variant] - rate_mean * c;
            rate_var += e * e;
        }
    }

    SweepPoint point;
    point.coverage.mean = cov_mean;
    point.coverage.n_samples = n_geometry;
    point.coverage.std_error = n_geometry > 1 ? std::sqrt(cov_var / (g - 1.0) / g) : 0.0;
    point.rate.mean = rate_mean;
    point.rate.n_samples = static_cast<std::uint64_t>(std::llround(cov_sum * static_cast<double>(n_fading)));
    point.rate.std_error = (n_geometry > 1 && cov_sum > 0.0) ? std::sqrt(rate_var / (g * (g - 1.0))) / cov_mean : 0.0;
    return point;
}

Estimate reduce_drift(const Accumulator& base, const Accumulator& doubled, std::size_t variant,
                      std::size_t n_variants, std::uint64_t n_geometry)
{
    const double g = static_cast<double>(n_geometry);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < n_geometry; ++k)
        sum += doubled.covered[k * n_variants + variant] - base.covered[k * n_variants + variant];
    const double mean = sum / g;
    double var = 0.0;
    for (std::uint64_t k = 0; k < n_geometry; ++k) {
        const double d = doubled.covered[k * n_variants + variant] - base.covered[k * n_variants + variant] - mean;
        var += d * d;
    }
    return {mean, n_geometry > 1 ? std::sqrt(var / (g - 1.0) / g) : 0.0, n_geometry};
}

} // namespace

std::vector<Violation> validate(const SimConfig& sim)
{
    std::vector<Violation> out;
    if (!(sim.region_radius >= 0.0) || !std::isfinite(sim.region_radius))
        out.push_back({"sim.region_radius", "radius must be positive (or 0 for the default)"});
    if (sim.n_geometry < 1) out.push_back({"sim.n_geometry", "need at least one geometry"});
    if (sim.n_fading < 1) out.push_back({"sim.n_fading", "need at least one fading draw"});
    if (sim.threads < 1) out.push_back({"sim.threads", "need at least one thread"});
    return out;
}

std::optional<std::string> sim_warning(const SimConfig& sim)
{
    if (sim.n_geometry * sim.n_fading < 1000)
        return "only " + std::to_string(sim.n_geometry * sim.n_fading) +
               " Monte Carlo trials; estimates will be coarse";
    return std::nullopt;
}

double default_region_radius(const NetworkParams& params)
{
    double density = 0.0;
    for (const auto& tier : params.tiers) density += tier.density;
    return std::sqrt(default_mean_bs_count / (std::numbers::pi * density));
}

double tail_interference_mean(const NetworkParams& params, double radius)
{
    double sum = 0.0;
    for (const auto& tier : params.tiers) sum += tier.density * tier.power * tier.nakagami_m;
    return 2.0 * std::numbers::pi * sum * std::pow(radius, 2.0 - params.alpha) / (params.alpha - 2.0);
}

std::size_t Realization::size() const noexcept
{
    std::size_t n = 0;
    for (const auto& tier : distances) n += tier.size();
    return n;
}

Realization sample_geometry(const NetworkParams& params, const SimConfig& sim, std::uint64_t stream_index)
{
    const double radius = sim.region_radius > 0.0 ? sim.region_radius : default_region_radius(params);
    auto engine = make_engine(sim.seed, stream_index, 0, StreamPurpose::geometry);
    return {sample_annulus(params, 0.0, radius, engine)};
}

std::vector<TierSinr> snapshot_sinrs(const NetworkParams& params, const Realization& realization,
                                     const std::vector<std::vector<double>>& fading)
{
    double total = 0.0;
    for (std::size_t i = 0; i < realization.distances.size(); ++i)
        for (std::size_t b = 0; b < realization.distances[i].size(); ++b)
            total += params.tiers[i].power * fading.at(i).at(b) * std::pow(realization.distances[i][b], -params.alpha);

    std::vector<TierSinr> out;
    for (std::size_t i = 0; i < realization.distances.size(); ++i) {
        for (std::size_t b = 0; b < realization.distances[i].size(); ++b) {
            const double signal = params.tiers[i].power * fading[i][b] * std::pow(realization.distances[i][b], -params.alpha);
            out.push_back({i, signal / (total - signal + params.noise)});
        }
    }
    return out;
}

TrialSummary summarize_snapshot(const NetworkParams& params, const Realization& realization,
                                const std::vector<std::vector<double>>& fading)
{
    TrialSummary summary{0.0, std::vector<double>(params.tier_count(), 0.0)};
    for (std::size_t i = 0; i < realization.distances.size(); ++i) {
        for (std::size_t b = 0; b < realization.distances[i].size(); ++b) {
            const double received = params.tiers[i].power * fading.at(i).at(b) * std::pow(realization.distances[i][b], -params.alpha);
            summary.total += received;
            summary.strongest[i] = std::max(summary.strongest[i], received);
        }
    }
    return summary;
}

bool covered(const TrialSummary& trial, std::span<const double> thresholds, double noise)
{
    const double level = trial.total + noise;
    for (std::size_t i = 0; i < trial.strongest.size(); ++i) {
        const double beta = thresholds[i];
        if (trial.strongest[i] * (1.0 + beta) > beta * level) return true;
    }
    return false;
}

double max_sinr(const TrialSummary& trial, double noise)
{
    const double strongest = *std::max_element(trial.strongest.begin(), trial.strongest.end());
    return strongest / (trial.total - strongest + noise);
}

SweepResult mc_sweep(const NetworkParams& params, const SimConfig& sim, const std::vector<SweepVariant>& variants,
                     bool radius_check)
{
    require_valid(params);
    if (auto v = validate(sim); !v.empty()) throw ValidationError(std::move(v));
    for (const auto& variant : variants)
        if (variant.thresholds.size() != params.tier_count())
            throw std::invalid_argument("mc_sweep: variant threshold count differs from tier count");

    const double radius = sim.region_radius > 0.0 ? sim.region_radius : default_region_radius(params);
    const double tail_inner = sim.tail_compensation ? tail_interference_mean(params, radius) : 0.0;
    const double tail_outer = sim.tail_compensation ? tail_interference_mean(params, 2.0 * radius) : 0.0;

    const std::size_t n_variants = variants.size();
    const std::size_t cells = static_cast<std::size_t>(sim.n_geometry) * n_variants;
    Accumulator base(cells);
    Accumulator doubled(radius_check ? cells : 0);
    const double inv_fading = 1.0 / static_cast<double>(sim.n_fading);

    auto run_geometry = [&](std::uint64_t g) {
        auto geo_engine = make_engine(sim.seed, g, 0, StreamPurpose::geometry);
        const Ring inner = flatten(params, sample_annulus(params, 0.0, radius, geo_engine));
        auto fade_engine = make_engine(sim.seed, g, 0, StreamPurpose::fading);

        Ring outer;
        std::mt19937_64 outer_fade;
        if (radius_check) {
            auto ring_engine = make_engine(sim.seed, g, 1, StreamPurpose::geometry);
            outer = flatten(params, sample_annulus(params, radius, 2.0 * radius, ring_engine));
            outer_fade = make_engine(sim.seed, g, 1, StreamPurpose::fading);
        }

        TrialSummary in{0.0, std::vector<double>(params.tier_count(), 0.0)};
        TrialSummary out = in;
        TrialSummary both = in;
        const std::size_t row = static_cast<std::size_t>(g) * n_variants;

        for (std::uint64_t f = 0; f < sim.n_fading; ++f) {
            draw_summary(params, inner, fade_engine, in);
            if (radius_check) {
                draw_summary(params, outer, outer_fade, out);
                both.total = in.total + out.total;
                for (std::size_t i = 0; i < both.strongest.size(); ++i)
                    both.strongest[i] = std::max(in.strongest[i], out.strongest[i]);
            }
            for (std::size_t v = 0; v < n_variants; ++v) {
                const auto& variant = variants[v];
                const double noise = variant.noise + tail_inner;
                if (covered(in, variant.thresholds, noise)) {
                    base.covered[row + v] += inv_fading;
                    base.rate[row + v] += std::log1p(max_sinr(in, noise)) * inv_fading;
                }
                if (radius_check) {
                    const double noise2 = variant.noise + tail_outer;
                    if (covered(both, variant.thresholds, noise2)) {
                        doubled.covered[row + v] += inv_fading;
                        doubled.rate[row + v] += std::log1p(max_sinr(both, noise2)) * inv_fading;
                    }
                }
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(sim.threads, static_cast<unsigned>(sim.n_geometry)));
    if (workers == 1) {
        for (std::uint64_t g = 0; g < sim.n_geometry; ++g) run_geometry(g);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t g = next++; g < sim.n_geometry; g = next++) run_geometry(g);
            });
    }

    SweepResult result;
    result.region_radius = radius;
    for (std::size_t v = 0; v < n_variants; ++v) {
        result.points.push_back(reduce(base, v, n_variants, sim.n_geometry, sim.n_fading));
        if (radius_check) {
            result.doubled.push_back(reduce(doubled, v, n_variants, sim.n_geometry, sim.n_fading));
            result.coverage_drift.push_back(reduce_drift(base, doubled, v, n_variants, sim.n_geometry));
        }
    }
    return result;
}

Estimate mc_coverage(const NetworkParams& params, const SimConfig& sim)
{
    std::vector<double> thresholds;
    for (const auto& tier : params.tiers) thresholds.push_back(tier.threshold);
    return mc_sweep(params, sim, {{thresholds, params.noise}}).points.front().coverage;
}

RateEstimate mc_conditional_rate(const NetworkParams& params, const SimConfig& sim)
{
    std::vector<double> thresholds;
    for (const auto& tier : params.tiers) thresholds.push_back(tier.threshold);
    const SweepPoint point = mc_sweep(params, sim, {{thresholds, params.noise}}).points.front();
    if (point.rate.n_samples == 0 || !std::isfinite(point.rate.mean))
        throw NumericalError("mc_conditional_rate: no covered trial to condition on");
    return {point.rate, point.coverage.mean};
}

} // namespace hetcov
