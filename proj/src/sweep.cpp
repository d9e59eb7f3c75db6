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

#include "hetcov/sweep.hpp"

#include "hetcov/analysis.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace hetcov {

namespace {

std::string pair_label(const std::vector<unsigned>& ms)
{
    std::string label;
    for (std::size_t i = 0; i < ms.size(); ++i) label += (i ? ";" : "") + std::to_string(ms[i]);
    return label;
}

std::vector<std::string> sweep_labels(const RunConfig& config)
{
    std::vector<std::string> labels;
    if (config.sweep.variable == SweepVariable::nakagami_pair)
        for (const auto& pair : config.sweep.pairs) labels.push_back(pair_label(pair));
    else
        for (double v : config.sweep.grid()) labels.push_back(format_number(v));
    return labels;
}

std::vector<double> thresholds_of(const NetworkParams& params)
{
    std::vector<double> out;
    for (const auto& tier : params.tiers) out.push_back(tier.threshold);
    return out;
}

} // namespace

std::string format_number(double value)
{
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 10);
    return std::string(buffer, ec == std::errc{} ? end : buffer);
}

std::vector<NetworkParams> sweep_networks(const RunConfig& config)
{
    std::vector<NetworkParams> networks;
    const SweepSpec& spec = config.sweep;
    if (spec.variable == SweepVariable::nakagami_pair) {
        for (const auto& pair : spec.pairs) {
            NetworkParams net = config.network;
            for (std::size_t i = 0; i < net.tiers.size(); ++i) net.tiers[i].nakagami_m = pair.at(i);
            networks.push_back(std::move(net));
        }
        return networks;
    }
    for (double db : spec.grid()) {
        NetworkParams net = config.network;
        if (spec.variable == SweepVariable::beta1_db)
            net.tiers.front().threshold = db_to_linear(db);
        else
            net.noise = db_to_linear(db);
        networks.push_back(std::move(net));
    }
    return networks;
}

SweepTable run_sweep(const RunConfig& config, const RunOptions& options)
{
    const bool rate = options.rate || config.rate;
    const double unit = options.bits ? 1.0 / std::numbers::ln2 : 1.0;
    const SweepSpec& spec = config.sweep;

    SimConfig sim = config.sim;
    if (options.seed) sim.seed = *options.seed;
    if (options.threads) sim.threads = *options.threads;

    const std::vector<NetworkParams> networks = sweep_networks(config);
    const std::vector<std::string> labels = sweep_labels(config);
    for (const auto& net : networks) require_valid(net);

    SweepTable table;
    table.columns.push_back(spec.variable == SweepVariable::nakagami_pair ? "nakagami_m" : "sweep_db");
    for (SweepMethod m : spec.methods) table.columns.emplace_back(to_string(m));
    if (spec.has(SweepMethod::mc)) table.columns.emplace_back("mc_se");

    // Monte Carlo: one simulation for threshold / noise sweeps (the snapshots
    // do not depend on either), one per point when the fading shape changes.
    std::vector<SweepPoint> mc_points;
    if (spec.has(SweepMethod::mc)) {
        auto absorb = [&](const SweepResult& result, std::size_t first) {
            for (std::size_t v = 0; v < result.points.size(); ++v) {
                mc_points.push_back(result.points[v]);
                if (options.radius_check) {
                    const auto& drift = result.coverage_drift[v];
                    table.radius_checks.push_back({labels[first + v], result.region_radius,
                                                   result.points[v].coverage.mean, result.doubled[v].coverage.mean,
                                                   drift.mean, drift.std_error});
                }
            }
        };
        if (spec.variable == SweepVariable::nakagami_pair) {
            for (std::size_t j = 0; j < networks.size(); ++j) {
                const auto& net = networks[j];
                absorb(mc_sweep(net, sim, {{thresholds_of(net), net.noise}}, options.radius_check), j);
            }
        } else {
            std::vector<SweepVariant> variants;
            for (const auto& net : networks) variants.push_back({thresholds_of(net), net.noise});
            absorb(mc_sweep(config.network, sim, variants, options.radius_check), 0);
        }
    }

    for (std::size_t j = 0; j < networks.size(); ++j) {
        const NetworkParams& net = networks[j];
        OutputRow row{labels[j], {}};
        for (SweepMethod method : spec.methods) {
            switch (method) {
            case SweepMethod::closed:
                if (rate) {
                    row.values.push_back(average_rate(net).value * unit);
                } else {
                    const CoverageResult result = coverage_probability(net);
                    table.loss_of_significance = table.loss_of_significance || result.loss_of_significance;
                    row.values.push_back(result.value);
                }
                break;
            case SweepMethod::rayleigh:
                row.values.push_back(rate ? rate_rayleigh(net).value * unit : coverage_rayleigh(net).value);
                break;
            case SweepMethod::reference:
                row.values.push_back(rate ? rate_reference(net).value * unit : coverage_reference(net).value);
                break;
            case SweepMethod::mc:
                break;
            }
        }
        if (spec.has(SweepMethod::mc)) {
            const SweepPoint& point = mc_points[j];
            if (rate) {
                if (point.rate.n_samples == 0 || !std::isfinite(point.rate.mean))
                    throw NumericalError("Monte Carlo: no covered trial at sweep point " + labels[j]);
                row.values.push_back(point.rate.mean * unit);
                row.values.push_back(point.rate.std_error * unit);
            } else {
                row.values.push_back(point.coverage.mean);
                row.values.push_back(point.coverage.std_error);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_csv(std::ostream& out, const SweepTable& table)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        out << row.sweep_label;
        for (double v : row.values) out << ',' << format_number(v);
        out << '\n';
    }
}

} // namespace hetcov
