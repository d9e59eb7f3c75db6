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

#include "hetcov/config.hpp"
#include "hetcov/quadrature.hpp"
#include "hetcov/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace {

enum ExitCode { ok = 0, validation = 1, numerical = 2 };

void report_radius_checks(const hetcov::SweepTable& table)
{
    for (const auto& check : table.radius_checks)
        std::cerr << "radius-check point=" << check.sweep_label << " R=" << hetcov::format_number(check.radius)
                  << " mc=" << hetcov::format_number(check.coverage)
                  << " mc_2R=" << hetcov::format_number(check.coverage_doubled)
                  << " drift=" << hetcov::format_number(check.drift)
                  << " drift_se=" << hetcov::format_number(check.drift_se) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coverage probability and average rate of a K-tier downlink HetNet under Nakagami-m fading"};

    std::string config_path;
    std::string output_path;
    hetcov::RunOptions options;
    std::uint64_t seed = 0;
    unsigned threads = 0;

    app.add_option("--config", config_path, "JSON configuration file")->required();
    app.add_option("--output", output_path, "write the CSV here instead of stdout");
    auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo seed (overrides sim.seed)");
    auto* threads_opt = app.add_option("--threads", threads, "Monte Carlo worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--rate", options.rate, "emit the average rate of a covered user instead of coverage");
    app.add_flag("--bits", options.bits, "report rates in bits instead of nats");
    app.add_flag("--radius-check", options.radius_check,
                 "also simulate twice the region radius and report the coverage drift on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : validation;
    }
    if (*seed_opt) options.seed = seed;
    if (*threads_opt) options.threads = threads;

    try {
        const hetcov::RunConfig config = hetcov::load_config(config_path);
        if (auto warning = hetcov::sim_warning(config.sim); warning && config.sweep.has(hetcov::SweepMethod::mc))
            std::cerr << "warning: " << *warning << '\n';

        const hetcov::SweepTable table = hetcov::run_sweep(config, options);
        if (table.loss_of_significance)
            std::cerr << "warning: alternating coverage sum lost more than 6 significant digits\n";

        if (output_path.empty()) {
            hetcov::write_csv(std::cout, table);
        } else {
            std::ofstream out(output_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << output_path << '\n';
                return validation;
            }
            hetcov::write_csv(out, table);
        }

        if (options.radius_check) {
            report_radius_checks(table);
            for (const auto& check : table.radius_checks) {
                if (std::abs(check.drift) > hetcov::radius_drift_tolerance) {
                    std::cerr << "error: radius doubling moved coverage by " << hetcov::format_number(check.drift)
                              << " at point " << check.sweep_label << '\n';
                    return numerical;
                }
            }
        }
        return ok;
    } catch (const hetcov::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return validation;
    } catch (const hetcov::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return validation;
    } catch (const hetcov::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    } catch (const hetcov::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    }
}
