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


// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//
//     acceptance                 run every criterion
//     acceptance --criterion N   run criterion N only (exit status reflects it)

#include "oracles.hpp"

#include "hetcov/analysis.hpp"
#include "hetcov/config.hpp"
#include "hetcov/mcsim.hpp"
#include "hetcov/pla.hpp"
#include "hetcov/specfun.hpp"
#include "hetcov/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hetcov;

namespace {

// Criterion 1
constexpr double pla_loss_tolerance = 0.005;
constexpr double c1_noise_db[] = {-30.0, -20.0, -10.0, 0.0}; // sigma^2 from 1e-3 to 1
// Criterion 2
constexpr double mc_band_se = 3.0;
constexpr double mc_min_fraction = 0.95;
// Criterion 3
constexpr double corollary_coverage_tolerance = 1e-10;
constexpr double corollary_rate_tolerance = 1e-12;
constexpr int corollary_configs = 50;
// Criterion 4
constexpr double rate_consistency_tolerance = 1e-6;
constexpr int rate_configs = 50;
// Criterion 5
constexpr double gamma_quadrature_tolerance = 1e-10;
constexpr double bell_tolerance = 1e-12;
constexpr double arctan_tolerance = 1e-10;
constexpr double hyp2f1_tolerance = 1e-8;
// Criterion 6
constexpr double stress_grid_tolerance = 0.05;
constexpr double figure_set_tolerance = 0.02;
constexpr double spot_tolerance = 1e-4;
// Criterion 7
constexpr double poisson_ratio_low = 0.95;
constexpr double poisson_ratio_high = 1.05;
constexpr double radius_drift_limit = 1e-3;
constexpr std::uint64_t radius_geometries = 1000;
// Criterion 8
constexpr double direction_band_se = 3.0;
constexpr std::uint64_t direction_geometries = 40000;

const std::filesystem::path source_dir = HETCOV_SOURCE_DIR;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void check(bool ok, const std::string& line)
    {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok    " : "FAIL  ") + line);
    }
};

std::string fmt(const char* format, auto... args)
{
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

RunConfig figure_config(const std::string& name)
{
    return load_config(source_dir / "configs" / (name + ".json"));
}

const char* figure_names[] = {"fig1_m11", "fig1_m23", "fig2_rayleigh", "fig3_rate_m11", "fig3_rate_m23"};

// ---------------------------------------------------------------------------

Outcome pla_coverage_loss()
{
    Outcome out;
    const std::vector<std::pair<unsigned, unsigned>> shapes{{1, 1}, {2, 2}, {2, 3}, {3, 3}};
    SweepSpec beta_grid;
    beta_grid.start = 1.0;
    beta_grid.stop = 20.0;
    beta_grid.points = 10;
    int points = 0;
    for (auto [m1, m2] : shapes) {
        double worst = 0.0, worst_beta = 0.0, worst_noise = 0.0;
        for (double noise_db : c1_noise_db)
            for (double beta1_db : beta_grid.grid()) {
                const auto p = oracle::figure_network(beta1_db, 1.0, noise_db, m1, m2);
                const double err = rel(coverage_probability(p).value, coverage_reference(p).value);
                ++points;
                if (err > worst) {
                    worst = err;
                    worst_beta = beta1_db;
                    worst_noise = noise_db;
                }
            }
        out.check(worst <= pla_loss_tolerance,
                  fmt("M=[%u,%u]: worst |closed-reference|/reference = %.4f%% (beta1 %.3g dB, noise %.3g dB)", m1,
                      m2, 100.0 * worst, worst_beta, worst_noise));
    }
    out.summary = fmt("%d points, tolerance %.2f%%", points, 100.0 * pla_loss_tolerance);
    return out;
}

Outcome monte_carlo_agreement()
{
    Outcome out;
    int figures_ok = 0;
    for (const char* name : figure_names) {
        const RunConfig config = figure_config(name);
        const SweepTable table = run_sweep(config);
        const auto column = [&](const std::string& c) {
            return static_cast<std::size_t>(std::find(table.columns.begin(), table.columns.end(), c) -
                                            table.columns.begin()) - 1;
        };
        const std::size_t closed = column("closed"), mc = column("mc"), se = column("mc_se");
        int inside = 0;
        std::string misses;
        for (const auto& row : table.rows) {
            const double diff = row.values[closed] - row.values[mc];
            const double z = diff / row.values[se];
            if (std::abs(z) <= mc_band_se)
                ++inside;
            else
                misses += fmt(" %s(%+.1f se)", row.sweep_label.c_str(), z);
        }
        const double fraction = static_cast<double>(inside) / static_cast<double>(table.rows.size());
        const bool ok = fraction >= mc_min_fraction;
        figures_ok += ok;
        out.check(ok, fmt("%s %s: %d/%zu points within %.0f se%s%s", name, config.rate ? "R" : "P_c", inside,
                          table.rows.size(), mc_band_se, misses.empty() ? "" : "; outside:", misses.c_str()));
    }
    out.summary = fmt("%d/5 curves with >= %.0f%% of points inside the band", figures_ok, 100.0 * mc_min_fraction);
    return out;
}

Outcome corollary_identities()
{
    Outcome out;
    std::mt19937_64 rng(2026);
    double worst_cov = 0.0, worst_rate = 0.0;
    for (int n = 0; n < corollary_configs; ++n) {
        const NetworkParams p = oracle::random_network(rng, 1);
        worst_cov = std::max(worst_cov, rel(coverage_rayleigh(p).value, coverage_probability(p).value));
        worst_rate = std::max(worst_rate, rel(rate_rayleigh(p).value, average_rate(p).value));
    }
    out.check(worst_cov <= corollary_coverage_tolerance,
              fmt("coverage_rayleigh vs coverage_probability: worst rel %.2e", worst_cov));
    out.check(worst_rate <= corollary_rate_tolerance, fmt("rate_rayleigh vs average_rate: worst rel %.2e", worst_rate));
    out.summary = fmt("%d random Rayleigh networks", corollary_configs);
    return out;
}

Outcome rate_consistency()
{
    Outcome out;
    std::mt19937_64 rng(4242);
    double worst = 0.0;
    for (int n = 0; n < rate_configs; ++n) {
        const NetworkParams p = oracle::random_network(rng, 4);
        worst = std::max(worst, rel(rate_reference(p).value, average_rate(p).value));
    }
    out.check(worst <= rate_consistency_tolerance, fmt("average_rate vs rate_reference: worst rel %.2e", worst));
    out.summary = fmt("%d random networks, M up to 4", rate_configs);
    return out;
}

Outcome special_functions()
{
    Outcome out;
    double worst_gamma = 0.0;
    for (double s : {0.25, 0.5, 1.0, 1.5, 2.5, 4.0, 7.5, 12.0, 20.0})
        for (double x : {1e-3, 0.1, 0.7, 1.7, 4.0, 9.0, 25.0, 60.0}) {
            const double q = oracle::integrate_finite(
                [s](double t) { return t == 0.0 ? 0.0 : std::pow(t, s - 1.0) * std::exp(-t); }, 0.0, x);
            worst_gamma = std::max(worst_gamma, rel(lower_incomplete_gamma(s, x), q));
        }
    out.check(worst_gamma <= gamma_quadrature_tolerance, fmt("gamma(s,x) vs tanh-sinh: worst rel %.2e", worst_gamma));

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> value(-2.0, 2.0);
    double worst_bell = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> xs(9);
        for (double& x : xs) x = value(rng);
        for (unsigned l = 0; l <= 8; ++l)
            for (unsigned r = 0; r <= l; ++r) {
                const double brute = oracle::bell_bruteforce(l, r, xs);
                const double got = partial_bell(l, r, BellArguments(l, r, {xs.begin(), xs.begin() + (l - r + 1)}));
                worst_bell = std::max(worst_bell, std::abs(got - brute) / std::max(1.0, std::abs(brute)));
            }
    }
    out.check(worst_bell <= bell_tolerance, fmt("Bell vs partition enumeration, l <= 8: worst %.2e", worst_bell));

    double worst_scaling = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned l = std::uniform_int_distribution<unsigned>(0, 8)(rng);
        const unsigned r = std::uniform_int_distribution<unsigned>(0, l)(rng);
        const double a = value(rng), b = value(rng);
        std::vector<double> xs(l - r + 1), scaled(l - r + 1);
        for (std::size_t t = 0; t < xs.size(); ++t) {
            xs[t] = value(rng);
            scaled[t] = a * std::pow(b, static_cast<double>(t + 1)) * xs[t];
        }
        const double lhs = partial_bell(l, r, BellArguments(l, r, scaled));
        const double rhs = std::pow(a, r) * std::pow(b, l) * partial_bell(l, r, BellArguments(l, r, xs));
        worst_scaling = std::max(worst_scaling, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    out.check(worst_scaling <= bell_tolerance, fmt("Bell scaling law: worst %.2e", worst_scaling));

    const double arctan = std::abs(hyp2f1_rate(4.0, 1.0) - std::numbers::pi / 4.0);
    out.check(arctan <= arctan_tolerance, fmt("2F1 at alpha=4, beta=1 vs pi/4: %.2e", arctan));

    double worst_hyp = 0.0;
    for (double alpha : {2.5, 3.0, 4.0})
        for (double log_beta = 0.0; log_beta <= 2.0 + 1e-12; log_beta += 0.1) {
            const double beta = std::pow(10.0, log_beta), d = 2.0 / alpha;
            const double tail =
                oracle::integrate_half_line([=](double u) { return std::pow(beta + u, -d) / (1.0 + beta + u); });
            worst_hyp = std::max(worst_hyp, rel(hyp2f1_rate(alpha, beta), d * std::pow(beta, d) * tail));
        }
    out.check(worst_hyp <= hyp2f1_tolerance, fmt("2F1 vs tail-integral quadrature: worst rel %.2e", worst_hyp));
    out.summary = "gamma, Bell, 2F1";
    return out;
}

// Every (U, V, exponent) the coverage kernel evaluates for a network.
std::vector<std::array<double, 3>> kernel_arguments(const NetworkParams& p)
{
    std::vector<std::array<double, 3>> args;
    const double a = interference_constant(p);
    unsigned largest = 1;
    for (const auto& t : p.tiers) largest = std::max(largest, t.nakagami_m);
    for (unsigned k = 0; k < largest; ++k)
        for (unsigned l = 0; l <= k; ++l)
            for (unsigned r = (l == 0 ? 0 : 1); r <= l; ++r)
                args.push_back({p.noise, a, r + p.alpha / 2.0 * (k - l)});
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    return args;
}

Outcome gamma_kernel_accuracy()
{
    Outcome out;
    double worst = 0.0;
    std::string worst_at;
    int over = 0, total = 0;
    for (double alpha : {2.5, 3.0, 3.5, 4.0})
        for (int n = 0; n <= 8; ++n)
            for (int iu = 0; iu <= 4; ++iu)
                for (int iv = 0; iv <= 4; ++iv) {
                    const double U = std::pow(10.0, -3.0 + iu), V = std::pow(10.0, -2.0 + iv), p = n / 2.0;
                    const double err =
                        rel(approx_gamma_kernel_integral(U, V, p, alpha), exact_gamma_kernel_integral(U, V, p, alpha));
                    ++total;
                    over += err > stress_grid_tolerance;
                    if (err > worst) {
                        worst = err;
                        worst_at = fmt("alpha=%g n=%d U=%g V=%g", alpha, n, U, V);
                    }
                }
    out.check(worst <= stress_grid_tolerance,
              fmt("stress grid: worst rel %.2f%% at %s; %d/%d points above %.0f%%", 100.0 * worst, worst_at.c_str(),
                  over, total, 100.0 * stress_grid_tolerance));

    for (const char* name : figure_names) {
        double figure_worst = 0.0;
        std::string at;
        int count = 0;
        for (const auto& net : sweep_networks(figure_config(name)))
            for (const auto& [U, V, p] : kernel_arguments(net)) {
                const double err = rel(approx_gamma_kernel_integral(U, V, p, net.alpha),
                                       exact_gamma_kernel_integral(U, V, p, net.alpha));
                ++count;
                if (err > figure_worst) {
                    figure_worst = err;
                    at = fmt("sigma^2=%g A=%.4g exponent=%g", U, V, p);
                }
            }
        out.check(figure_worst <= figure_set_tolerance,
                  fmt("%s kernel arguments (%d): worst rel %.3f%% at %s", name, count, 100.0 * figure_worst, at.c_str()));
    }

    const double exact = exact_gamma_kernel_integral(1.0, 1.0, 0.0, 4.0);
    const double approx = approx_gamma_kernel_integral(1.0, 1.0, 0.0, 4.0);
    out.check(std::abs(exact - 0.545641) <= spot_tolerance && std::abs(approx - 0.53944) <= spot_tolerance,
              fmt("spot U=V=1, n=0, alpha=4: exact %.6f, approx %.6f (%.2f%% low)", exact, approx,
                  100.0 * (exact - approx) / exact));
    out.summary = fmt("stress grid <= %.0f%%, figure set <= %.0f%%, spot values", 100.0 * stress_grid_tolerance,
                      100.0 * figure_set_tolerance);
    return out;
}

Outcome simulator_validity()
{
    Outcome out;
    NetworkParams unit{3.0, 1.0, {{1.0, 1.0, 2.0, 1}}};
    SimConfig sim;
    sim.region_radius = std::sqrt(100.0 / std::numbers::pi);
    std::vector<double> counts;
    std::size_t inner = 0, points = 0;
    for (int g = 0; g < 10000; ++g) {
        const auto r = sample_geometry(unit, sim, g);
        counts.push_back(static_cast<double>(r.size()));
        for (double d : r.distances[0]) {
            inner += d <= sim.region_radius / 2.0;
            ++points;
        }
    }
    double mean = 0.0, var = 0.0;
    for (double c : counts) mean += c;
    mean /= static_cast<double>(counts.size());
    for (double c : counts) var += (c - mean) * (c - mean);
    var /= static_cast<double>(counts.size() - 1);
    out.check(var / mean >= poisson_ratio_low && var / mean <= poisson_ratio_high,
              fmt("Poisson counts at lambda pi R^2 = 100: mean %.3f, variance/mean %.4f", mean, var / mean));
    const double fraction = static_cast<double>(inner) / static_cast<double>(points);
    const double se = std::sqrt(0.25 * 0.75 / static_cast<double>(points));
    out.check(std::abs(fraction - 0.25) <= 4.0 * se,
              fmt("fraction of distances within R/2: %.5f (expected 0.25, se %.1e)", fraction, se));

    RunConfig small = figure_config("fig1_m23");
    small.sim.n_geometry = 300;
    small.sim.n_fading = 30;
    std::vector<std::string> csv;
    for (unsigned threads : {1u, 2u, 4u, 7u}) {
        RunOptions options;
        options.threads = threads;
        std::ostringstream text;
        write_csv(text, run_sweep(small, options));
        csv.push_back(text.str());
    }
    out.check(std::all_of(csv.begin(), csv.end(), [&](const std::string& s) { return s == csv.front(); }),
              "CSV bit-identical for 1, 2, 4 and 7 threads");

    for (const char* name : {"fig1_m11", "fig1_m23", "fig2_rayleigh"}) {
        RunConfig config = figure_config(name);
        config.sim.n_geometry = radius_geometries;
        config.sweep.methods = {SweepMethod::mc};
        RunOptions options;
        options.radius_check = true;
        const SweepTable table = run_sweep(config, options);
        double worst = 0.0, worst_se = 0.0;
        for (const auto& c : table.radius_checks)
            if (std::abs(c.drift) >= worst) {
                worst = std::abs(c.drift);
                worst_se = c.drift_se;
            }
        out.check(worst < radius_drift_limit, fmt("%s: radius doubling %.3g -> %.3g, worst |drift| %.2e (se %.1e)",
                                                  name, table.radius_checks.front().radius,
                                                  2.0 * table.radius_checks.front().radius, worst, worst_se));
    }
    out.summary = "Poisson law, disk law, thread determinism, radius doubling";
    return out;
}

Outcome figure_shapes()
{
    Outcome out;
    for (auto [m1, m2] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
        double previous = 1.0, worst_rise = 0.0;
        for (int j = 0; j <= 190; ++j) {
            const double v = coverage_probability(oracle::figure_network(1.0 + 0.1 * j, 1.0, 0.0, m1, m2)).value;
            worst_rise = std::max(worst_rise, v - previous);
            previous = v;
        }
        out.check(worst_rise <= 0.0,
                  fmt("P_c non-increasing in beta1 over 1..20 dB, M=[%u,%u] (largest step up %.2e)", m1, m2, worst_rise));
    }
    {
        const RunConfig fig2 = figure_config("fig2_rayleigh");
        NetworkParams p = fig2.network;
        double previous = 1.0, worst_rise = 0.0;
        for (double noise_db = fig2.sweep.start; noise_db <= fig2.sweep.stop + 1e-9; noise_db += 0.25) {
            p.noise = db_to_linear(noise_db);
            const double v = coverage_probability(p).value;
            worst_rise = std::max(worst_rise, v - previous);
            previous = v;
        }
        out.check(worst_rise <= 0.0, fmt("Rayleigh P_c non-increasing in sigma^2 over %g..%g dB (largest step up %.2e)",
                                         fig2.sweep.start, fig2.sweep.stop, worst_rise));
    }

    // Direction of the fading-shape effect, read off the simulator first.
    SimConfig sim;
    sim.n_geometry = direction_geometries;
    sim.n_fading = 100;
    auto variants_for = [](const NetworkParams& p, std::vector<double> noise_db) {
        std::vector<SweepVariant> v;
        for (double n : noise_db) v.push_back({{p.tiers[0].threshold, p.tiers[1].threshold}, db_to_linear(n)});
        return v;
    };
    const auto rayleigh = oracle::figure_network(5.0, 1.0, 0.0, 1, 1);
    const auto base = mc_sweep(rayleigh, sim, variants_for(rayleigh, {0.0, 20.0}));
    struct Case {
        unsigned m1, m2;
        double noise_db;
        std::size_t base_index;
    };
    for (const Case c : {Case{2, 3, 0.0, 0}, Case{3, 3, 20.0, 1}}) {
        const auto other = oracle::figure_network(5.0, 1.0, c.noise_db, c.m1, c.m2);
        const auto run = mc_sweep(other, sim, variants_for(other, {c.noise_db}));
        const Estimate& a = base.points[c.base_index].coverage;
        const Estimate& b = run.points[0].coverage;
        const double mc_diff = b.mean - a.mean;
        const double mc_se = std::hypot(a.std_error, b.std_error);
        const double closed_diff = coverage_probability(other).value -
                                   coverage_probability(oracle::figure_network(5.0, 1.0, c.noise_db, 1, 1)).value;
        const bool resolved = std::abs(mc_diff) > direction_band_se * mc_se;
        const bool agrees = resolved && (mc_diff > 0) == (closed_diff > 0);
        out.check(agrees, fmt("M=[1,1] -> [%u,%u] at beta1 5 dB, noise %g dB: MC %+.4f (se %.4f), closed %+.4f", c.m1,
                              c.m2, c.noise_db, mc_diff, mc_se, closed_diff));
    }
    out.summary = "monotone curves, fading-shape direction confirmed by simulation";
    return out;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
    {"PLA coverage loss within 0.5% of the reference", pla_coverage_loss},
    {"closed forms inside the Monte Carlo band", monte_carlo_agreement},
    {"Rayleigh corollaries are identities", corollary_identities},
    {"closed-form rate equals the CCDF integral", rate_consistency},
    {"special functions", special_functions},
    {"gamma-kernel approximation accuracy", gamma_kernel_accuracy},
    {"simulator validity", simulator_validity},
    {"figure shapes", figure_shapes},
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hetcov acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.summary = std::string("threw: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s (%s) [%.1f s]\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first,
                    outcome.summary.c_str(), seconds);
        for (const auto& line : outcome.details) std::printf("    %s\n", line.c_str());
        std::fflush(stdout);
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
