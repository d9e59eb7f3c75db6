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

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace hetcov {

using nlohmann::json;

namespace {

std::string summarize(const std::string& head, const std::vector<Violation>& violations)
{
    std::string text = head;
    for (const auto& v : violations) text += "\n  " + v.field + ": " + v.message;
    return text;
}

// Collects every problem instead of stopping at the first.
class Reader {
public:
    std::vector<Violation> violations;

    const json* field(const json& object, const std::string& key, const std::string& path, bool required)
    {
        if (!object.is_object()) return nullptr;
        auto it = object.find(key);
        if (it == object.end()) {
            if (required) violations.push_back({path, "missing required field"});
            return nullptr;
        }
        return &*it;
    }

    std::optional<double> number(const json& object, const std::string& key, const std::string& path,
                                 bool required = true)
    {
        const json* value = field(object, key, path, required);
        if (!value) return std::nullopt;
        if (!value->is_number()) {
            violations.push_back({path, "expected a number"});
            return std::nullopt;
        }
        return value->get<double>();
    }

    std::optional<std::uint64_t> count(const json& object, const std::string& key, const std::string& path,
                                       bool required = true)
    {
        const json* value = field(object, key, path, required);
        if (!value) return std::nullopt;
        if (!value->is_number_unsigned()) {
            violations.push_back({path, "expected a non-negative integer"});
            return std::nullopt;
        }
        return value->get<std::uint64_t>();
    }

    void fail(std::string path, std::string message) { violations.push_back({std::move(path), std::move(message)}); }
};

std::optional<SweepVariable> parse_variable(const std::string& name)
{
    if (name == "beta1_db") return SweepVariable::beta1_db;
    if (name == "noise_db") return SweepVariable::noise_db;
    if (name == "nakagami_pair") return SweepVariable::nakagami_pair;
    return std::nullopt;
}

std::optional<SweepMethod> parse_method(const std::string& name)
{
    if (name == "closed") return SweepMethod::closed;
    if (name == "rayleigh") return SweepMethod::rayleigh;
    if (name == "reference") return SweepMethod::reference;
    if (name == "mc") return SweepMethod::mc;
    return std::nullopt;
}

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void read_sweep(Reader& reader, const json& root, RunConfig& config)
{
    const json* sweep = reader.field(root, "sweep", "sweep", true);
    if (!sweep) return;
    if (!sweep->is_object()) {
        reader.fail("sweep", "expected an object");
        return;
    }
    SweepSpec& spec = config.sweep;

    if (const json* variable = reader.field(*sweep, "variable", "sweep.variable", true)) {
        auto parsed = variable->is_string() ? parse_variable(variable->get<std::string>()) : std::nullopt;
        if (parsed)
            spec.variable = *parsed;
        else
            reader.fail("sweep.variable", "expected one of beta1_db, noise_db, nakagami_pair");
    }

    if (spec.variable == SweepVariable::nakagami_pair) {
        const json* pairs = reader.field(*sweep, "pairs", "sweep.pairs", true);
        if (pairs && (!pairs->is_array() || pairs->empty())) {
            reader.fail("sweep.pairs", "expected a non-empty array of per-tier M lists");
        } else if (pairs) {
            for (std::size_t j = 0; j < pairs->size(); ++j) {
                const json& entry = (*pairs)[j];
                const std::string path = "sweep.pairs[" + std::to_string(j) + "]";
                std::vector<unsigned> ms;
                if (entry.is_array())
                    for (const auto& m : entry)
                        if (m.is_number_unsigned()) ms.push_back(m.get<unsigned>());
                if (!entry.is_array() || ms.size() != entry.size() || ms.size() != config.network.tiers.size())
                    reader.fail(path, "expected one positive integer M per tier");
                else if (std::any_of(ms.begin(), ms.end(), [](unsigned m) { return m < 1 || m > max_nakagami_m; }))
                    reader.fail(path, "M must lie in [1, " + std::to_string(max_nakagami_m) + "]");
                spec.pairs.push_back(std::move(ms));
            }
        }
        spec.points = static_cast<unsigned>(spec.pairs.size());
    } else {
        const auto start = reader.number(*sweep, "start", "sweep.start");
        const auto stop = reader.number(*sweep, "stop", "sweep.stop");
        const auto points = reader.count(*sweep, "points", "sweep.points");
        if (start) spec.start = *start;
        if (stop) spec.stop = *stop;
        if (points) spec.points = static_cast<unsigned>(*points);
        if (start && stop && !(*start < *stop)) reader.fail("sweep.start", "start must be below stop");
        if (points && *points < 2) reader.fail("sweep.points", "need at least 2 points");
    }

    if (const json* methods = reader.field(*sweep, "methods", "sweep.methods", true)) {
        if (!methods->is_array() || methods->empty()) {
            reader.fail("sweep.methods", "expected a non-empty array");
        } else {
            for (std::size_t j = 0; j < methods->size(); ++j) {
                const json& m = (*methods)[j];
                auto parsed = m.is_string() ? parse_method(m.get<std::string>()) : std::nullopt;
                if (parsed)
                    spec.methods.push_back(*parsed);
                else
                    reader.fail("sweep.methods[" + std::to_string(j) + "]",
                                "expected one of closed, rayleigh, reference, mc");
            }
            std::sort(spec.methods.begin(), spec.methods.end());
            spec.methods.erase(std::unique(spec.methods.begin(), spec.methods.end()), spec.methods.end());
        }
    }

    if (spec.has(SweepMethod::rayleigh)) {
        auto all_ones = [](const std::vector<unsigned>& ms) {
            return std::all_of(ms.begin(), ms.end(), [](unsigned m) { return m == 1; });
        };
        const bool rayleigh = spec.variable == SweepVariable::nakagami_pair
                                  ? std::all_of(spec.pairs.begin(), spec.pairs.end(), all_ones)
                                  : config.network.all_rayleigh();
        if (!rayleigh) reader.fail("sweep.methods", "rayleigh requires M = 1 in every tier");
    }
    if (spec.variable == SweepVariable::beta1_db && spec.start <= 0.0)
        reader.fail("sweep.start", "beta_1 must exceed 0 dB over the whole sweep");
}

void read_sim(Reader& reader, const json& root, SimConfig& sim)
{
    const json* node = reader.field(root, "sim", "sim", false);
    if (!node) return;
    if (!node->is_object()) {
        reader.fail("sim", "expected an object");
        return;
    }
    if (auto r = reader.number(*node, "region_radius", "sim.region_radius", false)) sim.region_radius = *r;
    if (auto g = reader.count(*node, "n_geometry", "sim.n_geometry", false)) sim.n_geometry = *g;
    if (auto f = reader.count(*node, "n_fading", "sim.n_fading", false)) sim.n_fading = *f;
    if (auto s = reader.count(*node, "seed", "sim.seed", false)) sim.seed = *s;
    if (auto t = reader.count(*node, "threads", "sim.threads", false)) sim.threads = static_cast<unsigned>(*t);
    if (const json* tail = reader.field(*node, "tail_compensation", "sim.tail_compensation", false)) {
        if (tail->is_boolean())
            sim.tail_compensation = tail->get<bool>();
        else
            reader.fail("sim.tail_compensation", "expected true or false");
    }
    for (auto& v : validate(sim)) reader.violations.push_back(std::move(v));
}

} // namespace

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

bool SweepSpec::has(SweepMethod method) const noexcept
{
    return std::find(methods.begin(), methods.end(), method) != methods.end();
}

std::vector<double> SweepSpec::grid() const
{
    std::vector<double> values;
    if (variable == SweepVariable::nakagami_pair) return values;
    for (unsigned j = 0; j < points; ++j)
        values.push_back(j + 1 == points ? stop : start + (stop - start) * j / (points - 1));
    return values;
}

ConfigError::ConfigError(std::string summary, std::vector<Violation> violations)
    : std::runtime_error(summarize(summary, violations)), violations_(std::move(violations))
{
}

std::string_view to_string(SweepVariable variable) noexcept
{
    switch (variable) {
    case SweepVariable::beta1_db: return "beta1_db";
    case SweepVariable::noise_db: return "noise_db";
    case SweepVariable::nakagami_pair: return "nakagami_pair";
    }
    return "unknown";
}

std::string_view to_string(SweepMethod method) noexcept
{
    switch (method) {
    case SweepMethod::closed: return "closed";
    case SweepMethod::rayleigh: return "rayleigh";
    case SweepMethod::reference: return "reference";
    case SweepMethod::mc: return "mc";
    }
    return "unknown";
}

RunConfig parse_config(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("config is not valid JSON", {{line_column(json_text, e.byte), e.what()}});
    }
    if (!root.is_object()) throw ConfigError("config must be a JSON object", {{"$", "expected an object"}});

    Reader reader;
    RunConfig config;
    NetworkParams& net = config.network;

    if (auto alpha = reader.number(root, "alpha", "alpha")) net.alpha = *alpha;
    if (auto noise = reader.number(root, "noise_db", "noise_db")) net.noise = db_to_linear(*noise);

    if (const json* tiers = reader.field(root, "tiers", "tiers", true)) {
        if (!tiers->is_array() || tiers->empty()) {
            reader.fail("tiers", "expected a non-empty array");
        } else {
            for (std::size_t i = 0; i < tiers->size(); ++i) {
                const json& node = (*tiers)[i];
                const std::string path = "tiers[" + std::to_string(i) + "]";
                if (!node.is_object()) {
                    reader.fail(path, "expected an object");
                    continue;
                }
                TierParams tier;
                if (auto v = reader.number(node, "lambda", path + ".lambda")) tier.density = *v;
                if (auto v = reader.number(node, "power", path + ".power")) tier.power = *v;
                if (auto v = reader.number(node, "beta_db", path + ".beta_db")) tier.threshold = db_to_linear(*v);
                if (auto v = reader.count(node, "m", path + ".m", false)) tier.nakagami_m = static_cast<unsigned>(*v);
                net.tiers.push_back(tier);
            }
        }
    }

    if (const json* rate = reader.field(root, "rate", "rate", false)) {
        if (rate->is_boolean())
            config.rate = rate->get<bool>();
        else
            reader.fail("rate", "expected true or false");
    }

    // Field-level problems first; the model check would only repeat them.
    if (reader.violations.empty())
        for (auto& v : validate(net)) {
            if (v.field.ends_with(".beta") || v.field == "noise") v.field += "_db";
            reader.violations.push_back(std::move(v));
        }

    read_sweep(reader, root, config);
    read_sim(reader, root, config.sim);

    if (!reader.violations.empty()) throw ConfigError("invalid configuration", std::move(reader.violations));
    return config;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config", {{path.string(), "file does not exist or is unreadable"}});
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace hetcov
