// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qwalk {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

double parse_real(const std::string& field, const std::string& text) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError(field, "expected a real number, got '" + text + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(const std::string& field, const std::string& text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(field, "expected a nonnegative integer, got '" + text + "'");
    }
    return value;
}

bool parse_bool(const std::string& field, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError(field, "expected true or false, got '" + text + "'");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::CSV;
    if (text == "json") return OutputFormat::JSON;
    throw ConfigError("format", "expected csv or json, got '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
    return parts;
}

// Applies one named parameter to a walk config, checking its domain.
void set_walk_parameter(WalkConfig& walk, const std::string& field, const std::string& name, double value) {
    if (name == "M") {
        if (value < 2 || value != std::floor(value) || static_cast<long long>(value) % 2 != 0) {
            throw ConfigError(field, "M must be a positive even integer");
        }
        walk.coin.M = static_cast<std::size_t>(value);
    } else if (name == "L") {
        if (value < 2 || value != std::floor(value)) {
            throw ConfigError(field, "L must be an integer >= 2");
        }
        walk.L = static_cast<std::size_t>(value);
    } else if (name == "g") {
        if (!(value >= 0.0)) throw ConfigError(field, "g must be >= 0");
        walk.coin.g = value;
    } else if (name == "phi") {
        if (!(value >= 0.0 && value < 1.0)) throw ConfigError(field, "phi must lie in [0, 1)");
        walk.coin.phi = value;
    } else if (name == "tau") {
        if (!(value > 0.0)) throw ConfigError(field, "tau must be > 0");
        walk.coin.tau = value;
    } else {
        throw ConfigError(field, "unknown parameter '" + name + "'");
    }
}

ClassicalMap parse_map(const std::string& field, const std::string& text, double g, double tau) {
    if (text == "rotation") return RotationMap{};
    if (text == "baker") return BakerMap{};
    if (text == "harper") return HarperMap{g, tau};
    throw ConfigError(field, "expected rotation, baker or harper, got '" + text + "'");
}

std::string map_name(const ClassicalMap& map) {
    if (std::holds_alternative<RotationMap>(map)) return "rotation";
    if (std::holds_alternative<BakerMap>(map)) return "baker";
    return "harper";
}

void reject_unknown(const KeyValues& kv, const std::set<std::string>& known) {
    for (const auto& [key, value] : kv) {
        if (!known.contains(key)) throw ConfigError(key, "unknown configuration key");
    }
}

KeyValues normalized(const KeyValues& kv) {
    KeyValues out;
    for (const auto& [k, v] : kv) out[normalize_key(k)] = trim(v);
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

KeyValues parse_key_values(std::string_view text) {
    KeyValues kv;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        }
        kv[normalize_key(trim(body.substr(0, eq)))] = trim(body.substr(eq + 1));
    }
    return kv;
}

KeyValues read_key_values_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_key_values(ss.str());
}

ExperimentConfig build_experiment_config(const KeyValues& raw) {
    const KeyValues kv = normalized(raw);
    reject_unknown(kv, {"coin", "M", "L", "g", "tau", "phi", "t_max", "partition", "coin_split", "format", "out",
                        "seed", "classical", "n_points", "emit_distributions", "sweep.M", "sweep.L", "sweep.g",
                        "sweep.phi"});
    auto get = [&](const std::string& key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    ExperimentConfig cfg;
    if (const auto* v = get("coin")) {
        try {
            cfg.walk.coin.kind = parse_coin_kind(*v);
        } catch (const std::invalid_argument&) {
            throw ConfigError("coin", "expected dft, harper or baker, got '" + *v + "'");
        }
    }
    // the baker quantization is antiperiodic unless told otherwise
    if (cfg.walk.coin.kind == CoinKind::Baker) cfg.walk.coin.phi = 0.5;
    for (const char* name : {"M", "L", "g", "tau", "phi"}) {
        if (const auto* v = get(name)) set_walk_parameter(cfg.walk, name, name, parse_real(name, *v));
    }
    if (const auto* v = get("t_max")) {
        cfg.t_max = parse_unsigned("t_max", *v);
        if (cfg.t_max < 1) throw ConfigError("t_max", "must be at least 1");
    }
    if (const auto* v = get("coin_split")) {
        if (*v == "lower-left" || *v == "lower_left") {
            cfg.walk.partition = ShiftPartition::LowerHalfLeft;
        } else if (*v == "lower-right" || *v == "lower_right") {
            cfg.walk.partition = ShiftPartition::LowerHalfRight;
        } else {
            throw ConfigError("coin_split", "expected lower-left or lower-right, got '" + *v + "'");
        }
    }
    if (const auto* v = get("format")) cfg.format = parse_format(*v);
    if (const auto* v = get("out")) cfg.out = *v;
    if (const auto* v = get("emit_distributions")) cfg.emit_distributions = parse_bool("emit_distributions", *v);

    const bool classical = get("classical") != nullptr && parse_bool("classical", *get("classical"));
    if (classical) {
        ClassicalSettings cs;
        if (const auto* v = get("n_points")) {
            cs.n_points = parse_unsigned("n_points", *v);
            if (cs.n_points == 0) throw ConfigError("n_points", "must be positive");
        }
        if (const auto* v = get("seed")) cs.seed = parse_unsigned("seed", *v);
        if (const auto* v = get("partition")) {
            if (*v == "horizontal") {
                cs.partition.orientation = CellPartition::Orientation::Horizontal;
            } else if (*v == "vertical") {
                cs.partition.orientation = CellPartition::Orientation::Vertical;
            } else {
                throw ConfigError("partition", "expected horizontal or vertical, got '" + *v + "'");
            }
        }
        cfg.classical = cs;
    }

    for (const char* name : {"M", "g", "phi", "L"}) {
        const std::string field = std::string("sweep.") + name;
        const auto* v = get(field);
        if (v == nullptr) continue;
        SweepAxis axis{name, {}};
        for (const auto& part : split(*v, ',')) {
            if (part.empty()) continue;
            const double value = parse_real(field, part);
            WalkConfig probe = cfg.walk;
            set_walk_parameter(probe, field, name, value);
            axis.values.push_back(value);
        }
        if (axis.values.empty()) throw ConfigError(field, "sweep needs at least one value");
        std::sort(axis.values.begin(), axis.values.end());
        axis.values.erase(std::unique(axis.values.begin(), axis.values.end()), axis.values.end());
        cfg.sweep.push_back(std::move(axis));
    }
    if (cfg.emit_distributions) {
        for (const auto& axis : cfg.sweep) {
            if (axis.name == "L") {
                throw ConfigError("sweep.L", "cannot be combined with emit_distributions (column count would vary)");
            }
        }
    }

    for (const auto& walk : expand_sweep(cfg)) {
        try {
            validate(walk);
        } catch (const std::invalid_argument& e) {
            const std::string what = e.what();
            throw ConfigError(what.substr(0, what.find(':')), what);
        }
    }
    return cfg;
}

ClassicalMap classical_limit(const CoinSpec& coin) {
    switch (coin.kind) {
        case CoinKind::DFT:
            return RotationMap{};
        case CoinKind::Baker:
            return BakerMap{};
        case CoinKind::Harper:
            return HarperMap{coin.g, coin.tau};
    }
    return RotationMap{};
}

std::vector<WalkConfig> expand_sweep(const ExperimentConfig& config) {
    std::vector<WalkConfig> points{config.walk};
    for (const auto& axis : config.sweep) {
        std::vector<WalkConfig> next;
        next.reserve(points.size() * axis.values.size());
        for (const auto& base : points) {
            for (double value : axis.values) {
                WalkConfig w = base;
                set_walk_parameter(w, "sweep." + axis.name, axis.name, value);
                next.push_back(w);
            }
        }
        points = std::move(next);
    }
    return points;
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config) {
    const std::vector<WalkConfig> walks = expand_sweep(config);
    std::vector<RunResult> results(walks.size());

    // sweep point labels, same order as expand_sweep
    std::vector<std::vector<std::pair<std::string, double>>> labels{{}};
    for (const auto& axis : config.sweep) {
        std::vector<std::vector<std::pair<std::string, double>>> next;
        for (const auto& base : labels) {
            for (double value : axis.values) {
                auto l = base;
                l.emplace_back(axis.name, value);
                next.push_back(std::move(l));
            }
        }
        labels = std::move(next);
    }

    for (std::size_t i = 0; i < walks.size(); ++i) {
        RunResult& r = results[i];
        r.sweep_point = labels[i];
        r.walk = walks[i];
        r.quantum = run_time_series(walks[i], config.t_max, config.emit_distributions);
        if (config.classical) {
            const auto& cs = *config.classical;
            r.classical = classical_msd_series(classical_limit(walks[i].coin), cs.partition, walks[i].L,
                                               config.t_max, cs.n_points, cs.seed, config.emit_distributions);
        }
    }
    return results;
}

std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("coin", std::string(to_string(config.walk.coin.kind)));
    out.emplace_back("M", std::to_string(config.walk.coin.M));
    out.emplace_back("L", std::to_string(config.walk.L));
    out.emplace_back("g", format_double(config.walk.coin.g));
    out.emplace_back("tau", format_double(config.walk.coin.tau));
    out.emplace_back("phi", format_double(config.walk.coin.phi));
    out.emplace_back("coin_split",
                     config.walk.partition == ShiftPartition::LowerHalfLeft ? "lower-left" : "lower-right");
    out.emplace_back("t_max", std::to_string(config.t_max));
    out.emplace_back("format", config.format == OutputFormat::CSV ? "csv" : "json");
    out.emplace_back("emit_distributions", config.emit_distributions ? "true" : "false");
    for (const auto& axis : config.sweep) {
        std::string values;
        for (double v : axis.values) values += (values.empty() ? "" : ",") + format_double(v);
        out.emplace_back("sweep." + axis.name, values);
    }
    out.emplace_back("classical", config.classical ? "true" : "false");
    if (config.classical) {
        out.emplace_back("n_points", std::to_string(config.classical->n_points));
        out.emplace_back("seed", std::to_string(config.classical->seed));
        out.emplace_back("partition", config.classical->partition.orientation == CellPartition::Orientation::Horizontal
                                          ? "horizontal"
                                          : "vertical");
    }
    return out;
}

namespace {

void write_csv_series(std::ostream& os, std::size_t run, const WalkConfig& w, const char* dynamics,
                      const WalkTimeSeries& s, bool with_dist) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << run << ',' << to_string(w.coin.kind) << ',' << w.coin.M << ',' << w.L << ','
           << format_double(w.coin.g) << ',' << format_double(w.coin.tau) << ',' << format_double(w.coin.phi) << ','
           << dynamics << ',' << s.times[i] << ',' << format_double(s.msd[i]) << ','
           << format_double(s.entropy[i]) << ',' << format_double(s.pr[i]);
        if (with_dist) {
            for (double p : s.distributions[i].probs) os << ',' << format_double(p);
        }
        os << '\n';
    }
}

nlohmann::json series_json(const WalkTimeSeries& s, bool with_dist) {
    auto records = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        nlohmann::json r{{"time", s.times[i]}, {"msd", s.msd[i]}, {"entropy", s.entropy[i]}, {"pr", s.pr[i]}};
        if (with_dist) r["p"] = s.distributions[i].probs;
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace

void write_csv(std::ostream& os, const ExperimentConfig& config, const std::vector<RunResult>& results) {
    os << "# qwalk run\n";
    for (const auto& [k, v] : describe(config)) os << "# " << k << " = " << v << '\n';
    os << "run,coin,M,L,g,tau,phi,dynamics,time,msd,entropy,pr";
    if (config.emit_distributions) {
        for (std::size_t l = 0; l < config.walk.L; ++l) os << ",p_" << l;
    }
    os << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
        write_csv_series(os, i, results[i].walk, "quantum", results[i].quantum, config.emit_distributions);
        if (results[i].classical) {
            write_csv_series(os, i, results[i].walk, "classical", *results[i].classical, config.emit_distributions);
        }
    }
}

void write_json(std::ostream& os, const ExperimentConfig& config, const std::vector<RunResult>& results) {
    nlohmann::json doc;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : describe(config)) params[k] = v;
    doc["parameters"] = params;
    doc["runs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        nlohmann::json run{{"run", i},
                           {"coin", std::string(to_string(r.walk.coin.kind))},
                           {"M", r.walk.coin.M},
                           {"L", r.walk.L},
                           {"g", r.walk.coin.g},
                           {"tau", r.walk.coin.tau},
                           {"phi", r.walk.coin.phi}};
        run["quantum"] = series_json(r.quantum, config.emit_distributions);
        if (r.classical) run["classical"] = series_json(*r.classical, config.emit_distributions);
        doc["runs"].push_back(std::move(run));
    }
    os << doc.dump(1) << '\n';
}

PhaseSpaceConfig build_phase_space_config(const KeyValues& raw) {
    const KeyValues kv = normalized(raw);
    reject_unknown(kv, {"map", "g", "tau", "n_trajectories", "n_steps", "seed", "format", "out"});
    auto get = [&](const std::string& key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    double g = 1.0;
    double tau = 1.0;
    if (const auto* v = get("g")) {
        g = parse_real("g", *v);
        if (!(g >= 0.0)) throw ConfigError("g", "g must be >= 0");
    }
    if (const auto* v = get("tau")) {
        tau = parse_real("tau", *v);
        if (!(tau > 0.0)) throw ConfigError("tau", "tau must be > 0");
    }
    PhaseSpaceConfig cfg;
    cfg.map = HarperMap{g, tau};
    if (const auto* v = get("map")) cfg.map = parse_map("map", *v, g, tau);
    if (const auto* v = get("n_trajectories")) cfg.n_trajectories = parse_unsigned("n_trajectories", *v);
    if (const auto* v = get("n_steps")) cfg.n_steps = parse_unsigned("n_steps", *v);
    if (cfg.n_trajectories == 0) throw ConfigError("n_trajectories", "must be positive");
    if (cfg.n_steps == 0) throw ConfigError("n_steps", "must be positive");
    if (const auto* v = get("seed")) cfg.seed = parse_unsigned("seed", *v);
    if (const auto* v = get("format")) cfg.format = parse_format(*v);
    if (const auto* v = get("out")) cfg.out = *v;
    return cfg;
}

std::vector<std::pair<std::string, std::string>> describe(const PhaseSpaceConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("map", map_name(config.map));
    if (const auto* h = std::get_if<HarperMap>(&config.map)) {
        out.emplace_back("g", format_double(h->g));
        out.emplace_back("tau", format_double(h->tau));
    }
    out.emplace_back("n_trajectories", std::to_string(config.n_trajectories));
    out.emplace_back("n_steps", std::to_string(config.n_steps));
    out.emplace_back("seed", std::to_string(config.seed));
    out.emplace_back("format", config.format == OutputFormat::CSV ? "csv" : "json");
    return out;
}

void write_phase_space(std::ostream& os, const PhaseSpaceConfig& config, const std::vector<PhasePoint>& points) {
    if (config.format == OutputFormat::CSV) {
        os << "# qwalk phase-space\n";
        for (const auto& [k, v] : describe(config)) os << "# " << k << " = " << v << '\n';
        os << "q,p\n";
        for (const auto& pt : points) os << format_double(pt.q) << ',' << format_double(pt.p) << '\n';
        return;
    }
    nlohmann::json doc;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : describe(config)) params[k] = v;
    doc["parameters"] = params;
    auto arr = nlohmann::json::array();
    for (const auto& pt : points) arr.push_back({pt.q, pt.p});
    doc["points"] = std::move(arr);
    os << doc.dump() << '\n';
}

}  // namespace qwalk
