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

/**
 * @file
 * Experiment configuration, sweep execution and CSV/JSON result writers used
 * by the qwalk command-line tool.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/classical.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Invalid configuration; field() names the offending key.
class ConfigError : public std::invalid_argument {
  public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

enum class OutputFormat { CSV, JSON };

/// Flat key -> raw value map; later insertions win.
using KeyValues = std::map<std::string, std::string>;

/// Parses "key = value" lines; '#' starts a comment. Throws ConfigError on
/// lines without '='.
KeyValues parse_key_values(std::string_view text);
KeyValues read_key_values_file(const std::string& path);

struct SweepAxis {
    std::string name;  // one of M, g, phi, L
    std::vector<double> values;
};

struct ClassicalSettings {
    std::size_t n_points = 100000;
    std::uint64_t seed = 1;
    CellPartition partition;
};

struct ExperimentConfig {
    WalkConfig walk;
    std::size_t t_max = 40;
    std::vector<SweepAxis> sweep;
    OutputFormat format = OutputFormat::CSV;
    std::string out;  // empty: standard output
    bool emit_distributions = false;
    std::optional<ClassicalSettings> classical;
};

/// Builds and validates a run configuration. Unknown keys are rejected.
ExperimentConfig build_experiment_config(const KeyValues& kv);

/// The classical counterpart of a coin: rotation for DFT, baker for baker,
/// Harper(g, tau) for Harper.
ClassicalMap classical_limit(const CoinSpec& coin);

struct RunResult {
    std::vector<std::pair<std::string, double>> sweep_point;
    WalkConfig walk;
    WalkTimeSeries quantum;
    std::optional<WalkTimeSeries> classical;
};

/// Every sweep point (Cartesian product, each axis ascending, first axis
/// outermost). Results come back in that order regardless of scheduling.
std::vector<WalkConfig> expand_sweep(const ExperimentConfig& config);
std::vector<RunResult> run_experiment(const ExperimentConfig& config);

/// Resolved parameters, as echoed in output metadata.
std::vector<std::pair<std::string, std::string>> describe(const ExperimentConfig& config);

void write_csv(std::ostream& os, const ExperimentConfig& config, const std::vector<RunResult>& results);
void write_json(std::ostream& os, const ExperimentConfig& config, const std::vector<RunResult>& results);

struct PhaseSpaceConfig {
    ClassicalMap map = HarperMap{};
    std::size_t n_trajectories = 100;
    std::size_t n_steps = 1000;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::CSV;
    std::string out;
};

PhaseSpaceConfig build_phase_space_config(const KeyValues& kv);
std::vector<std::pair<std::string, std::string>> describe(const PhaseSpaceConfig& config);
void write_phase_space(std::ostream& os, const PhaseSpaceConfig& config, const std::vector<PhasePoint>& points);

/// Writes through a temporary sibling file and renames on success, so a
/// failed run leaves no partial file. An empty path writes to stdout.
template <class Writer>
void emit(const std::string& path, Writer&& writer);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

}  // namespace qwalk

#include <filesystem>
#include <fstream>
#include <iostream>

namespace qwalk {

template <class Writer>
void emit(const std::string& path, Writer&& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        std::cout.flush();
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    try {
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            writer(os);
            os.flush();
            if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
        }
        std::filesystem::rename(tmp, target);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

}  // namespace qwalk
