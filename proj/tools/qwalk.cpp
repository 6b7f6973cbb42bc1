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

// qwalk: coined quantum walk experiments from the command line.
//
//   qwalk run --coin dft --M 10 --L 100 --t-max 40
//   qwalk sweep --coin harper --M 40 --sweep g=0.05,2 --sweep phi=0,0.2
//   qwalk phase-space --g 1 --n-trajectories 100 --n-steps 1000

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/experiment.hpp"

namespace {

struct RawOptions {
    std::string config;
    std::vector<std::pair<std::string, CLI::Option*>> values;
    CLI::Option* classical = nullptr;
    CLI::Option* emit = nullptr;
    std::vector<std::string> sweeps;
};

void add_value(CLI::App* app, RawOptions& raw, std::vector<std::string>& storage, std::size_t slot,
               const std::string& flag, const std::string& key, const std::string& help) {
    raw.values.emplace_back(key, app->add_option(flag, storage[slot], help));
}

qwalk::KeyValues collect(const RawOptions& raw, const std::vector<std::string>& storage) {
    qwalk::KeyValues kv;
    if (!raw.config.empty()) kv = qwalk::read_key_values_file(raw.config);
    for (std::size_t i = 0; i < raw.values.size(); ++i) {
        if (raw.values[i].second->count() > 0) kv[raw.values[i].first] = storage[i];
    }
    if (raw.classical != nullptr && raw.classical->count() > 0) kv["classical"] = "true";
    if (raw.emit != nullptr && raw.emit->count() > 0) kv["emit_distributions"] = "true";
    for (const auto& s : raw.sweeps) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw qwalk::ConfigError("sweep", "expected NAME=v1,v2,..., got '" + s + "'");
        kv["sweep." + s.substr(0, eq)] = s.substr(eq + 1);
    }
    return kv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coined quantum walks with quantized-map coins"};
    app.require_subcommand(1);

    struct Walk {
        CLI::App* cmd;
        RawOptions raw;
        std::vector<std::string> storage = std::vector<std::string>(16);
    };
    std::vector<Walk> walks;
    walks.reserve(2);

    for (const char* name : {"run", "sweep"}) {
        auto* cmd = app.add_subcommand(name, std::string(name) == "run" ? "Run one walk or a parameter sweep"
                                                                         : "Alias of run with --sweep axes");
        walks.push_back(Walk{cmd, {}, {}});
        auto& w = walks.back();
        w.storage.resize(16);
        cmd->add_option("--config", w.raw.config, "Key = value configuration file (command line wins)");
        std::size_t i = 0;
        add_value(cmd, w.raw, w.storage, i++, "--coin", "coin", "dft | harper | baker");
        add_value(cmd, w.raw, w.storage, i++, "--M", "M", "Coin dimension (even)");
        add_value(cmd, w.raw, w.storage, i++, "--L", "L", "Number of lattice sites");
        add_value(cmd, w.raw, w.storage, i++, "--g", "g", "Harper kick strength");
        add_value(cmd, w.raw, w.storage, i++, "--tau", "tau", "Harper kick period (default 1)");
        add_value(cmd, w.raw, w.storage, i++, "--phi", "phi", "Boundary phase in [0,1) (default 0, baker 0.5)");
        add_value(cmd, w.raw, w.storage, i++, "--t-max", "t_max", "Last time step (default 40)");
        add_value(cmd, w.raw, w.storage, i++, "--partition", "partition", "Classical cell split: horizontal | vertical");
        add_value(cmd, w.raw, w.storage, i++, "--coin-split", "coin_split",
                  "Coin half moved left: lower-left | lower-right");
        add_value(cmd, w.raw, w.storage, i++, "--format", "format", "csv | json");
        add_value(cmd, w.raw, w.storage, i++, "--out", "out", "Output file (default stdout)");
        add_value(cmd, w.raw, w.storage, i++, "--seed", "seed", "Classical ensemble seed");
        add_value(cmd, w.raw, w.storage, i++, "--n-points", "n_points", "Classical ensemble size");
        w.raw.classical = cmd->add_flag("--classical", "Also run the classical multi-map walk");
        w.raw.emit = cmd->add_flag("--emit-distributions", "Append the full p_l row to every record");
        cmd->add_option("--sweep", w.raw.sweeps, "NAME=v1,v2,... with NAME in M, g, phi, L (repeatable)");
    }

    auto* ps = app.add_subcommand("phase-space", "Emit (q,p) iterates of a classical cell map");
    RawOptions ps_raw;
    std::vector<std::string> ps_storage(8);
    {
        ps->add_option("--config", ps_raw.config, "Key = value configuration file (command line wins)");
        std::size_t i = 0;
        add_value(ps, ps_raw, ps_storage, i++, "--map", "map", "rotation | baker | harper (default harper)");
        add_value(ps, ps_raw, ps_storage, i++, "--g", "g", "Harper kick strength");
        add_value(ps, ps_raw, ps_storage, i++, "--tau", "tau", "Harper kick period");
        add_value(ps, ps_raw, ps_storage, i++, "--n-trajectories", "n_trajectories", "Number of orbits");
        add_value(ps, ps_raw, ps_storage, i++, "--n-steps", "n_steps", "Iterations per orbit");
        add_value(ps, ps_raw, ps_storage, i++, "--seed", "seed", "Initial-condition seed");
        add_value(ps, ps_raw, ps_storage, i++, "--format", "format", "csv | json");
        add_value(ps, ps_raw, ps_storage, i++, "--out", "out", "Output file (default stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qwalk::ExperimentConfig run_config;
    qwalk::PhaseSpaceConfig ps_config;
    bool phase_space = false;
    try {
        if (ps->parsed()) {
            ps_config = qwalk::build_phase_space_config(collect(ps_raw, ps_storage));
            phase_space = true;
        } else {
            for (auto& w : walks) {
                if (w.cmd->parsed()) run_config = qwalk::build_experiment_config(collect(w.raw, w.storage));
            }
        }
    } catch (const qwalk::ConfigError& e) {
        std::cerr << "qwalk: config error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (phase_space) {
            const auto points = qwalk::phase_portrait(ps_config.map, ps_config.n_trajectories, ps_config.n_steps,
                                                      ps_config.seed);
            qwalk::emit(ps_config.out, [&](std::ostream& os) { qwalk::write_phase_space(os, ps_config, points); });
        } else {
            const auto results = qwalk::run_experiment(run_config);
            qwalk::emit(run_config.out, [&](std::ostream& os) {
                if (run_config.format == qwalk::OutputFormat::CSV) {
                    qwalk::write_csv(os, run_config, results);
                } else {
                    qwalk::write_json(os, run_config, results);
                }
            });
        }
    } catch (const std::exception& e) {
        std::cerr << "qwalk: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
