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
 * Deterministic classical multi-map walks: a chain of identical unit cells,
 * an intra-cell area-preserving map, then half of each cell moved one cell
 * left and the other half one cell right.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

struct RotationMap {};
struct BakerMap {};
struct HarperMap {
    double g = 1.0;
    double tau = 1.0;
};

using ClassicalMap = std::variant<RotationMap, BakerMap, HarperMap>;

PhasePoint apply(const ClassicalMap& map, PhasePoint pt);

/// Horizontal splits on p, Vertical on q. Points with coordinate >= threshold
/// move one cell left, the rest one cell right.
struct CellPartition {
    enum class Orientation { Horizontal, Vertical };
    Orientation orientation = Orientation::Horizontal;
    double threshold = 0.5;
};

struct CellPoint {
    std::size_t cell = 0;
    PhasePoint x;

    friend bool operator==(const CellPoint&, const CellPoint&) = default;
};

struct PhaseEnsemble {
    std::size_t L = 0;
    std::uint64_t seed = 0;
    std::vector<CellPoint> points;
};

/// n_points seeded uniform random points in one cell. Coordinates are drawn
/// on the 2^-53 grid, where 1 - x is exact. Output does not depend on the
/// number of worker threads.
PhaseEnsemble uniform_fill(std::size_t L, std::size_t cell, std::size_t n_points, std::uint64_t seed);

/// side x side cell-centred grid, e.g. side = 1024 for a dyadic fill.
PhaseEnsemble grid_fill(std::size_t L, std::size_t cell, std::size_t side);

PhaseEnsemble multi_map_step(const PhaseEnsemble& ens, const ClassicalMap& map, const CellPartition& partition);
void advance(PhaseEnsemble& ens, const ClassicalMap& map, const CellPartition& partition, std::size_t steps = 1);

SiteDistribution classical_site_distribution(const PhaseEnsemble& ens, std::size_t time = 0);

/// n_trajectories seeded initial conditions, each iterated n_steps times;
/// returns every iterate (trajectory-major).
std::vector<PhasePoint> phase_portrait(const ClassicalMap& map, std::size_t n_trajectories, std::size_t n_steps,
                                       std::uint64_t seed);

WalkTimeSeries classical_msd_series(const ClassicalMap& map, const CellPartition& partition, std::size_t L,
                                    std::size_t t_max, std::size_t n_points, std::uint64_t seed,
                                    bool keep_distributions = false);

/// Same, starting from a caller-provided ensemble.
WalkTimeSeries classical_msd_series(PhaseEnsemble ens, const ClassicalMap& map, const CellPartition& partition,
                                    std::size_t t_max, bool keep_distributions = false);

}  // namespace qwalk
