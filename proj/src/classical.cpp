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

#include "qwalk/classical.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr std::size_t kFillChunk = 1 << 16;

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    return std::mt19937_64(seq);
}

// 53 random bits scaled into [0, 1)
double dyadic_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

double partition_coordinate(const CellPartition& partition, PhasePoint pt) {
    return partition.orientation == CellPartition::Orientation::Horizontal ? pt.p : pt.q;
}

}  // namespace

PhasePoint apply(const ClassicalMap& map, PhasePoint pt) {
    struct Visitor {
        PhasePoint pt;
        PhasePoint operator()(const RotationMap&) const { return classical_rotation_step(pt); }
        PhasePoint operator()(const BakerMap&) const { return classical_baker_step(pt); }
        PhasePoint operator()(const HarperMap& h) const { return classical_harper_step(pt, h.g, h.tau); }
    };
    return std::visit(Visitor{pt}, map);
}

PhaseEnsemble uniform_fill(std::size_t L, std::size_t cell, std::size_t n_points, std::uint64_t seed) {
    if (cell >= L) throw std::invalid_argument("uniform_fill: cell outside lattice");
    PhaseEnsemble ens{L, seed, std::vector<CellPoint>(n_points)};
    const auto chunks = static_cast<long long>((n_points + kFillChunk - 1) / kFillChunk);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < chunks; ++c) {
        auto rng = chunk_engine(seed, static_cast<std::uint64_t>(c));
        const std::size_t begin = static_cast<std::size_t>(c) * kFillChunk;
        const std::size_t end = std::min(n_points, begin + kFillChunk);
        for (std::size_t i = begin; i < end; ++i) {
            const double q = dyadic_uniform(rng);
            const double p = dyadic_uniform(rng);
            ens.points[i] = CellPoint{cell, {q, p}};
        }
    }
    return ens;
}

PhaseEnsemble grid_fill(std::size_t L, std::size_t cell, std::size_t side) {
    if (cell >= L) throw std::invalid_argument("grid_fill: cell outside lattice");
    PhaseEnsemble ens{L, 0, {}};
    ens.points.reserve(side * side);
    const double h = 1.0 / static_cast<double>(side);
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
            ens.points.push_back({cell, {(static_cast<double>(i) + 0.5) * h, (static_cast<double>(j) + 0.5) * h}});
        }
    }
    return ens;
}

void advance(PhaseEnsemble& ens, const ClassicalMap& map, const CellPartition& partition, std::size_t steps) {
    const std::size_t L = ens.L;
    const auto n = static_cast<long long>(ens.points.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        CellPoint& pt = ens.points[static_cast<std::size_t>(i)];
        for (std::size_t s = 0; s < steps; ++s) {
            pt.x = apply(map, pt.x);
            if (partition_coordinate(partition, pt.x) >= partition.threshold) {
                pt.cell = (pt.cell + L - 1) % L;
            } else {
                pt.cell = (pt.cell + 1) % L;
            }
        }
    }
}

PhaseEnsemble multi_map_step(const PhaseEnsemble& ens, const ClassicalMap& map, const CellPartition& partition) {
    PhaseEnsemble out = ens;
    advance(out, map, partition, 1);
    return out;
}

SiteDistribution classical_site_distribution(const PhaseEnsemble& ens, std::size_t time) {
    if (ens.points.empty()) {
        throw std::invalid_argument("classical_site_distribution: empty ensemble");
    }
    std::vector<std::size_t> counts(ens.L, 0);
    for (const auto& pt : ens.points) ++counts.at(pt.cell);
    SiteDistribution dist{ens.L, std::vector<double>(ens.L), time};
    const double n = static_cast<double>(ens.points.size());
    for (std::size_t l = 0; l < ens.L; ++l) dist.probs[l] = static_cast<double>(counts[l]) / n;
    return dist;
}

std::vector<PhasePoint> phase_portrait(const ClassicalMap& map, std::size_t n_trajectories, std::size_t n_steps,
                                       std::uint64_t seed) {
    if (n_trajectories == 0 || n_steps == 0) {
        throw std::invalid_argument("phase_portrait: trajectory and step counts must be positive");
    }
    std::vector<PhasePoint> out(n_trajectories * n_steps);
    auto rng = chunk_engine(seed, 0);
    std::vector<PhasePoint> starts(n_trajectories);
    for (auto& s : starts) {
        const double q = dyadic_uniform(rng);
        s = {q, dyadic_uniform(rng)};
    }
    const auto nt = static_cast<long long>(n_trajectories);
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < nt; ++t) {
        PhasePoint pt = starts[static_cast<std::size_t>(t)];
        const std::size_t base = static_cast<std::size_t>(t) * n_steps;
        for (std::size_t s = 0; s < n_steps; ++s) {
            pt = apply(map, pt);
            out[base + s] = pt;
        }
    }
    return out;
}

WalkTimeSeries classical_msd_series(PhaseEnsemble ens, const ClassicalMap& map, const CellPartition& partition,
                                    std::size_t t_max, bool keep_distributions) {
    if (t_max < 1) throw std::invalid_argument("t_max: must be at least 1");
    WalkTimeSeries series;
    series.append(classical_site_distribution(ens, 0), keep_distributions);
    for (std::size_t t = 1; t <= t_max; ++t) {
        advance(ens, map, partition, 1);
        series.append(classical_site_distribution(ens, t), keep_distributions);
    }
    return series;
}

WalkTimeSeries classical_msd_series(const ClassicalMap& map, const CellPartition& partition, std::size_t L,
                                    std::size_t t_max, std::size_t n_points, std::uint64_t seed,
                                    bool keep_distributions) {
    if (L < 2) throw std::invalid_argument("L: lattice needs at least 2 sites");
    if (n_points == 0) throw std::invalid_argument("n_points: must be positive");
    return classical_msd_series(uniform_fill(L, 0, n_points, seed), map, partition, t_max, keep_distributions);
}

}  // namespace qwalk
