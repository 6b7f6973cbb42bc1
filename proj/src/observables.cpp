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

#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kEntropyFloor = 1e-300;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

double SiteDistribution::normalization_error() const {
    double total = 0.0;
    for (double p : probs) total += p;
    return std::abs(total - 1.0);
}

SiteDistribution initial_distribution(std::size_t L) {
    SiteDistribution d{L, std::vector<double>(L, 0.0), 0};
    d.probs.at(0) = 1.0;
    return d;
}

std::size_t cyclic_distance(std::size_t l, std::size_t L) { return std::min(l, L - l); }

double msd(const SiteDistribution& dist) {
    double sum = 0.0;
    for (std::size_t l = 0; l < dist.probs.size(); ++l) {
        const auto d = static_cast<double>(cyclic_distance(l, dist.L));
        sum += dist.probs[l] * d * d;
    }
    return sum;
}

double site_entropy(const SiteDistribution& dist) {
    if (dist.L < 2) return 0.0;
    double sum = 0.0;
    for (double p : dist.probs) {
        if (p > kEntropyFloor) sum -= p * std::log(p);
    }
    // rounding can push a delta or uniform distribution a few ulp outside
    return std::clamp(sum / std::log(static_cast<double>(dist.L)), 0.0, 1.0);
}

double participation_ratio(const SiteDistribution& dist) {
    double sq = 0.0;
    for (double p : dist.probs) sq += p * p;
    if (!(sq > 0.0)) {
        throw std::domain_error("participation_ratio: distribution has no weight");
    }
    return 1.0 / (static_cast<double>(dist.L) * sq);
}

void WalkTimeSeries::append(const SiteDistribution& dist, bool keep_distribution) {
    times.push_back(dist.time);
    msd.push_back(qwalk::msd(dist));
    entropy.push_back(site_entropy(dist));
    pr.push_back(participation_ratio(dist));
    if (keep_distribution) distributions.push_back(dist);
}

CoinAveragedWalk::CoinAveragedWalk(const MomentumBlockSet& blocks)
    : CoinAveragedWalk(blocks, ComplexMatrix::Identity(idx(blocks.M()), idx(blocks.M()))) {}

CoinAveragedWalk::CoinAveragedWalk(const MomentumBlockSet& blocks, const ComplexMatrix& coin_basis)
    : blocks_(blocks), propagated_(blocks.L(), coin_basis) {
    const std::size_t L = blocks.L();
    if (coin_basis.rows() != idx(blocks.M()) || coin_basis.cols() != idx(blocks.M())) {
        throw std::invalid_argument("CoinAveragedWalk: coin basis must be M x M");
    }
    if (!(unitarity_defect(coin_basis) < UnitaryMatrix::kUnitarityTolerance)) {
        throw std::invalid_argument("CoinAveragedWalk: coin basis is not orthonormal");
    }
    // site amplitude of |0,beta> evolved: sum_k exp(2 pi i n k/L)/L (E_k^t)_{:,beta}
    const LatticePhases phase(L);
    const double inv_l = 1.0 / static_cast<double>(L);
    inverse_fourier_.resize(idx(L), idx(L));
    for (std::size_t n = 0; n < L; ++n) {
        for (std::size_t k = 0; k < L; ++k) {
            inverse_fourier_(idx(n), idx(k)) = inv_l * phase(static_cast<long long>((n * k) % L));
        }
    }
}

void CoinAveragedWalk::advance(std::size_t steps) {
    const auto L = static_cast<long long>(blocks_.L());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < L; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const ComplexMatrix& block = blocks_.block(kk);
        ComplexMatrix next(propagated_[kk].rows(), propagated_[kk].cols());
        for (std::size_t s = 0; s < steps; ++s) {
            next.noalias() = block * propagated_[kk];
            propagated_[kk].swap(next);
        }
    }
    time_ += steps;
}

SiteDistribution CoinAveragedWalk::distribution() const {
    const std::size_t L = blocks_.L();
    const std::size_t M = blocks_.M();
    const auto cells = idx(M * M);

    ComplexMatrix stacked(idx(L), cells);
    for (std::size_t k = 0; k < L; ++k) {
        stacked.row(idx(k)) = propagated_[k].reshaped().transpose();
    }
    const ComplexMatrix sites = inverse_fourier_ * stacked;

    SiteDistribution dist{L, std::vector<double>(L, 0.0), time_};
    const double inv_m = 1.0 / static_cast<double>(M);
    for (std::size_t n = 0; n < L; ++n) {
        const std::size_t l = (L - n) % L;
        dist.probs[l] = sites.row(idx(n)).squaredNorm() * inv_m;
    }
    return dist;
}

SiteDistribution site_probabilities(const MomentumBlockSet& blocks, std::size_t t) {
    CoinAveragedWalk walk(blocks);
    walk.advance(t);
    return walk.distribution();
}

SiteDistribution site_probabilities(const MomentumBlockSet& blocks, std::size_t t,
                                    const ComplexMatrix& coin_basis) {
    CoinAveragedWalk walk(blocks, coin_basis);
    walk.advance(t);
    return walk.distribution();
}

WalkTimeSeries run_time_series(const MomentumBlockSet& blocks, std::size_t t_max, bool keep_distributions) {
    if (t_max < 1) {
        throw std::invalid_argument("t_max: must be at least 1");
    }
    WalkTimeSeries series;
    CoinAveragedWalk walk(blocks);
    series.append(walk.distribution(), keep_distributions);
    for (std::size_t t = 1; t <= t_max; ++t) {
        walk.advance();
        series.append(walk.distribution(), keep_distributions);
    }
    return series;
}

WalkTimeSeries run_time_series(const WalkConfig& config, std::size_t t_max, bool keep_distributions) {
    const UnitaryMatrix coin = make_coin(config.coin);
    const MomentumBlockSet blocks = build_momentum_blocks(config, coin);
    return run_time_series(blocks, t_max, keep_distributions);
}

}  // namespace qwalk
