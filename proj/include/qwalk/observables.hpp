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
 * Site probability distributions of the walk and the statistics used to
 * characterize spreading: mean squared displacement, site entropy and
 * participation ratio.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

struct SiteDistribution {
    std::size_t L = 0;
    std::vector<double> probs;
    std::size_t time = 0;

    /// |sum(probs) - 1|
    double normalization_error() const;
};

/// delta distribution at site 0, time 0.
SiteDistribution initial_distribution(std::size_t L);

double msd(const SiteDistribution& dist);
double site_entropy(const SiteDistribution& dist);
double participation_ratio(const SiteDistribution& dist);

/// Minimal cyclic distance of site l from site 0.
std::size_t cyclic_distance(std::size_t l, std::size_t L);

struct WalkTimeSeries {
    std::vector<std::size_t> times;
    std::vector<double> msd;
    std::vector<double> entropy;
    std::vector<double> pr;
    /// Filled only when distributions were requested.
    std::vector<SiteDistribution> distributions;

    std::size_t size() const { return times.size(); }
    void append(const SiteDistribution& dist, bool keep_distribution);
};

/**
 * @brief Coin-averaged propagation of the walk in momentum blocks.
 *
 * Holds E_k^t V for every lattice momentum k, where the columns of V are the
 * M coin states the probability is averaged over (the identity by default).
 * Each advance() is one matrix product per block, so a full time series is a
 * single pass.
 *
 * distribution() returns p_l(t) = (1/M) sum_{alpha,beta} |<0,alpha|E^t|l,beta>|^2.
 * By translation invariance the amplitude <0,alpha|E^t|l,beta> is the
 * amplitude at site -l of the state started at |0,beta>.
 */
class CoinAveragedWalk {
  public:
    explicit CoinAveragedWalk(const MomentumBlockSet& blocks);
    CoinAveragedWalk(const MomentumBlockSet& blocks, const ComplexMatrix& coin_basis);
    // keeps a reference to the blocks
    explicit CoinAveragedWalk(MomentumBlockSet&&) = delete;
    CoinAveragedWalk(MomentumBlockSet&&, const ComplexMatrix&) = delete;

    std::size_t time() const { return time_; }
    void advance(std::size_t steps = 1);
    SiteDistribution distribution() const;

  private:
    const MomentumBlockSet& blocks_;
    std::vector<ComplexMatrix> propagated_;
    ComplexMatrix inverse_fourier_;
    std::size_t time_ = 0;
};

SiteDistribution site_probabilities(const MomentumBlockSet& blocks, std::size_t t);

/// Same as above with the coin average taken over the columns of coin_basis,
/// which must be unitary.
SiteDistribution site_probabilities(const MomentumBlockSet& blocks, std::size_t t,
                                    const ComplexMatrix& coin_basis);

/// Observables at every time 0..t_max from one evolution.
WalkTimeSeries run_time_series(const MomentumBlockSet& blocks, std::size_t t_max,
                               bool keep_distributions = false);
WalkTimeSeries run_time_series(const WalkConfig& config, std::size_t t_max,
                               bool keep_distributions = false);

}  // namespace qwalk
