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
 * The coined walk operator E = (S (x) P_R + S^-1 (x) P_L)(I (x) U) on a
 * periodic lattice of L sites, in dense form and as L conserved-momentum
 * blocks, together with the walk state and its time evolution.
 *
 * Composite index convention for dense objects: n*M + alpha for site n and
 * coin state alpha. Lattice momentum states use <n|k> = exp(2 pi i n k/L)/sqrt(L).
 */

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Which half of the coin index range is moved by S^-1 (one site to the left).
enum class ShiftPartition { LowerHalfLeft, LowerHalfRight };

struct WalkConfig {
    std::size_t L = 100;
    CoinSpec coin;
    ShiftPartition partition = ShiftPartition::LowerHalfLeft;
};

void validate(const WalkConfig& config);

/// True when coin state alpha belongs to the left-shifted half.
bool shifts_left(ShiftPartition partition, std::size_t M, std::size_t alpha);

/// exp(2 pi i j / L) for j = 0..L-1; index arithmetic stays in integers.
class LatticePhases {
  public:
    explicit LatticePhases(std::size_t L);
    Complex operator()(long long j) const;
    std::size_t size() const { return table_.size(); }

  private:
    std::vector<Complex> table_;
};

class DenseWalkOperator {
  public:
    DenseWalkOperator(std::size_t L, std::size_t M, ComplexMatrix entries);

    std::size_t L() const { return L_; }
    std::size_t M() const { return M_; }
    std::size_t dim() const { return L_ * M_; }
    const ComplexMatrix& matrix() const { return entries_; }

  private:
    std::size_t L_;
    std::size_t M_;
    ComplexMatrix entries_;
};

/// E in the lattice momentum basis: one M x M block per momentum k.
class MomentumBlockSet {
  public:
    MomentumBlockSet(std::size_t L, std::vector<ComplexMatrix> blocks);

    std::size_t L() const { return blocks_.size(); }
    std::size_t M() const { return static_cast<std::size_t>(blocks_.front().rows()); }
    const ComplexMatrix& block(std::size_t k) const { return blocks_.at(k); }
    const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

  private:
    std::vector<ComplexMatrix> blocks_;
};

DenseWalkOperator build_dense(const WalkConfig& config, const UnitaryMatrix& coin);
MomentumBlockSet build_momentum_blocks(const WalkConfig& config, const UnitaryMatrix& coin);

/**
 * @brief Walk amplitudes at an integer time.
 *
 * Dense: a length L*M vector in the site basis. Momentum: an M x L matrix
 * whose column k holds the coin amplitudes of |k>.
 */
class WalkState {
  public:
    struct Dense {
        ComplexVector amplitudes;
    };
    struct Momentum {
        ComplexMatrix amplitudes;
    };

    WalkState(std::size_t L, std::size_t M, Dense dense, std::size_t time = 0);
    WalkState(std::size_t L, std::size_t M, Momentum momentum, std::size_t time = 0);

    /// |site> (x) |coin> at time 0, dense representation.
    static WalkState basis(std::size_t L, std::size_t M, std::size_t site, std::size_t coin);

    std::size_t L() const { return L_; }
    std::size_t M() const { return M_; }
    std::size_t time() const { return time_; }
    bool is_dense() const { return std::holds_alternative<Dense>(data_); }
    bool is_momentum() const { return std::holds_alternative<Momentum>(data_); }

    const Dense& dense() const { return std::get<Dense>(data_); }
    const Momentum& momentum() const { return std::get<Momentum>(data_); }

    WalkState to_dense() const;
    WalkState to_momentum() const;

    double norm_squared() const;

  private:
    friend WalkState evolve(const WalkState&, const DenseWalkOperator&, std::size_t);
    friend WalkState evolve(const WalkState&, const MomentumBlockSet&, std::size_t);

    std::size_t L_;
    std::size_t M_;
    std::variant<Dense, Momentum> data_;
    std::size_t time_;
};

/// Repeated matrix-vector application; throws std::invalid_argument when the
/// state representation or dimensions do not match the operator.
WalkState evolve(const WalkState& state, const DenseWalkOperator& op, std::size_t steps);
WalkState evolve(const WalkState& state, const MomentumBlockSet& op, std::size_t steps);

/// <site, coin | state>. Throws std::out_of_range on bad indices.
Complex amplitude(const WalkState& state, std::size_t site, std::size_t coin);

}  // namespace qwalk
