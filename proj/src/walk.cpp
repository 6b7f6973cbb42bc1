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

#include "qwalk/walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_coin(const WalkConfig& config, const UnitaryMatrix& coin) {
    validate(config);
    if (coin.dim() != config.coin.M) {
        throw std::invalid_argument("coin: unitary has dimension " + std::to_string(coin.dim()) +
                                    " but coin.M is " + std::to_string(config.coin.M));
    }
}

}  // namespace

void validate(const WalkConfig& config) {
    if (config.L < 2) {
        throw std::invalid_argument("L: lattice needs at least 2 sites");
    }
    validate(config.coin);
}

bool shifts_left(ShiftPartition partition, std::size_t M, std::size_t alpha) {
    const bool lower = alpha < M / 2;
    return partition == ShiftPartition::LowerHalfLeft ? lower : !lower;
}

LatticePhases::LatticePhases(std::size_t L) : table_(L) {
    const double dl = static_cast<double>(L);
    for (std::size_t j = 0; j < L; ++j) {
        table_[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / dl);
    }
}

Complex LatticePhases::operator()(long long j) const {
    const auto L = static_cast<long long>(table_.size());
    return table_[static_cast<std::size_t>(((j % L) + L) % L)];
}

DenseWalkOperator::DenseWalkOperator(std::size_t L, std::size_t M, ComplexMatrix entries)
    : L_(L), M_(M), entries_(std::move(entries)) {
    if (entries_.rows() != idx(L * M) || entries_.cols() != idx(L * M)) {
        throw std::invalid_argument("DenseWalkOperator: matrix is not (L*M) x (L*M)");
    }
}

MomentumBlockSet::MomentumBlockSet(std::size_t L, std::vector<ComplexMatrix> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.size() != L || L == 0) {
        throw std::invalid_argument("MomentumBlockSet: expected one block per momentum");
    }
    for (const auto& b : blocks_) {
        if (b.rows() != blocks_.front().rows() || b.cols() != b.rows()) {
            throw std::invalid_argument("MomentumBlockSet: blocks must be square and equally sized");
        }
    }
}

DenseWalkOperator build_dense(const WalkConfig& config, const UnitaryMatrix& coin) {
    check_coin(config, coin);
    const std::size_t L = config.L;
    const std::size_t M = config.coin.M;
    const ComplexMatrix& u = coin.matrix();

    ComplexMatrix e = ComplexMatrix::Zero(idx(L * M), idx(L * M));
    for (std::size_t n = 0; n < L; ++n) {
        const std::size_t left = (n + L - 1) % L;
        const std::size_t right = (n + 1) % L;
        for (std::size_t a = 0; a < M; ++a) {
            const std::size_t target = shifts_left(config.partition, M, a) ? left : right;
            // += because left and right coincide when L == 2
            e.block(idx(target * M + a), idx(n * M), 1, idx(M)) += u.row(idx(a));
        }
    }
    return DenseWalkOperator(L, M, std::move(e));
}

MomentumBlockSet build_momentum_blocks(const WalkConfig& config, const UnitaryMatrix& coin) {
    check_coin(config, coin);
    const std::size_t L = config.L;
    const std::size_t M = config.coin.M;
    const LatticePhases phase(L);

    // S|k> = exp(-2 pi i k/L)|k>, S^-1|k> = exp(+2 pi i k/L)|k>
    std::vector<ComplexMatrix> blocks(L);
    for (std::size_t k = 0; k < L; ++k) {
        ComplexMatrix b = coin.matrix();
        const auto kk = static_cast<long long>(k);
        for (std::size_t a = 0; a < M; ++a) {
            b.row(idx(a)) *= shifts_left(config.partition, M, a) ? phase(kk) : phase(-kk);
        }
        blocks[k] = std::move(b);
    }
    return MomentumBlockSet(L, std::move(blocks));
}

WalkState::WalkState(std::size_t L, std::size_t M, Dense dense, std::size_t time)
    : L_(L), M_(M), data_(std::move(dense)), time_(time) {
    if (std::get<Dense>(data_).amplitudes.size() != idx(L * M)) {
        throw std::invalid_argument("WalkState: dense amplitude vector must have length L*M");
    }
}

WalkState::WalkState(std::size_t L, std::size_t M, Momentum momentum, std::size_t time)
    : L_(L), M_(M), data_(std::move(momentum)), time_(time) {
    const auto& a = std::get<Momentum>(data_).amplitudes;
    if (a.rows() != idx(M) || a.cols() != idx(L)) {
        throw std::invalid_argument("WalkState: momentum amplitudes must be M x L");
    }
}

WalkState WalkState::basis(std::size_t L, std::size_t M, std::size_t site, std::size_t coin) {
    if (site >= L || coin >= M) {
        throw std::out_of_range("WalkState::basis: site or coin index out of range");
    }
    ComplexVector v = ComplexVector::Zero(idx(L * M));
    v(idx(site * M + coin)) = 1.0;
    return WalkState(L, M, Dense{std::move(v)});
}

WalkState WalkState::to_momentum() const {
    if (is_momentum()) return *this;
    const LatticePhases phase(L_);
    const double norm = 1.0 / std::sqrt(static_cast<double>(L_));
    const ComplexVector& v = dense().amplitudes;
    ComplexMatrix out = ComplexMatrix::Zero(idx(M_), idx(L_));
    for (std::size_t k = 0; k < L_; ++k) {
        for (std::size_t n = 0; n < L_; ++n) {
            // <k|n> = exp(-2 pi i n k/L)/sqrt(L)
            const Complex w = norm * phase(-static_cast<long long>((n * k) % L_));
            out.col(idx(k)) += w * v.segment(idx(n * M_), idx(M_));
        }
    }
    return WalkState(L_, M_, Momentum{std::move(out)}, time_);
}

WalkState WalkState::to_dense() const {
    if (is_dense()) return *this;
    const LatticePhases phase(L_);
    const double norm = 1.0 / std::sqrt(static_cast<double>(L_));
    const ComplexMatrix& m = momentum().amplitudes;
    ComplexVector out = ComplexVector::Zero(idx(L_ * M_));
    for (std::size_t n = 0; n < L_; ++n) {
        auto seg = out.segment(idx(n * M_), idx(M_));
        for (std::size_t k = 0; k < L_; ++k) {
            seg += norm * phase(static_cast<long long>((n * k) % L_)) * m.col(idx(k));
        }
    }
    return WalkState(L_, M_, Dense{std::move(out)}, time_);
}

double WalkState::norm_squared() const {
    if (is_dense()) return dense().amplitudes.squaredNorm();
    return momentum().amplitudes.squaredNorm();
}

WalkState evolve(const WalkState& state, const DenseWalkOperator& op, std::size_t steps) {
    if (!state.is_dense()) {
        throw std::invalid_argument("evolve: momentum state given to a dense operator; convert with to_dense()");
    }
    if (state.L() != op.L() || state.M() != op.M()) {
        throw std::invalid_argument("evolve: state and operator dimensions differ");
    }
    WalkState out = state;
    auto& v = std::get<WalkState::Dense>(out.data_).amplitudes;
    ComplexVector scratch(v.size());
    for (std::size_t s = 0; s < steps; ++s) {
        scratch.noalias() = op.matrix() * v;
        v.swap(scratch);
    }
    out.time_ += steps;
    return out;
}

WalkState evolve(const WalkState& state, const MomentumBlockSet& op, std::size_t steps) {
    if (!state.is_momentum()) {
        throw std::invalid_argument("evolve: dense state given to a momentum block operator; convert with to_momentum()");
    }
    if (state.L() != op.L() || state.M() != op.M()) {
        throw std::invalid_argument("evolve: state and operator dimensions differ");
    }
    WalkState out = state;
    auto& m = std::get<WalkState::Momentum>(out.data_).amplitudes;
    const auto L = static_cast<long long>(op.L());
    // Each momentum evolves on its own column; no shared writes.
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < L; ++k) {
        const ComplexMatrix& block = op.block(static_cast<std::size_t>(k));
        ComplexVector col = m.col(static_cast<Eigen::Index>(k));
        ComplexVector next(col.size());
        for (std::size_t s = 0; s < steps; ++s) {
            next.noalias() = block * col;
            col.swap(next);
        }
        m.col(static_cast<Eigen::Index>(k)) = col;
    }
    out.time_ += steps;
    return out;
}

Complex amplitude(const WalkState& state, std::size_t site, std::size_t coin) {
    if (site >= state.L() || coin >= state.M()) {
        throw std::out_of_range("amplitude: site " + std::to_string(site) + " / coin " + std::to_string(coin) +
                                " outside lattice of " + std::to_string(state.L()) + " x " +
                                std::to_string(state.M()));
    }
    if (state.is_dense()) {
        return state.dense().amplitudes(idx(site * state.M() + coin));
    }
    const std::size_t L = state.L();
    const LatticePhases phase(L);
    const ComplexMatrix& m = state.momentum().amplitudes;
    Complex sum = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        sum += phase(static_cast<long long>((site * k) % L)) * m(idx(coin), idx(k));
    }
    return sum / std::sqrt(static_cast<double>(L));
}

}  // namespace qwalk
