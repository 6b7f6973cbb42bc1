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
 * Coin unitaries (Fourier, Harper, baker) and the classical single-cell maps
 * they quantize.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class CoinKind { DFT, Harper, Baker };

std::string_view to_string(CoinKind kind);
CoinKind parse_coin_kind(std::string_view name);

/// Parameters selecting and configuring a coin. g and tau only affect the
/// Harper coin; phi is the boundary phase shared by positions and momenta.
struct CoinSpec {
    CoinKind kind = CoinKind::DFT;
    std::size_t M = 2;
    double g = 0.0;
    double tau = 1.0;
    double phi = 0.0;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const CoinSpec& spec);

/**
 * @brief Dense square unitary matrix in the coin basis.
 *
 * Construction checks that the max-entry norm of U^dagger U - I is below
 * kUnitarityTolerance; the matrix is immutable afterwards.
 */
class UnitaryMatrix {
  public:
    static constexpr double kUnitarityTolerance = 1e-10;

    explicit UnitaryMatrix(ComplexMatrix entries);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const ComplexMatrix& matrix() const { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

  private:
    ComplexMatrix entries_;
};

/// max |(A^dagger A - I)_{ij}|
double unitarity_defect(const ComplexMatrix& a);

UnitaryMatrix dft_coin(std::size_t M);
UnitaryMatrix harper_coin(const CoinSpec& spec);
UnitaryMatrix baker_coin(std::size_t M, double phi = 0.5);

/// Dispatches on spec.kind. Baker uses spec.phi as its boundary phase.
UnitaryMatrix make_coin(const CoinSpec& spec);

/// Harper Floquet matrix with the gamma-sum evaluated once as a twisted
/// length-M Fourier sum. Same contract as harper_coin.
UnitaryMatrix harper_coin_circulant(const CoinSpec& spec);

/// Twisted discrete Fourier transform, position to momentum:
/// entries exp(-2 pi i (row+phi)(col+phi)/N)/sqrt(N).
ComplexMatrix twisted_fourier(std::size_t N, double phi);

namespace detail {
// Entry-by-entry Harper matrix with no parity or range checks. Exists so odd
// and degenerate dimensions can be probed in tests.
ComplexMatrix harper_matrix(std::size_t M, double g, double tau, double phi);
}  // namespace detail

// ---------------------------------------------------------------------------
// Classical cell maps on the unit torus. None of them takes a boundary phase:
// phi has no classical counterpart.

struct PhasePoint {
    double q = 0.0;
    double p = 0.0;

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Reduces x into [0, 1).
double wrap_unit(double x);

/// sin(2 pi x) with x reduced mod 1 first.
double sin_2pi(double x);

/// Shortest distance between two points on the unit torus.
double torus_distance(PhasePoint a, PhasePoint b);

PhasePoint classical_harper_step(PhasePoint pt, double g, double tau = 1.0);
PhasePoint classical_harper_inverse_step(PhasePoint pt, double g, double tau = 1.0);
PhasePoint classical_baker_step(PhasePoint pt);
PhasePoint classical_rotation_step(PhasePoint pt);

}  // namespace qwalk
