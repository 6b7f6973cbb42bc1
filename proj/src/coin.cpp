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

#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(2 pi i x), with x reduced to [0, 1) before scaling.
Complex cis_turns(double x) { return std::polar(1.0, kTwoPi * wrap_unit(x)); }

void require_even_dim(std::size_t M, const char* what) {
    if (M < 2 || M % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": M must be a positive even integer, got " +
                                    std::to_string(M));
    }
}

}  // namespace

std::string_view to_string(CoinKind kind) {
    switch (kind) {
        case CoinKind::DFT:
            return "dft";
        case CoinKind::Harper:
            return "harper";
        case CoinKind::Baker:
            return "baker";
    }
    return "unknown";
}

CoinKind parse_coin_kind(std::string_view name) {
    if (name == "dft" || name == "DFT" || name == "fourier") return CoinKind::DFT;
    if (name == "harper" || name == "Harper") return CoinKind::Harper;
    if (name == "baker" || name == "Baker") return CoinKind::Baker;
    throw std::invalid_argument("coin: unknown coin kind '" + std::string(name) + "'");
}

void validate(const CoinSpec& spec) {
    require_even_dim(spec.M, "M");
    if (!(spec.g >= 0.0) || !std::isfinite(spec.g)) {
        throw std::invalid_argument("g: must be a finite real >= 0");
    }
    if (!(spec.tau > 0.0) || !std::isfinite(spec.tau)) {
        throw std::invalid_argument("tau: must be a finite real > 0");
    }
    if (!(spec.phi >= 0.0 && spec.phi < 1.0)) {
        throw std::invalid_argument("phi: must lie in [0, 1)");
    }
}

double unitarity_defect(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    const ComplexMatrix gram = a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols());
    return gram.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("UnitaryMatrix: expected a non-empty square matrix");
    }
    const double defect = unitarity_defect(entries_);
    if (!(defect < kUnitarityTolerance)) {
        throw std::domain_error("UnitaryMatrix: U^dagger U deviates from identity by " +
                                std::to_string(defect));
    }
}

UnitaryMatrix dft_coin(std::size_t M) {
    require_even_dim(M, "dft_coin");
    const auto n = static_cast<Eigen::Index>(M);
    const double norm = 1.0 / std::sqrt(static_cast<double>(M));
    ComplexMatrix u(n, n);
    for (std::size_t a = 0; a < M; ++a) {
        for (std::size_t b = 0; b < M; ++b) {
            const double turns = static_cast<double>((a * b) % M) / static_cast<double>(M);
            u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = norm * cis_turns(turns);
        }
    }
    return UnitaryMatrix(std::move(u));
}

ComplexMatrix twisted_fourier(std::size_t N, double phi) {
    const auto n = static_cast<Eigen::Index>(N);
    const double dn = static_cast<double>(N);
    const double norm = 1.0 / std::sqrt(dn);
    ComplexMatrix g(n, n);
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            // (r+phi)(c+phi)/N with the integer part of r*c taken mod N
            const double turns = (static_cast<double>((r * c) % N) +
                                  phi * static_cast<double>(r + c) + phi * phi) / dn;
            g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = norm * cis_turns(-turns);
        }
    }
    return g;
}

namespace detail {

ComplexMatrix harper_matrix(std::size_t M, double g, double tau, double phi) {
    const auto n = static_cast<Eigen::Index>(M);
    const double dm = static_cast<double>(M);
    ComplexMatrix u(n, n);
    for (std::size_t a = 0; a < M; ++a) {
        for (std::size_t b = 0; b < M; ++b) {
            const long d = static_cast<long>(b) - static_cast<long>(a);
            Complex sum = 0.0;
            for (std::size_t c = 0; c < M; ++c) {
                const double kick = -tau * g * dm * std::cos(kTwoPi * (static_cast<double>(c) + phi) / dm);
                // (c+phi)*d/M, integer part c*d reduced mod M
                const long cd = (static_cast<long>(c) * d) % static_cast<long>(M);
                const double turns = (static_cast<double>(cd) + phi * static_cast<double>(d)) / dm;
                sum += std::polar(1.0, kick) * cis_turns(turns);
            }
            const double kinetic = -tau * dm * std::cos(kTwoPi * (static_cast<double>(b) + phi) / dm);
            u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = std::polar(1.0, kinetic) * sum / dm;
        }
    }
    return u;
}

}  // namespace detail

UnitaryMatrix harper_coin(const CoinSpec& spec) {
    validate(spec);
    return UnitaryMatrix(detail::harper_matrix(spec.M, spec.g, spec.tau, spec.phi));
}

UnitaryMatrix harper_coin_circulant(const CoinSpec& spec) {
    validate(spec);
    const std::size_t M = spec.M;
    const double dm = static_cast<double>(M);

    std::vector<Complex> kick(M);
    std::vector<Complex> kinetic(M);
    for (std::size_t c = 0; c < M; ++c) {
        const double angle = std::cos(kTwoPi * (static_cast<double>(c) + spec.phi) / dm);
        kick[c] = std::polar(1.0, -spec.tau * spec.g * dm * angle);
        kinetic[c] = std::polar(1.0, -spec.tau * dm * angle);
    }

    // kernel[j] = (1/M) sum_c kick[c] exp(2 pi i c j / M)
    std::vector<Complex> kernel(M);
    for (std::size_t j = 0; j < M; ++j) {
        Complex sum = 0.0;
        for (std::size_t c = 0; c < M; ++c) {
            sum += kick[c] * cis_turns(static_cast<double>((c * j) % M) / dm);
        }
        kernel[j] = sum / dm;
    }

    const auto n = static_cast<Eigen::Index>(M);
    ComplexMatrix u(n, n);
    for (std::size_t a = 0; a < M; ++a) {
        for (std::size_t b = 0; b < M; ++b) {
            const long d = static_cast<long>(b) - static_cast<long>(a);
            const std::size_t j = static_cast<std::size_t>((d + static_cast<long>(M)) % static_cast<long>(M));
            const Complex twist = cis_turns(spec.phi * static_cast<double>(d) / dm);
            u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = kinetic[b] * twist * kernel[j];
        }
    }
    return UnitaryMatrix(std::move(u));
}

UnitaryMatrix baker_coin(std::size_t M, double phi) {
    require_even_dim(M, "baker_coin");
    if (!(phi >= 0.0 && phi < 1.0)) {
        throw std::invalid_argument("phi: must lie in [0, 1)");
    }
    const auto n = static_cast<Eigen::Index>(M);
    const auto h = n / 2;
    const ComplexMatrix half = twisted_fourier(M / 2, phi);
    ComplexMatrix blocks = ComplexMatrix::Zero(n, n);
    blocks.topLeftCorner(h, h) = half;
    blocks.bottomRightCorner(h, h) = half;
    const ComplexMatrix full = twisted_fourier(M, phi);
    return UnitaryMatrix(full.adjoint() * blocks);
}

UnitaryMatrix make_coin(const CoinSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case CoinKind::DFT:
            return dft_coin(spec.M);
        case CoinKind::Harper:
            return harper_coin_circulant(spec);
        case CoinKind::Baker:
            return baker_coin(spec.M, spec.phi);
    }
    throw std::invalid_argument("coin: unknown kind");
}

// ---------------------------------------------------------------------------

double wrap_unit(double x) {
    double r = x - std::floor(x);
    // x slightly below an integer can round up to exactly 1
    if (r >= 1.0) r = 0.0;
    return r;
}

double sin_2pi(double x) { return std::sin(kTwoPi * wrap_unit(x)); }

double torus_distance(PhasePoint a, PhasePoint b) {
    auto axis = [](double u, double v) {
        const double d = std::abs(wrap_unit(u) - wrap_unit(v));
        return std::min(d, 1.0 - d);
    };
    return std::hypot(axis(a.q, b.q), axis(a.p, b.p));
}

PhasePoint classical_harper_step(PhasePoint pt, double g, double tau) {
    const double q = wrap_unit(pt.q - tau * sin_2pi(pt.p));
    const double p = wrap_unit(pt.p + tau * g * sin_2pi(q));
    return {q, p};
}

PhasePoint classical_harper_inverse_step(PhasePoint pt, double g, double tau) {
    const double p = wrap_unit(pt.p - tau * g * sin_2pi(pt.q));
    const double q = wrap_unit(pt.q + tau * sin_2pi(p));
    return {q, p};
}

PhasePoint classical_baker_step(PhasePoint pt) {
    if (pt.q < 0.5) return {2.0 * pt.q, 0.5 * pt.p};
    return {2.0 * pt.q - 1.0, 0.5 * (pt.p + 1.0)};
}

PhasePoint classical_rotation_step(PhasePoint pt) { return {wrap_unit(1.0 - pt.p), pt.q}; }

}  // namespace qwalk
