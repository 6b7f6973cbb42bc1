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

// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <type_traits>

#include "oracles.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " FAILED[" << what << "]";
        }
    }
};

double g_worst_normalization = 0.0;

void track(const WalkTimeSeries& s) {
    for (const auto& d : s.distributions) g_worst_normalization = std::max(g_worst_normalization, d.normalization_error());
}

void track(const SiteDistribution& d) { g_worst_normalization = std::max(g_worst_normalization, d.normalization_error()); }

WalkTimeSeries quantum_series(const CoinSpec& coin, std::size_t L, std::size_t t_max) {
    auto s = run_time_series(WalkConfig{L, coin, ShiftPartition::LowerHalfLeft}, t_max, true);
    track(s);
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::min(a, b); }

// ---------------------------------------------------------------------------

void unitarity_suite(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    double worst_coin = 0.0;
    double worst_walk = 0.0;
    std::size_t coins = 0;
    for (std::size_t M : {2u, 4u, 10u, 20u, 40u, 64u}) {
        for (double g : {0.0, 0.05, 1.0, 2.0}) {
            for (double phi : {0.0, 0.2, 0.5}) {
                for (CoinKind kind : {CoinKind::DFT, CoinKind::Harper, CoinKind::Baker}) {
                    const CoinSpec spec{kind, M, g, 1.0, phi};
                    const ComplexMatrix u = kind == CoinKind::Harper
                                                ? detail::harper_matrix(M, g, 1.0, phi)
                                                : make_coin(spec).matrix();
                    worst_coin = std::max(worst_coin, unitarity_defect(u));
                    ++coins;
                    if (M == 4) {
                        const WalkConfig cfg{10, spec, ShiftPartition::LowerHalfLeft};
                        worst_walk = std::max(worst_walk, unitarity_defect(build_dense(cfg, UnitaryMatrix(u)).matrix()));
                    }
                }
            }
        }
    }
    const double secs = seconds_since(start);
    out.detail << coins << " coins, max coin defect " << worst_coin << ", max walk defect (L=10,M=4) " << worst_walk
               << ", " << secs << " s";
    out.require(worst_coin < 1e-10, "coin defect < 1e-10");
    out.require(worst_walk < 1e-10, "walk defect < 1e-10");
    out.require(secs < 10.0, "runtime < 10 s");
}

std::vector<CoinSpec> three_coins(std::size_t M) {
    return {{CoinKind::DFT, M}, {CoinKind::Harper, M, 2.0, 1.0, 0.2}, {CoinKind::Baker, M, 0.0, 1.0, 0.5}};
}

void block_dense_equivalence(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (auto [L, M] : {std::pair<std::size_t, std::size_t>{6, 4}, {8, 2}}) {
        for (const auto& coin : three_coins(M)) {
            const auto u = make_coin(coin);
            const WalkConfig cfg{L, coin, ShiftPartition::LowerHalfLeft};
            const auto dense = build_dense(cfg, u);
            const auto blocks = build_momentum_blocks(cfg, u);
            CoinAveragedWalk walk(blocks);
            for (std::size_t t = 0; t <= 20; ++t) {
                const auto fast = walk.distribution();
                track(fast);
                worst = std::max(worst, oracle::max_abs_diff(fast.probs, oracle::averaged_amplitudes(dense.matrix(), L, M, t)));
                walk.advance();
            }
        }
    }
    const double secs = seconds_since(start);
    out.detail << "max |p_block - p_dense| = " << worst << ", " << secs << " s";
    out.require(worst < 1e-10, "agreement < 1e-10");
    out.require(secs < 10.0, "runtime < 10 s");
}

void trace_formula_equivalence(Outcome& out) {
    double worst = 0.0;
    for (const auto& coin : three_coins(4)) {
        const auto u = make_coin(coin);
        const WalkConfig cfg{6, coin, ShiftPartition::LowerHalfLeft};
        const auto dense = build_dense(cfg, u);
        const auto blocks = build_momentum_blocks(cfg, u);
        for (std::size_t t = 0; t <= 10; ++t) {
            const auto trace = oracle::trace_formula(dense.matrix(), 6, 4, t);
            const auto averaged = site_probabilities(blocks, t);
            track(averaged);
            worst = std::max(worst, oracle::max_abs_diff(trace, averaged.probs));
        }
    }
    out.detail << "max |trace - averaged amplitude| = " << worst;
    out.require(worst < 1e-10, "agreement < 1e-10");
}

void hadamard_quadratic_law(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = quantum_series({CoinKind::DFT, 2}, 100, 40);
    std::vector<double> lt;
    std::vector<double> lm;
    for (std::size_t t = 10; t <= 40; ++t) {
        lt.push_back(std::log(static_cast<double>(t)));
        lm.push_back(std::log(s.msd[t]));
    }
    const double exponent = oracle::linear_fit(lt, lm).first;
    const double secs = seconds_since(start);
    out.detail << "msd exponent over t in [10,40] = " << exponent << ", " << secs << " s";
    out.require(exponent >= 1.85 && exponent <= 2.05, "exponent in [1.85, 2.05]");
    out.require(secs < 5.0, "runtime < 5 s");
}

void fourier_lethargy(Outcome& out) {
    const auto m2 = quantum_series({CoinKind::DFT, 2}, 100, 40);
    const auto m10 = quantum_series({CoinKind::DFT, 10}, 100, 40);
    const auto m40 = quantum_series({CoinKind::DFT, 40}, 100, 40);
    out.detail << "PR(40): M=2 " << m2.pr[40] << ", M=10 " << m10.pr[40] << ", M=40 " << m40.pr[40];
    out.require(m2.pr[40] > m10.pr[40] && m10.pr[40] > m40.pr[40], "PR ordering");

    // quadratic least-squares detrend of msd(t), t = 0..40
    const std::size_t n = m40.msd.size();
    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), 3);
    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    for (std::size_t t = 0; t < n; ++t) {
        const double tt = static_cast<double>(t);
        design.row(static_cast<Eigen::Index>(t)) << 1.0, tt, tt * tt;
        y(static_cast<Eigen::Index>(t)) = m40.msd[t];
    }
    const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(y);
    const Eigen::VectorXd r = y - design * coef;
    std::size_t best_lag = 0;
    double best = -2.0;
    for (std::size_t lag = 1; lag <= 12; ++lag) {
        const auto len = static_cast<Eigen::Index>(n - lag);
        const double ac = r.head(len).dot(r.tail(len)) / r.squaredNorm();
        if (ac > best) {
            best = ac;
            best_lag = lag;
        }
    }
    out.detail << "; detrended msd(M=40) autocorrelation peaks at lag " << best_lag << " (" << best << ")";
    out.require(best_lag == 4, "autocorrelation peak at lag 4");
}

void rotation_return(Outcome& out) {
    const auto start_ens = uniform_fill(100, 0, 100000, 31);
    bool all = true;
    for (auto orientation : {CellPartition::Orientation::Horizontal, CellPartition::Orientation::Vertical}) {
        auto ens = start_ens;
        advance(ens, RotationMap{}, {orientation, 0.5}, 4);
        all = all && ens.points == start_ens.points;
        track(classical_site_distribution(ens, 4));
    }
    out.detail << "100000 points, both partitions, bitwise return after 4 steps: " << (all ? "yes" : "no");
    out.require(all, "bitwise return");
}

void baker_is_bernoulli(Outcome& out) {
    const auto oracle_sites = oracle::bernoulli_walk_sites(10, 100);
    auto random = uniform_fill(100, 0, 1000000, 7);
    advance(random, BakerMap{}, CellPartition{}, 10);
    const auto dr = classical_site_distribution(random, 10);
    track(dr);
    const double tv_random = oracle::total_variation(dr.probs, oracle_sites);

    auto grid = grid_fill(100, 0, 1024);
    advance(grid, BakerMap{}, CellPartition{}, 10);
    const auto dg = classical_site_distribution(grid, 10);
    track(dg);
    const double tv_grid = oracle::total_variation(dg.probs, oracle_sites);

    out.detail << "TV(random 1e6) = " << tv_random << ", TV(1024x1024 grid) = " << tv_grid;
    out.require(tv_random < 0.01, "random TV < 0.01");
    out.require(tv_grid == 0.0, "grid TV == 0");
}

void chaos_effect(Outcome& out) {
    const auto g005 = quantum_series({CoinKind::Harper, 20, 0.05, 1.0, 0.0}, 100, 40);
    const auto g1 = quantum_series({CoinKind::Harper, 20, 1.0, 1.0, 0.0}, 100, 40);
    const auto g2 = quantum_series({CoinKind::Harper, 20, 2.0, 1.0, 0.0}, 100, 40);
    double worst = 0.0;
    for (std::size_t t = 20; t <= 40; ++t) worst = std::max(worst, relative_gap(g1.entropy[t], g2.entropy[t]));
    out.detail << "t=40: S(g=2) " << g2.entropy[40] << " vs S(g=0.05) " << g005.entropy[40] << "; PR " << g2.pr[40]
               << " vs " << g005.pr[40] << "; msd(g=0.05) " << g005.msd[40] << " vs msd(g=2) " << g2.msd[40]
               << "; max rel. gap S(g=1)/S(g=2) on [20,40] = " << worst;
    out.require(g2.entropy[40] > g005.entropy[40], "entropy grows with chaos");
    out.require(g2.pr[40] > g005.pr[40], "PR grows with chaos");
    out.require(g005.msd[40] > g2.msd[40], "msd shrinks with chaos");
    out.require(worst < 0.15, "g=1/g=2 entropy within 15%");
}

void time_reversal_breaking(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    const auto a = quantum_series({CoinKind::Harper, 40, 2.0, 1.0, 0.0}, 100, 40);
    const auto b = quantum_series({CoinKind::Harper, 40, 2.0, 1.0, 0.2}, 100, 40);
    const auto c = quantum_series({CoinKind::Harper, 40, 0.05, 1.0, 0.0}, 100, 40);
    const auto d = quantum_series({CoinKind::Harper, 40, 0.05, 1.0, 0.2}, 100, 40);
    double worst = 0.0;
    for (std::size_t t = 1; t <= 40; ++t) worst = std::max(worst, relative_gap(c.entropy[t], d.entropy[t]));
    const double secs = seconds_since(start);
    out.detail << "g=2, t=40: S(phi=0.2) " << b.entropy[40] << " vs S(phi=0) " << a.entropy[40] << "; msd "
               << b.msd[40] << " vs " << a.msd[40] << "; g=0.05 max rel. entropy gap " << worst << ", " << secs << " s";
    out.require(b.entropy[40] < a.entropy[40], "entropy suppressed");
    out.require(b.msd[40] < a.msd[40], "msd suppressed");
    out.require(worst < 0.10, "near-integrable curves within 10%");
    out.require(secs < 60.0, "runtime < 60 s");
}

void classical_phase_independence(Outcome& out) {
    // no classical step accepts a boundary phase
    static_assert(!std::is_invocable_v<decltype(&classical_harper_step), PhasePoint, double, double, double>);
    static_assert(!std::is_invocable_v<decltype(&classical_baker_step), PhasePoint, double>);
    static_assert(!std::is_invocable_v<decltype(&classical_rotation_step), PhasePoint, double>);

    std::vector<RunResult> runs;
    for (const char* phi : {"0", "0.2", "0.5"}) {
        const auto cfg = build_experiment_config({{"coin", "harper"}, {"M", "20"}, {"L", "100"}, {"g", "2"},
                                                  {"phi", phi}, {"classical", "true"}, {"n_points", "100000"},
                                                  {"emit_distributions", "true"}});
        runs.push_back(run_experiment(cfg).at(0));
        track(runs.back().quantum);
        track(*runs.back().classical);
    }
    bool identical = true;
    for (std::size_t i = 1; i < runs.size(); ++i) {
        identical = identical && runs[i].classical->msd == runs[0].classical->msd &&
                    runs[i].classical->entropy == runs[0].classical->entropy &&
                    runs[i].classical->pr == runs[0].classical->pr;
        for (std::size_t t = 0; t < runs[i].classical->size(); ++t) {
            identical = identical &&
                        runs[i].classical->distributions[t].probs == runs[0].classical->distributions[t].probs;
        }
    }
    out.detail << "classical series for phi in {0, 0.2, 0.5} bitwise identical: " << (identical ? "yes" : "no");
    out.require(identical, "bitwise identical");
}

void normalization(Outcome& out) {
    out.detail << "worst |sum p - 1| over all emitted distributions = " << g_worst_normalization;
    out.require(g_worst_normalization < 1e-10, "normalized to 1e-10");
}

double occupied_fraction(const std::vector<PhasePoint>& pts) {
    constexpr std::size_t bins = 50;
    std::vector<char> hit(bins * bins, 0);
    for (const auto& pt : pts) {
        const auto i = std::min(bins - 1, static_cast<std::size_t>(pt.q * bins));
        const auto j = std::min(bins - 1, static_cast<std::size_t>(pt.p * bins));
        hit[i * bins + j] = 1;
    }
    std::size_t n = 0;
    for (char h : hit) n += h;
    return static_cast<double>(n) / static_cast<double>(bins * bins);
}

void phase_space_filling(Outcome& out) {
    const double chaotic = occupied_fraction(phase_portrait(HarperMap{2.0, 1.0}, 1, 100000, 1));
    const double regular = occupied_fraction(phase_portrait(HarperMap{0.01, 1.0}, 100, 1000, 1));
    out.detail << "50x50 occupancy: g=2 single orbit " << chaotic << ", g=0.01 100 orbits " << regular;
    out.require(chaotic > 0.95, "g=2 > 95%");
    out.require(regular < 0.95, "g=0.01 < 95%");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"1 unitarity suite", unitarity_suite},
        {"2 block/dense oracle equivalence", block_dense_equivalence},
        {"3 trace formula equivalence", trace_formula_equivalence},
        {"4 Hadamard quadratic law", hadamard_quadratic_law},
        {"5 Fourier lethargy", fourier_lethargy},
        {"6 classical period-4 return", rotation_return},
        {"7 multi-baker = Bernoulli walk", baker_is_bernoulli},
        {"8 chaos effect", chaos_effect},
        {"9 TR-breaking suppression", time_reversal_breaking},
        {"10 classical phi-independence", classical_phase_independence},
        {"11 normalization", normalization},
        {"12 chaotic phase-space filling", phase_space_filling},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome out;
        try {
            check(out);
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << " exception: " << e.what();
        }
        std::printf("[%s] %s: %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.str().c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
