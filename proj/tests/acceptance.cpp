// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "aircomp/baselines.hpp"
#include "aircomp/functional.hpp"
#include "aircomp/report.hpp"
#include "aircomp/sia.hpp"
#include "aircomp/sim_engine.hpp"
#include "oracles.hpp"

using namespace aircomp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass = true;
    std::string detail;
};

SystemConfig make_config(Scheme scheme, int M, int K, std::vector<double> grid, int trials,
                         std::uint64_t seed)
{
    SystemConfig c;
    c.scheme = scheme;
    c.M = M;
    c.K = K;
    c.snr_db_grid = std::move(grid);
    c.trials = trials;
    c.seed = seed;
    return c;
}

// Worst SIA statistics over noiseless trials, shared by criteria 1, 2 and 4.
struct NoiselessStats {
    double max_relative_error = 0.0;
    double max_leakage = 0.0;
    int trials = 0;
};

NoiselessStats noiseless_sia(int M, int K, int trials, std::uint64_t seed)
{
    const auto cfg = make_config(Scheme::sia, M, K, {kInf}, trials, seed);
    NoiselessStats s;
    for (int t = 0; t < trials; ++t) {
        const auto r = run_trial(cfg, static_cast<std::uint64_t>(t), kInf);
        for (int i = 0; i < kNumCells; ++i) {
            s.max_relative_error = std::max(s.max_relative_error, r.relative_error[i]);
            s.max_leakage = std::max(s.max_leakage, r.leakage[i]);
        }
        ++s.trials;
    }
    return s;
}

double global_max_leakage = 0.0;

Outcome exact_recovery()
{
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int M : {2, 3, 4, 5, 6, 8})
        for (int K : {1, 2, 5, 20, 50}) {
            const auto s = noiseless_sia(M, K, 100, 1000 + static_cast<std::uint64_t>(M * 100 + K));
            worst = std::max(worst, s.max_relative_error);
            global_max_leakage = std::max(global_max_leakage, s.max_leakage);
        }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << "max relative error " << worst << ", " << secs << " s";
    return {worst < 1e-8 && secs < 60.0, d.str()};
}

Outcome device_count_independence()
{
    bool ok = true;
    double worst = 0.0;
    for (int M : {2, 3, 4, 5, 6, 8}) {
        const auto one = noiseless_sia(M, 1, 100, 2000 + static_cast<std::uint64_t>(M));
        const auto many = noiseless_sia(M, 200, 100, 3000 + static_cast<std::uint64_t>(M));
        global_max_leakage = std::max({global_max_leakage, one.max_leakage, many.max_leakage});
        worst = std::max({worst, one.max_relative_error, many.max_relative_error});
        // Same stream count for both device counts.
        const auto t1 = prepare_trial(make_config(Scheme::sia, M, 1, {kInf}, 1, 1), 0);
        const auto t200 = prepare_trial(make_config(Scheme::sia, M, 200, {kInf}, 1, 1), 0);
        ok = ok && t1.n_ac == M / 2 && t200.n_ac == M / 2 && t1.A[0].rows() == t200.A[0].rows();
    }
    std::ostringstream d;
    d << "max relative error " << worst << " at K in {1, 200}";
    return {ok && worst < 1e-8, d.str()};
}

Outcome alignment_dimension()
{
    int good = 0, total = 0;
    const std::vector<std::pair<int, int>> pairs{{4, 1}, {4, 3}, {5, 1}, {5, 4}, {8, 2}};
    for (const auto& [M, K] : pairs) {
        const auto p = partition(M);
        const auto expected = static_cast<std::size_t>(std::min(K * p.n_ac, p.n_prime));
        const auto cfg = make_config(Scheme::sia, M, K, {kInf}, 100, 4000 + static_cast<std::uint64_t>(M * 10 + K));
        for (int t = 0; t < 100; ++t) {
            const auto trial = prepare_trial(cfg, static_cast<std::uint64_t>(t));
            ++total;
            bool ok = true;
            for (int i = 0; i < kNumCells; ++i)
                ok = ok && trial.aligned_rank[i] == expected;
            good += ok;
        }
    }
    std::ostringstream d;
    d << good << "/" << total << " trials";
    return {good == total, d.str()};
}

Outcome interference_nulling()
{
    const auto cfg = make_config(Scheme::no_ia, 4, 2, {kInf}, 500, 5000);
    int leaking = 0, units = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const auto r = run_trial(cfg, static_cast<std::uint64_t>(t), kInf);
        for (int i = 0; i < kNumCells; ++i) {
            ++units;
            leaking += r.leakage[i] > 1e-3;
        }
    }
    const double fraction = static_cast<double>(leaking) / units;
    std::ostringstream d;
    d << "SIA max leakage " << global_max_leakage << ", no_ia leaking fraction " << fraction;
    return {global_max_leakage < 1e-9 && fraction >= 0.99, d.str()};
}

Outcome dof_slope()
{
    const std::vector<double> grid{0, 5, 10, 15, 20, 25, 30, 35, 40};
    const auto sia = run_sweep(make_config(Scheme::sia, 4, 5, grid, 200, 6000));
    const auto no_ia = run_sweep(make_config(Scheme::no_ia, 4, 5, grid, 200, 6001));
    const double s = log_nmse_slope(sia.points, 20, 40);
    const double n = log_nmse_slope(no_ia.points, 30, 40);
    std::ostringstream d;
    d << "sia slope " << s << " /dB, no_ia slope " << n << " /dB";
    return {std::abs(s + 0.1) <= 0.005 && std::abs(n) < 0.02, d.str()};
}

Outcome noise_oracle()
{
    bool ok = true;
    double worst = 0.0;
    for (int K : {1, 4}) {
        const auto r = run_sweep(make_config(Scheme::sia, 4, K, {0, 10, 20, 30}, 10000, 7000 + static_cast<std::uint64_t>(K)));
        for (const auto& p : r.points) {
            const double z = std::abs(p.nmse_mean - p.analytic_nmse) / p.nmse_std_error;
            worst = std::max(worst, z);
            ok = ok && z < 3.0;
        }
    }
    std::ostringstream d;
    d << "max |MC - analytic| = " << worst << " standard errors";
    return {ok, d.str()};
}

Outcome efficiency_formulas()
{
    bool ok = true;
    for (int K = 1; K <= 100; ++K)
        for (int M = 2; M <= 64; ++M)
            ok = ok && communication_efficiency(EfficiencyScheme::conventional_ia, M, K) == Rational(1, K + 1);
    for (int M = 2; M <= 64; M += 2)
        for (int K = 1; K <= 100; ++K)
            ok = ok && communication_efficiency(EfficiencyScheme::sia, M, K) == Rational(1, 2);
    for (int M = 3; M <= 63; M += 2)
        for (int K = 1; K <= 100; ++K)
            ok = ok && communication_efficiency(EfficiencyScheme::sia, M, K) ==
                           Rational(1, 2) - Rational(1, 2 * M);
    return {ok, "K = 1..100, M = 2..64"};
}

Outcome partition_search()
{
    bool ok = true;
    for (int M = 2; M <= 64; ++M) {
        const auto r = optimal_partition_search(M);
        const auto p = partition(M);
        ok = ok && r.balanced && r.signal_dim == p.n_ac && r.interference_dim == p.n_prime &&
             r.dof == p.n_ac;
    }
    return {ok, "M = 2..64"};
}

Outcome functional_layer()
{
    double worst = 0.0;
    for (auto kind : {FunctionKind::mean, FunctionKind::geomean})
        for (int K : {1, 3, 10})
            for (int M : {4, 5, 6}) {
                auto cfg = make_config(Scheme::sia, M, K, {kInf}, 20, 8000 + static_cast<std::uint64_t>(K * 10 + M));
                cfg.function = kind;
                const FunctionSpec spec{kind, K};
                for (int t = 0; t < cfg.trials; ++t) {
                    const auto trial = prepare_trial(cfg, static_cast<std::uint64_t>(t));
                    SymbolBlock s;
                    s.x.resize(static_cast<std::size_t>(K));
                    for (int k = 0; k < K; ++k)
                        for (int i = 0; i < kNumCells; ++i)
                            s.x[k][i] = preprocess(spec, trial.data[k][i]);
                    PerCellVectors zero;
                    for (auto& z : zero)
                        z = ComplexVector::Zero(M);
                    const auto y = receive(trial.channels, trial.W, s, zero);
                    for (int i = 0; i < kNumCells; ++i) {
                        const auto f = postprocess(spec, recover(trial.A[i], y[i]));
                        for (int st = 0; st < trial.n_ac; ++st) {
                            std::vector<double> column;
                            for (int k = 0; k < K; ++k)
                                column.push_back(trial.data[k][i][st]);
                            const double direct = kind == FunctionKind::mean
                                                      ? oracle::arithmetic_mean(column)
                                                      : oracle::geometric_mean(column);
                            worst = std::max(worst, std::abs(f[st] - direct) / std::abs(direct));
                        }
                    }
                }
            }
    std::ostringstream d;
    d << "max relative error " << worst;
    return {worst < 1e-6, d.str()};
}

Outcome determinism()
{
    const auto cfg = make_config(Scheme::sia, 4, 10, {0, 10, 20, 30, 40}, 200, 9000);
    auto body = [&](int workers) {
        const auto r = run_sweep(cfg, workers);
        RunManifest m;
        m.config = cfg;
        m.timestamp = utc_timestamp();
        std::ostringstream out;
        write_sweep_csv(out, r, m);
        return csv_body(out.str());
    };
    const auto one = body(1);
    const auto many = body(4);
    return {one == many && !one.empty(), "1 vs 4 workers"};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"exact recovery", exact_recovery},
        {"device-count independence", device_count_independence},
        {"interference alignment dimension", alignment_dimension},
        {"interference nulling", interference_nulling},
        {"DoF slope", dof_slope},
        {"noise oracle", noise_oracle},
        {"efficiency formulas", efficiency_formulas},
        {"optimal partition", partition_search},
        {"functional layer", functional_layer},
        {"determinism", determinism},
    };
    int failures = 0;
    int n = 0;
    for (const auto& [name, check] : criteria) {
        ++n;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
