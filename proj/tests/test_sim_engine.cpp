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

#include "doctest.h"

#include <cmath>
#include <limits>

#include "aircomp/errors.hpp"
#include "aircomp/sim_engine.hpp"
#include "oracles.hpp"

using namespace aircomp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SystemConfig config(Scheme scheme, int M, int K, std::vector<double> grid, int trials,
                    std::uint64_t seed = 1)
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

} // namespace

TEST_CASE("run_trial examples")
{
    SUBCASE("sia noiseless")
    {
        const auto c = config(Scheme::sia, 4, 10, {kInf}, 1);
        for (std::uint64_t t = 0; t < 20; ++t) {
            const auto r = run_trial(c, t, kInf);
            for (int i = 0; i < 2; ++i) {
                CHECK(r.nmse[i] < 1e-9);
                CHECK(r.leakage[i] < 1e-9);
                CHECK(r.aligned_rank[i] == 2);
                CHECK(r.noise_std[i] == 0.0);
            }
            CHECK(r.tx_power.size() == 10);
        }
    }
    SUBCASE("no_ia noiseless has an interference floor")
    {
        const auto c = config(Scheme::no_ia, 4, 2, {kInf}, 1);
        int floor_hits = 0;
        for (std::uint64_t t = 0; t < 200; ++t) {
            const auto r = run_trial(c, t, kInf);
            floor_hits += (r.nmse[0] > 1e-3) + (r.nmse[1] > 1e-3);
        }
        CHECK(floor_hits >= 0.99 * 400);
    }
    SUBCASE("genie noiseless")
    {
        const auto c = config(Scheme::genie, 5, 3, {kInf}, 1);
        for (std::uint64_t t = 0; t < 20; ++t) {
            const auto r = run_trial(c, t, kInf);
            CHECK(r.nmse[0] < 1e-9);
            CHECK(r.nmse[1] < 1e-9);
            CHECK(r.leakage[0] == 0.0);
            CHECK(r.aligned_rank[0] == 0);
        }
    }
    SUBCASE("deterministic in (seed, trial_index)")
    {
        const auto c = config(Scheme::sia, 4, 3, {10}, 1, 42);
        const auto a = run_trial(c, 7, 10);
        const auto b = run_trial(c, 7, 10);
        const auto d = run_trial(c, 8, 10);
        CHECK(a.error_power == b.error_power);
        CHECK(a.error_power != d.error_power);
    }
}

TEST_CASE("noise_std_for")
{
    CHECK(noise_std_for(kInf, SnrReference::symbol, 5.0) == 0.0);
    CHECK(noise_std_for(0.0, SnrReference::symbol, 5.0) == doctest::Approx(1.0));
    CHECK(noise_std_for(20.0, SnrReference::symbol, 5.0) == doctest::Approx(0.1));
    CHECK(noise_std_for(10.0, SnrReference::received, 5.0) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("analytic_noise_mse")
{
    const ComplexMatrix A = ComplexMatrix::Identity(4, 4).topRows(2);
    CHECK(analytic_noise_mse(A, 0.0, 2.0) == 0.0);
    // K = 1, N_ac = 2: signal power K N_ac = 2.
    CHECK(analytic_noise_mse(A, 1.0, 2.0) == doctest::Approx(1.0));
    CHECK(analytic_noise_mse(A, 1.0, 4.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(analytic_noise_mse(A, 1.0, 0.0), DomainError);
}

TEST_CASE("Monte Carlo NMSE against the analytic noise oracle")
{
    for (int K : {1, 2, 4}) {
        const auto c = config(Scheme::sia, 4, K, {0.0}, 10000, 31);
        const auto res = run_sweep(c, 2);
        const auto& p = res.points[0];
        // noise_std = 1 at 0 dB, so the prediction is 1/K.
        CHECK(p.analytic_nmse == doctest::Approx(1.0 / K).epsilon(1e-12));
        CHECK(std::abs(p.nmse_mean - p.analytic_nmse) < 3.0 * p.nmse_std_error);
    }
}

TEST_CASE("run_sweep")
{
    SUBCASE("sia DoF slope is -0.1 per dB")
    {
        const auto c = config(Scheme::sia, 4, 5, {0, 5, 10, 15, 20, 25, 30, 35, 40}, 200, 3);
        const auto r = run_sweep(c);
        REQUIRE(r.points.size() == 9);
        for (const auto& p : r.points) {
            CHECK(p.trials == 200);
            CHECK(p.leakage_max < 1e-9);
            CHECK(p.aligned_rank_min == 2);
            CHECK(p.aligned_rank_max == 2);
        }
        CHECK(std::abs(r.dof_slope + 0.1) <= 0.005);
    }
    SUBCASE("received-power SNR reference keeps the -0.1 slope")
    {
        auto c = config(Scheme::sia, 4, 5, {0, 10, 20, 30, 40}, 100, 3);
        c.snr_reference = SnrReference::received;
        const auto r = run_sweep(c);
        CHECK(std::abs(r.dof_slope + 0.1) <= 0.005);
    }
    SUBCASE("no_ia plateaus")
    {
        const auto c = config(Scheme::no_ia, 4, 5, {0, 5, 10, 15, 20, 25, 30, 35, 40}, 200, 3);
        const auto r = run_sweep(c);
        CHECK(std::abs(log_nmse_slope(r.points, 30, 40)) < 0.02);
    }
    SUBCASE("genie slope and agreement with SIA")
    {
        const std::vector<double> grid{0, 10, 20, 30, 40};
        const auto g = run_sweep(config(Scheme::genie, 4, 3, grid, 2000, 9));
        const auto s = run_sweep(config(Scheme::sia, 4, 3, grid, 2000, 10));
        CHECK(std::abs(g.dof_slope + 0.1) <= 0.005);
        for (std::size_t p = 0; p < grid.size(); ++p) {
            const double se = std::hypot(g.points[p].nmse_std_error, s.points[p].nmse_std_error);
            CHECK(std::abs(g.points[p].nmse_mean - s.points[p].nmse_mean) < 3.0 * se);
        }
    }
    SUBCASE("empty grid is a configuration error")
    {
        CHECK_THROWS_AS(run_sweep(config(Scheme::sia, 4, 2, {}, 5)), ConfigError);
    }
    SUBCASE("identical results for any worker count")
    {
        const auto c = config(Scheme::sia, 5, 4, {0, 20, 40}, 37, 77);
        const auto one = run_sweep(c, 1);
        const auto many = run_sweep(c, 5);
        for (std::size_t p = 0; p < one.points.size(); ++p) {
            CHECK(one.points[p].nmse_mean == many.points[p].nmse_mean);
            CHECK(one.points[p].nmse_median == many.points[p].nmse_median);
            CHECK(one.points[p].leakage_mean == many.points[p].leakage_mean);
        }
        CHECK(one.dof_slope == many.dof_slope);
    }
    SUBCASE("function layer error vanishes without noise")
    {
        for (auto f : {FunctionKind::sum, FunctionKind::mean, FunctionKind::geomean}) {
            auto c = config(Scheme::sia, 4, 3, {kInf}, 20, 4);
            c.function = f;
            const auto r = run_sweep(c);
            CHECK(r.points[0].function_nmse < 1e-12);
        }
    }
}

TEST_CASE("resolve_workers")
{
    CHECK(resolve_workers(3) == 3);
    CHECK(resolve_workers(0) >= 1);
}
