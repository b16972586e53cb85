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

#include "aircomp/sim_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "aircomp/baselines.hpp"
#include "aircomp/errors.hpp"
#include "aircomp/functional.hpp"
#include "aircomp/sia.hpp"

namespace aircomp {

namespace {

PerDeviceMatrices build_precoders(const SystemConfig& config, const ChannelSet& channels,
                                  const PerCellMatrices& A, const PerCellMatrices& B)
{
    if (config.scheme == Scheme::sia)
        return build_sia(channels, B).W;
    PerDeviceMatrices W(static_cast<std::size_t>(channels.K));
    for (int k = 0; k < channels.K; ++k)
        for (int i = 0; i < kNumCells; ++i)
            W[k][i] = no_ia_precoder(k, i, channels, A[i]);
    return W;
}

std::vector<double> draw_device_data(FunctionKind kind, int n, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> d(static_cast<std::size_t>(n));
    for (auto& v : d) {
        const double z = normal(rng);
        v = kind == FunctionKind::geomean ? std::exp(z) : z;
    }
    return d;
}

// Target function value computed straight from the device data.
std::vector<double> direct_function(FunctionKind kind, const Trial& trial, int cell)
{
    std::vector<double> out(static_cast<std::size_t>(trial.n_ac), 0.0);
    for (std::size_t s = 0; s < out.size(); ++s) {
        if (kind == FunctionKind::geomean) {
            double log_sum = 0.0;
            for (const auto& device : trial.data)
                log_sum += std::log(device[cell][s]);
            out[s] = std::exp(log_sum / trial.K);
        } else {
            double sum = 0.0;
            for (const auto& device : trial.data)
                sum += device[cell][s];
            out[s] = kind == FunctionKind::mean ? sum / trial.K : sum;
        }
    }
    return out;
}

double median(std::vector<double> v)
{
    if (v.empty())
        return std::numeric_limits<double>::quiet_NaN();
    const auto mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1)
        return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        mx += x[p];
        my += y[p];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        sxy += (x[p] - mx) * (y[p] - my);
        sxx += (x[p] - mx) * (x[p] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

bool usable_for_fit(const SweepPoint& p)
{
    return std::isfinite(p.snr_db) && p.nmse_mean > 0.0 && std::isfinite(p.nmse_mean);
}

} // namespace

Trial prepare_trial(const SystemConfig& config, std::uint64_t trial_index)
{
    validate(config);
    Rng rng = make_stream(config.seed, trial_index);
    const Partition part = partition(config.M);

    Trial trial;
    trial.M = config.M;
    trial.K = config.K;
    trial.n_ac = part.n_ac;

    ChannelDrawOptions options;
    options.zero_cross_channels = config.scheme == Scheme::genie;
    bool built = false;
    for (int attempt = 0; attempt < kMaxChannelSetRedraws && !built; ++attempt) {
        trial.channels = draw_channels(config, rng, options);
        trial.B = build_reference_matrices(config.M, part.n_prime, rng, config.reference);
        trial.A = build_aggregation_beamformers(trial.B);
        try {
            trial.W = build_precoders(config, trial.channels, trial.A, trial.B);
            built = true;
        } catch (const NearSingular&) {
            ++trial.channel_set_redraws;
        } catch (const RankDeficient&) {
            ++trial.channel_set_redraws;
        }
    }
    if (!built)
        throw DegenerateChannels("trial " + std::to_string(trial_index) +
                                 ": no usable channel set after " +
                                 std::to_string(kMaxChannelSetRedraws) + " redraws");

    trial.symbols = draw_symbols(config, rng);
    for (auto& n : trial.unit_noise)
        n = linalg::gaussian_vector(config.M, rng);
    trial.data.resize(static_cast<std::size_t>(config.K));
    for (auto& device : trial.data)
        for (auto& d : device)
            d = draw_device_data(config.function, part.n_ac, rng);
    for (int i = 0; i < kNumCells; ++i)
        trial.aligned_rank[i] = aligned_interference_dimension(i, trial.channels, trial.W);
    return trial;
}

double noise_std_for(double snr_db, SnrReference reference, double desired_power_per_antenna)
{
    if (std::isinf(snr_db) && snr_db > 0)
        return 0.0;
    const double snr = std::pow(10.0, snr_db / 10.0);
    const double reference_power =
        reference == SnrReference::symbol ? 1.0 : desired_power_per_antenna;
    return std::sqrt(reference_power / snr);
}

TrialResult evaluate_trial(const Trial& trial, const SystemConfig& config, double snr_db)
{
    TrialResult r;
    const auto parts = received_components(trial.channels, trial.W, trial.symbols);
    const FunctionSpec spec{config.function, trial.K};

    // Function layer: same channels, precoders and noise, real data symbols.
    SymbolBlock data_symbols;
    data_symbols.x.resize(trial.data.size());
    for (std::size_t k = 0; k < trial.data.size(); ++k)
        for (int i = 0; i < kNumCells; ++i)
            data_symbols.x[k][i] = preprocess(spec, trial.data[k][i]);
    const auto data_parts = received_components(trial.channels, trial.W, data_symbols);

    for (int i = 0; i < kNumCells; ++i) {
        const double desired_power = parts.desired[i].squaredNorm() / trial.M;
        r.noise_std[i] = noise_std_for(snr_db, config.snr_reference, desired_power);
        const ComplexVector noise = r.noise_std[i] * trial.unit_noise[i];

        const ComplexVector y_tilde = parts.desired[i] + parts.interference[i] + noise;
        const ComplexVector y_hat = recover(trial.A[i], y_tilde);
        ComplexVector target = ComplexVector::Zero(trial.n_ac);
        for (const auto& device : trial.symbols.x)
            target += device[i];

        r.error_power[i] = (y_hat - target).squaredNorm();
        r.signal_power[i] = target.squaredNorm();
        r.nmse[i] = r.error_power[i] / r.signal_power[i];
        r.relative_error[i] = std::sqrt(r.nmse[i]);

        const double interference_power = parts.interference[i].squaredNorm();
        r.leakage[i] = interference_power > 0.0
                           ? (trial.A[i] * parts.interference[i]).squaredNorm() / interference_power
                           : 0.0;
        r.aligned_rank[i] = trial.aligned_rank[i];
        r.expected_noise_power[i] =
            r.noise_std[i] * r.noise_std[i] * (trial.A[i] * trial.A[i].adjoint()).trace().real();

        const ComplexVector data_hat =
            recover(trial.A[i], data_parts.desired[i] + data_parts.interference[i] + noise);
        const auto f_hat = postprocess(spec, data_hat);
        const auto f = direct_function(config.function, trial, i);
        for (std::size_t s = 0; s < f.size(); ++s) {
            r.function_error_power[i] += (f_hat[s] - f[s]) * (f_hat[s] - f[s]);
            r.function_reference_power[i] += f[s] * f[s];
        }
    }

    r.tx_power.resize(static_cast<std::size_t>(trial.K));
    for (int k = 0; k < trial.K; ++k)
        for (int i = 0; i < kNumCells; ++i)
            r.tx_power[k][i] = (trial.W[k][i] * trial.symbols.x[k][i]).squaredNorm();
    return r;
}

TrialResult run_trial(const SystemConfig& config, std::uint64_t trial_index, double snr_db)
{
    return evaluate_trial(prepare_trial(config, trial_index), config, snr_db);
}

double analytic_noise_mse(const ComplexMatrix& A_i, double noise_std, double signal_power)
{
    const double noise_power = noise_std * noise_std * (A_i * A_i.adjoint()).trace().real();
    if (noise_power == 0.0)
        return 0.0;
    if (!(signal_power > 0.0))
        throw DomainError("analytic_noise_mse: signal power must be positive");
    return noise_power / signal_power;
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("AIRCOMP_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<std::vector<TrialResult>> run_trials(const SystemConfig& config, int workers)
{
    validate(config);
    const auto trials = static_cast<std::size_t>(config.trials);
    std::vector<std::vector<TrialResult>> results(trials);
    std::vector<std::exception_ptr> failures(trials);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= trials)
                return;
            try {
                const Trial trial = prepare_trial(config, t);
                auto& row = results[t];
                row.reserve(config.snr_db_grid.size());
                for (double snr_db : config.snr_db_grid)
                    row.push_back(evaluate_trial(trial, config, snr_db));
            } catch (...) {
                failures[t] = std::current_exception();
            }
        }
    };

    const int n = std::min<int>(resolve_workers(workers), config.trials);
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int w = 0; w < n; ++w)
            pool.emplace_back(worker);
    }
    // Lowest failing trial index wins so errors do not depend on scheduling.
    for (const auto& failure : failures)
        if (failure)
            std::rethrow_exception(failure);
    return results;
}

SweepPoint aggregate_point(const std::vector<std::vector<TrialResult>>& results,
                           std::size_t point, double snr_db, int K, int n_ac)
{
    SweepPoint p;
    p.snr_db = snr_db;
    p.trials = static_cast<int>(results.size());
    p.aligned_rank_min = std::numeric_limits<std::size_t>::max();

    double err_sum = 0.0, sig_sum = 0.0, expected_noise_sum = 0.0;
    double leak_sum = 0.0, tx_sum = 0.0, f_err = 0.0, f_ref = 0.0;
    std::size_t tx_count = 0;
    std::vector<double> per_unit_nmse;
    per_unit_nmse.reserve(results.size() * kNumCells);
    for (const auto& row : results) {
        const TrialResult& r = row.at(point);
        for (int i = 0; i < kNumCells; ++i) {
            err_sum += r.error_power[i];
            sig_sum += r.signal_power[i];
            expected_noise_sum += r.expected_noise_power[i];
            leak_sum += r.leakage[i];
            p.leakage_max = std::max(p.leakage_max, r.leakage[i]);
            f_err += r.function_error_power[i];
            f_ref += r.function_reference_power[i];
            per_unit_nmse.push_back(r.nmse[i]);
            p.aligned_rank_min = std::min(p.aligned_rank_min, r.aligned_rank[i]);
            p.aligned_rank_max = std::max(p.aligned_rank_max, r.aligned_rank[i]);
        }
        for (const auto& device : r.tx_power)
            for (double w : device) {
                tx_sum += w;
                ++tx_count;
            }
    }
    const double units = static_cast<double>(per_unit_nmse.size());
    const double n = static_cast<double>(results.size());
    p.nmse_mean = err_sum / sig_sum;
    p.nmse_median = median(per_unit_nmse);
    p.mse_mean = err_sum / (units * n_ac);
    p.leakage_mean = leak_sum / units;
    p.tx_power_mean = tx_count ? tx_sum / static_cast<double>(tx_count) : 0.0;
    p.function_nmse = f_ref > 0.0 ? f_err / f_ref : 0.0;
    // Expected signal power per unit is K * N_ac for unit-variance symbols.
    p.analytic_nmse = expected_noise_sum / (units * K * n_ac);

    if (results.size() > 1) {
        double ss = 0.0;
        for (const auto& row : results) {
            const TrialResult& r = row.at(point);
            const double e = r.error_power[0] + r.error_power[1];
            const double s = r.signal_power[0] + r.signal_power[1];
            const double d = e - p.nmse_mean * s;
            ss += d * d;
        }
        const double mean_s = sig_sum / n;
        p.nmse_std_error = std::sqrt(ss / (n * (n - 1.0))) / mean_s;
    }
    return p;
}

double log_nmse_slope(const std::vector<SweepPoint>& points, double lo_db, double hi_db)
{
    std::vector<double> x, y;
    for (const auto& p : points) {
        if (p.snr_db < lo_db || p.snr_db > hi_db || !usable_for_fit(p))
            continue;
        x.push_back(p.snr_db);
        y.push_back(std::log10(p.nmse_mean));
    }
    return least_squares_slope(x, y);
}

SweepResult run_sweep(const SystemConfig& config, int workers)
{
    validate(config);
    const auto results = run_trials(config, workers);
    const int n_ac = partition(config.M).n_ac;

    SweepResult out;
    out.config = config;
    for (std::size_t p = 0; p < config.snr_db_grid.size(); ++p)
        out.points.push_back(aggregate_point(results, p, config.snr_db_grid[p], config.K, n_ac));

    std::vector<double> x, y;
    for (std::size_t p = out.points.size() / 2; p < out.points.size(); ++p) {
        if (!usable_for_fit(out.points[p]))
            continue;
        x.push_back(out.points[p].snr_db);
        y.push_back(std::log10(out.points[p].nmse_mean));
    }
    out.dof_slope = least_squares_slope(x, y);
    return out;
}

} // namespace aircomp
