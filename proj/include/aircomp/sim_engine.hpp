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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "aircomp/config.hpp"
#include "aircomp/linalg.hpp"
#include "aircomp/system_model.hpp"

namespace aircomp {

// Whole-channel-set redraws allowed when a precoder construction hits a
// near-singular or rank-deficient matrix.
inline constexpr int kMaxChannelSetRedraws = 100;

// Everything random about one Monte Carlo trial. Depends only on
// (config.seed, trial_index), so every SNR point of a sweep sees the same
// channels, symbols and unit-variance noise; only the noise scale changes.
struct Trial {
    int M = 0;
    int K = 0;
    int n_ac = 0;
    ChannelSet channels;           // cross channels are zero for the genie baseline
    PerCellMatrices B;
    PerCellMatrices A;
    PerDeviceMatrices W;
    SymbolBlock symbols;
    PerCellVectors unit_noise;     // CN(0, I_M)
    // Real device data for the function layer, N_ac values per device.
    std::vector<std::array<std::vector<double>, kNumCells>> data;
    std::array<std::size_t, kNumCells> aligned_rank{};
    int channel_set_redraws = 0;
};

Trial prepare_trial(const SystemConfig& config, std::uint64_t trial_index);

struct TrialResult {
    // Per cell.
    std::array<double, kNumCells> noise_std{};
    std::array<double, kNumCells> error_power{};    // ||y_hat - sum_k x_k||^2
    std::array<double, kNumCells> signal_power{};   // ||sum_k x_k||^2
    std::array<double, kNumCells> nmse{};
    std::array<double, kNumCells> relative_error{}; // sqrt(nmse)
    // ||A_i v_i||^2 / ||v_i||^2 with v_i the pre-beamforming interference;
    // 0 when no interference reaches the AP.
    std::array<double, kNumCells> leakage{};
    std::array<std::size_t, kNumCells> aligned_rank{};
    // sigma_i^2 * tr(A_i A_i^H): expected noise power after beamforming.
    std::array<double, kNumCells> expected_noise_power{};
    std::array<double, kNumCells> function_error_power{};
    std::array<double, kNumCells> function_reference_power{};
    // ||W_{k,i} x_{k,i}||^2 per device.
    std::vector<std::array<double, kNumCells>> tx_power;
};

// noise_std for one AP at the given SNR. Infinite SNR -> 0.
double noise_std_for(double snr_db, SnrReference reference, double desired_power_per_antenna);

TrialResult evaluate_trial(const Trial& trial, const SystemConfig& config, double snr_db);
TrialResult run_trial(const SystemConfig& config, std::uint64_t trial_index, double snr_db);

// Predicted NMSE of y_hat = sum_k x_k + A n with n ~ CN(0, noise_std^2 I):
// noise_std^2 tr(A A^H) / signal_power. For orthonormal rows and unit symbols
// (signal_power = K N_ac) this is noise_std^2 / K.
double analytic_noise_mse(const ComplexMatrix& A_i, double noise_std, double signal_power);

struct SweepPoint {
    double snr_db = 0.0;
    int trials = 0;
    // sum of error power / sum of signal power over trials and cells.
    double nmse_mean = 0.0;
    // Delta-method standard error of nmse_mean, trials as the sampling unit.
    double nmse_std_error = 0.0;
    double nmse_median = 0.0;       // median of per-(trial, cell) NMSE
    double mse_mean = 0.0;          // mean error power per stream
    double leakage_mean = 0.0;
    double leakage_max = 0.0;
    std::size_t aligned_rank_min = 0;
    std::size_t aligned_rank_max = 0;
    double analytic_nmse = 0.0;
    double tx_power_mean = 0.0;     // per device
    double function_nmse = 0.0;
};

struct SweepResult {
    SystemConfig config;
    std::vector<SweepPoint> points;
    // Least-squares slope of log10(nmse_mean) vs SNR (dB) over the upper half
    // of the grid. NaN when fewer than two usable points.
    double dof_slope = 0.0;
};

// Worker count: requested > 0 wins, then AIRCOMP_WORKERS, then the number of
// hardware threads.
int resolve_workers(int requested = 0);

// Per-trial results for every SNR point, indexed [trial][point].
std::vector<std::vector<TrialResult>> run_trials(const SystemConfig& config, int workers = 0);

SweepPoint aggregate_point(const std::vector<std::vector<TrialResult>>& results,
                           std::size_t point, double snr_db, int K, int n_ac);

SweepResult run_sweep(const SystemConfig& config, int workers = 0);

// Least-squares slope of log10(nmse_mean) against snr_db using the points
// with lo_db <= snr_db <= hi_db, finite SNR and positive NMSE.
double log_nmse_slope(const std::vector<SweepPoint>& points, double lo_db, double hi_db);

} // namespace aircomp
