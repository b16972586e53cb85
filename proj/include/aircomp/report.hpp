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

#include <iosfwd>
#include <string>
#include <vector>

#include "aircomp/baselines.hpp"
#include "aircomp/config.hpp"
#include "aircomp/sim_engine.hpp"

namespace aircomp {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kJsonSchemaVersion = 1;

// Column order of the sweep CSV. Stable; readers rely on it.
inline constexpr const char* kSweepCsvHeader =
    "scheme,M,K,snr_db,trials,nmse_mean,nmse_median,leakage_mean,aligned_rank,"
    "analytic_nmse,dof_slope";
inline constexpr const char* kCompareCsvHeader =
    "scheme,M,K,streams,efficiency_num,efficiency_den";

struct RunManifest {
    SystemConfig config;
    std::string version = kToolVersion;
    std::string timestamp;               // ISO-8601 UTC
    std::vector<std::string> outputs;
};

std::string utc_timestamp();

// 12 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_sig12(double value);

// Manifest as '#'-prefixed comment lines followed by the header and one row
// per SNR point. Everything after the comment block is the CSV body.
void write_sweep_csv(std::ostream& out, const SweepResult& result, const RunManifest& manifest);
void write_sweep_json(std::ostream& out, const SweepResult& result, const RunManifest& manifest);

// Data rows only (no comment lines), for byte-level comparisons.
std::string csv_body(const std::string& csv_text);

void write_compare_csv(std::ostream& out, const std::vector<EfficiencyReport>& rows);

struct SweepCsvRow {
    std::string scheme;
    int M = 0;
    int K = 0;
    double snr_db = 0.0;
    int trials = 0;
    double nmse_mean = 0.0;
    double nmse_median = 0.0;
    double leakage_mean = 0.0;
    int aligned_rank = 0;
    double analytic_nmse = 0.0;
    double dof_slope = 0.0;
};

// Accepts concatenated files: comment lines and repeated headers are skipped.
// Throws ConfigError on malformed rows or when no data row is present.
std::vector<SweepCsvRow> read_sweep_csv(std::istream& in);

struct PlotStats {
    std::size_t polylines = 0;
    std::size_t vertices = 0;
};

// Log-scale NMSE vs SNR chart, one polyline per (scheme, M, K) series.
PlotStats write_nmse_svg(std::ostream& out, const std::vector<SweepCsvRow>& rows);

} // namespace aircomp
