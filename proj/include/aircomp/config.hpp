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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aircomp {

enum class Scheme { sia, no_ia, genie };

// Nomographic function computed from the over-the-air sum.
enum class FunctionKind { sum, mean, geomean };

// How the per-cell reference matrices B_1, B_2 are chosen.
//   random    - orthonormalised Gaussian draws (default)
//   canonical - B_1 = first N' columns of I_M, B_2 = last N' columns of I_M
enum class ReferenceMode { random, canonical };

// What the SNR value in dB is measured against.
//   symbol   - unit-power transmit symbols: noise_std^2 = 1 / SNR
//   received - empirical per-antenna power of the desired-cell superposition
//              at each AP in each trial: noise_std^2 = P_sig / SNR
enum class SnrReference { symbol, received };

std::string_view to_string(Scheme s);
std::string_view to_string(FunctionKind f);
std::string_view to_string(ReferenceMode r);
std::string_view to_string(SnrReference r);

Scheme parse_scheme(std::string_view text);
FunctionKind parse_function(std::string_view text);
ReferenceMode parse_reference(std::string_view text);
SnrReference parse_snr_reference(std::string_view text);

struct SystemConfig {
    int M = 4;           // antennas per node
    int K = 1;           // devices per cell
    int num_cells = 2;   // fixed; anything else is rejected
    std::vector<double> snr_db_grid{0, 5, 10, 15, 20, 25, 30, 35, 40};
    int trials = 200;
    std::uint64_t seed = 1;
    Scheme scheme = Scheme::sia;
    FunctionKind function = FunctionKind::sum;
    ReferenceMode reference = ReferenceMode::random;
    SnrReference snr_reference = SnrReference::symbol;

    bool operator==(const SystemConfig&) const = default;
};

// Throws ConfigError describing the first violated constraint.
void validate(const SystemConfig& config);

// Comma separated list of doubles; "inf" selects the noiseless limit.
std::vector<double> parse_double_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

// Flat "key=value" text, one entry per line, keys named after the
// SystemConfig fields. Blank lines and lines starting with '#' are ignored.
// Keys absent from the text keep the value already present in `base`.
SystemConfig parse_config(std::istream& in, SystemConfig base = {});
SystemConfig load_config(const std::string& path, SystemConfig base = {});
void write_config(std::ostream& out, const SystemConfig& config,
                  std::string_view line_prefix = "");

// Shortest text that reads back to the same double ("inf" for +infinity).
std::string format_double(double value);

} // namespace aircomp
