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
#include <string>

#include "aircomp/linalg.hpp"
#include "aircomp/system_model.hpp"

namespace aircomp {

// Exact rational kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    // "n" for integers, "n/d" otherwise.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class EfficiencyScheme { conventional_ia, sia };

std::string to_string(EfficiencyScheme s);

// Array size of the optimal two-cell uplink IA scheme: N_pu (K + 1).
std::int64_t conventional_ia_array_size(std::int64_t n_pu, std::int64_t K);

// Array size needed by SIA for n_ac streams: 2 n_ac, whatever K is.
std::int64_t sia_array_size(std::int64_t n_ac);

// Functional values per cell per symbol duration divided by the array size.
//   conventional_ia: 1/(K+1)
//   sia:             1/2 (even M), 1/2 - 1/(2M) (odd M)
Rational communication_efficiency(EfficiencyScheme scheme, int M, int K);

struct EfficiencyReport {
    EfficiencyScheme scheme = EfficiencyScheme::sia;
    int M = 0;
    int K = 0;
    Rational streams;     // N_ac for sia, N_pu = M/(K+1) for conventional IA
    Rational efficiency;
};

EfficiencyReport efficiency_report(EfficiencyScheme scheme, int M, int K);

struct PartitionSearchResult {
    int signal_dim = 0;        // M_1
    int interference_dim = 0;  // M_2
    int dof = 0;               // min(M_1, M_2)
    bool balanced = false;     // (M_1, M_2) equals partition(M) up to swap
};

// Exhaustive search over M_1 + M_2 = M, M_1, M_2 >= 1, maximising the
// per-cell AirComp DoF min(M_1, M_2). Ties keep the smaller M_1.
PartitionSearchResult optimal_partition_search(int M);

struct ConventionalPartition {
    Rational signal_dim;        // KM/(K+1)
    Rational interference_dim;  // M/(K+1)
    bool integral = false;
};

ConventionalPartition conventional_partition_dimensions(int M, int K);

// Home-AP signal alignment only: W = (A_i H_{k,i})^+. No interference handling.
ComplexMatrix no_ia_precoder(int k, int cell, const ChannelSet& channels,
                             const ComplexMatrix& A_i);

// Copy of the channel set with every cross channel replaced by zero.
ChannelSet without_cross_channels(ChannelSet channels);

} // namespace aircomp
