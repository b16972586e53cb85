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

#include "aircomp/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aircomp/errors.hpp"

namespace aircomp {

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b)
{
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string to_string(EfficiencyScheme s)
{
    return s == EfficiencyScheme::sia ? "sia" : "conventional_ia";
}

std::int64_t conventional_ia_array_size(std::int64_t n_pu, std::int64_t K)
{
    if (n_pu < 1 || K < 1)
        throw DomainError("conventional_ia_array_size: n_pu and K must be >= 1");
    return n_pu * (K + 1);
}

std::int64_t sia_array_size(std::int64_t n_ac)
{
    if (n_ac < 1)
        throw DomainError("sia_array_size: n_ac must be >= 1");
    return 2 * n_ac;
}

Rational communication_efficiency(EfficiencyScheme scheme, int M, int K)
{
    if (M < 1 || K < 1)
        throw DomainError("communication_efficiency: M and K must be >= 1");
    if (scheme == EfficiencyScheme::conventional_ia)
        return Rational(1, K + 1);
    if (M < 2)
        throw DomainError("communication_efficiency: SIA needs M >= 2");
    return Rational(partition(M).n_ac, M);
}

EfficiencyReport efficiency_report(EfficiencyScheme scheme, int M, int K)
{
    EfficiencyReport r;
    r.scheme = scheme;
    r.M = M;
    r.K = K;
    r.efficiency = communication_efficiency(scheme, M, K);
    r.streams = scheme == EfficiencyScheme::sia ? Rational(partition(M).n_ac)
                                                : Rational(M, K + 1);
    return r;
}

PartitionSearchResult optimal_partition_search(int M)
{
    if (M < 2)
        throw DomainError("optimal_partition_search: M must be >= 2");
    PartitionSearchResult best;
    best.dof = -1;
    for (int m1 = 1; m1 < M; ++m1) {
        const int m2 = M - m1;
        const int dof = std::min(m1, m2);
        if (dof > best.dof) {
            best.signal_dim = m1;
            best.interference_dim = m2;
            best.dof = dof;
        }
    }
    const Partition p = partition(M);
    best.balanced = (best.signal_dim == p.n_ac && best.interference_dim == p.n_prime) ||
                    (best.signal_dim == p.n_prime && best.interference_dim == p.n_ac);
    return best;
}

ConventionalPartition conventional_partition_dimensions(int M, int K)
{
    if (M < 1 || K < 1)
        throw DomainError("conventional_partition_dimensions: M and K must be >= 1");
    ConventionalPartition out;
    out.signal_dim = Rational(static_cast<std::int64_t>(K) * M, K + 1);
    out.interference_dim = Rational(M, K + 1);
    out.integral = out.signal_dim.is_integer() && out.interference_dim.is_integer();
    return out;
}

ComplexMatrix no_ia_precoder(int k, int cell, const ChannelSet& channels, const ComplexMatrix& A_i)
{
    if (k < 0 || k >= channels.K || cell < 0 || cell >= kNumCells)
        throw SizeMismatch("no_ia_precoder: device index out of range");
    if (A_i.cols() != channels.M)
        throw SizeMismatch("no_ia_precoder: A_i does not match M");
    return linalg::right_inverse(A_i * channels.H[k][cell]);
}

ChannelSet without_cross_channels(ChannelSet channels)
{
    for (auto& device : channels.G)
        for (auto& g : device)
            g.setZero();
    return channels;
}

} // namespace aircomp
