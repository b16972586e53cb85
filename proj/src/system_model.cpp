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

#include "aircomp/system_model.hpp"

#include <string>

#include "aircomp/errors.hpp"

namespace aircomp {

namespace {

ComplexMatrix draw_guarded(int M, Rng& rng, int max_retries, int& redraws)
{
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        ComplexMatrix h = linalg::gaussian_matrix(M, M, rng);
        if (linalg::condition_number(h) <= linalg::kMaxConditionNumber)
            return h;
        ++redraws;
    }
    throw DegenerateChannels("channel draw exceeded " + std::to_string(max_retries) +
                             " retries at the condition-number guard");
}

void check_shapes(const ChannelSet& channels, const PerDeviceMatrices& precoders,
                  const SymbolBlock& symbols)
{
    const auto K = static_cast<std::size_t>(channels.K);
    if (channels.H.size() != K || channels.G.size() != K || precoders.size() != K ||
        symbols.x.size() != K)
        throw SizeMismatch("receive: device counts of channels, precoders and symbols differ");
    for (std::size_t k = 0; k < K; ++k) {
        for (int i = 0; i < kNumCells; ++i) {
            const auto& w = precoders[k][i];
            if (w.rows() != channels.M || w.cols() != symbols.x[k][i].size())
                throw SizeMismatch("receive: precoder of device (" + std::to_string(k) + "," +
                                   std::to_string(i) + ") does not match M x N_ac");
        }
    }
}

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Partition partition(int M)
{
    return Partition{M / 2, M - M / 2};
}

ChannelSet draw_channels(int M, int K, Rng& rng, const ChannelDrawOptions& options)
{
    ChannelSet out;
    out.M = M;
    out.K = K;
    out.H.resize(static_cast<std::size_t>(K));
    out.G.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        for (int i = 0; i < kNumCells; ++i) {
            out.H[k][i] = draw_guarded(M, rng, options.max_retries_per_matrix, out.redraws);
            if (options.zero_cross_channels)
                out.G[k][i] = ComplexMatrix::Zero(M, M);
            else
                out.G[k][i] = draw_guarded(M, rng, options.max_retries_per_matrix, out.redraws);
        }
    }
    return out;
}

ChannelSet draw_channels(const SystemConfig& config, Rng& rng, const ChannelDrawOptions& options)
{
    return draw_channels(config.M, config.K, rng, options);
}

SymbolBlock draw_symbols(int M, int K, Rng& rng)
{
    const int n_ac = partition(M).n_ac;
    if (n_ac < 1)
        throw ConfigError("M=" + std::to_string(M) + " yields zero AirComp DoF");
    SymbolBlock out;
    out.x.resize(static_cast<std::size_t>(K));
    for (auto& device : out.x)
        for (auto& x : device)
            x = linalg::gaussian_vector(n_ac, rng);
    return out;
}

SymbolBlock draw_symbols(const SystemConfig& config, Rng& rng)
{
    return draw_symbols(config.M, config.K, rng);
}

ReceivedComponents received_components(const ChannelSet& channels,
                                       const PerDeviceMatrices& precoders,
                                       const SymbolBlock& symbols)
{
    check_shapes(channels, precoders, symbols);
    ReceivedComponents out;
    for (int i = 0; i < kNumCells; ++i) {
        out.desired[i] = ComplexVector::Zero(channels.M);
        out.interference[i] = ComplexVector::Zero(channels.M);
    }
    for (int k = 0; k < channels.K; ++k) {
        for (int i = 0; i < kNumCells; ++i) {
            const ComplexVector tx = precoders[k][i] * symbols.x[k][i];
            out.desired[i] += channels.H[k][i] * tx;
            out.interference[other_cell(i)] += channels.G[k][i] * tx;
        }
    }
    return out;
}

PerCellVectors receive(const ChannelSet& channels, const PerDeviceMatrices& precoders,
                       const SymbolBlock& symbols, const PerCellVectors& noise)
{
    for (const auto& n : noise)
        if (n.size() != channels.M)
            throw SizeMismatch("receive: noise vector length differs from M");
    const auto parts = received_components(channels, precoders, symbols);
    PerCellVectors out;
    for (int i = 0; i < kNumCells; ++i)
        out[i] = parts.desired[i] + parts.interference[i] + noise[i];
    return out;
}

PerCellVectors receive(const ChannelSet& channels, const PerDeviceMatrices& precoders,
                       const SymbolBlock& symbols, double noise_std, Rng& rng)
{
    if (!(noise_std >= 0.0))
        throw ConfigError("receive: noise_std must be nonnegative");
    PerCellVectors noise;
    for (auto& n : noise)
        n = noise_std * linalg::gaussian_vector(channels.M, rng);
    return receive(channels, precoders, symbols, noise);
}

Rng make_stream(std::uint64_t seed, std::uint64_t stream_index)
{
    std::uint64_t state = seed;
    const std::uint64_t a = splitmix64(state);
    state ^= stream_index * 0xd1b54a32d192ed03ULL;
    const std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return Rng(seq);
}

} // namespace aircomp
