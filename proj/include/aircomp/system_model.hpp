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
#include <cstdint>
#include <vector>

#include "aircomp/config.hpp"
#include "aircomp/linalg.hpp"

namespace aircomp {

inline constexpr int kNumCells = 2;

// Cell index helpers: cells are 0 and 1, the neighbour of i is 1 - i.
constexpr int other_cell(int cell) { return 1 - cell; }

// Split of the M-dimensional receive space into the signal subspace
// (n_ac = floor(M/2), the AirComp DoF) and the interference subspace
// (n_prime = ceil(M/2)).
struct Partition {
    int n_ac = 0;
    int n_prime = 0;

    bool operator==(const Partition&) const = default;
};

Partition partition(int M);

// Per-device matrices indexed [k][cell].
using PerDeviceMatrices = std::vector<std::array<ComplexMatrix, kNumCells>>;
using PerDeviceVectors = std::vector<std::array<ComplexVector, kNumCells>>;
using PerCellMatrices = std::array<ComplexMatrix, kNumCells>;
using PerCellVectors = std::array<ComplexVector, kNumCells>;

struct ChannelSet {
    int M = 0;
    int K = 0;
    PerDeviceMatrices H;  // device (k,i) -> its own AP i
    PerDeviceMatrices G;  // device (k,i) -> neighbouring AP j != i
    // Number of matrices rejected by the condition guard while drawing.
    int redraws = 0;
};

struct SymbolBlock {
    PerDeviceVectors x;  // N_ac x 1 per device
};

struct ChannelDrawOptions {
    int max_retries_per_matrix = 100;
    // Cross channels are left at zero (interference-free reference).
    bool zero_cross_channels = false;
};

// Draws 2K direct and 2K cross M x M CN(0,1) channels, redrawing any matrix
// whose condition number exceeds the inversion guard. Throws
// DegenerateChannels once a matrix exhausts its retry budget.
ChannelSet draw_channels(int M, int K, Rng& rng, const ChannelDrawOptions& options = {});
ChannelSet draw_channels(const SystemConfig& config, Rng& rng,
                         const ChannelDrawOptions& options = {});

// x_{k,i} ~ CN(0, I_{N_ac}). Throws ConfigError if N_ac = 0.
SymbolBlock draw_symbols(int M, int K, Rng& rng);
SymbolBlock draw_symbols(const SystemConfig& config, Rng& rng);

// Noise-free contributions observed at each AP before beamforming.
struct ReceivedComponents {
    PerCellVectors desired;       // sum_k H_{k,i} W_{k,i} x_{k,i}
    PerCellVectors interference;  // sum_k G_{k,j} W_{k,j} x_{k,j}
};

ReceivedComponents received_components(const ChannelSet& channels,
                                       const PerDeviceMatrices& precoders,
                                       const SymbolBlock& symbols);

// ~y_i = desired_i + interference_i + n_i with n_i drawn CN(0, noise_std^2 I).
// Noise is always drawn, so the stream position does not depend on noise_std.
PerCellVectors receive(const ChannelSet& channels, const PerDeviceMatrices& precoders,
                       const SymbolBlock& symbols, double noise_std, Rng& rng);

// Same equation with caller-supplied noise vectors.
PerCellVectors receive(const ChannelSet& channels, const PerDeviceMatrices& precoders,
                       const SymbolBlock& symbols, const PerCellVectors& noise);

// Per-trial random stream derived from (seed, stream_index); independent of
// how trials are scheduled across workers.
Rng make_stream(std::uint64_t seed, std::uint64_t stream_index);

} // namespace aircomp
