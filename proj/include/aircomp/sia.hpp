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

#include <cstddef>

#include "aircomp/config.hpp"
#include "aircomp/linalg.hpp"
#include "aircomp/system_model.hpp"

namespace aircomp {

// Matrices of the simultaneous signal-and-interference alignment scheme.
//
// Device (k,i) transmits through W = W_a * B_i * W_c where
//   W_a = G_{k,i}^-1                        undoes the cross channel,
//   B_i (M x N')                            pins cell i's interference at AP j
//                                           to span(B_i),
//   W_c = (A_i H_{k,i} W_a B_i)^+           equalises the effective channel so
//                                           that A_i H_{k,i} W = I_{N_ac}.
// A_i spans the left null space of B_j, so AP i discards everything the
// neighbouring cell sends and receives the plain sum of its own symbols.
struct SiaMatrices {
    PerCellMatrices B;       // M x N' reference matrices (W_b)
    PerCellMatrices A;       // N_ac x M aggregation beamformers
    PerDeviceMatrices W_a;   // M x M
    PerDeviceMatrices W_c;   // N' x N_ac
    PerDeviceMatrices W;     // M x N_ac cascaded precoders
};

// Orthonormal-column M x n_prime reference matrices, one per cell.
PerCellMatrices build_reference_matrices(int M, int n_prime, Rng& rng,
                                         ReferenceMode mode = ReferenceMode::random);

// A_1 = null(B_2), A_2 = null(B_1), both with orthonormal rows.
PerCellMatrices build_aggregation_beamformers(const PerCellMatrices& B);

struct PrecoderParts {
    ComplexMatrix W_a;
    ComplexMatrix W_c;
    ComplexMatrix W;
};

// Throws NearSingular / RankDeficient for degenerate draws; callers redraw.
PrecoderParts build_precoder(int k, int cell, const ChannelSet& channels,
                             const ComplexMatrix& A_i, const ComplexMatrix& B_i);

// Full construction for one channel realisation.
SiaMatrices build_sia(const ChannelSet& channels, const PerCellMatrices& B);

// Rank of [G_{1,i} W_{1,i} | ... | G_{K,i} W_{K,i}], the footprint of cell i
// at the neighbouring AP. For SIA this is min(K * N_ac, N').
std::size_t aligned_interference_dimension(int cell, const ChannelSet& channels,
                                           const PerDeviceMatrices& precoders);

// y_hat = A_i * y_tilde.
ComplexVector recover(const ComplexMatrix& A_i, const ComplexVector& y_tilde);

} // namespace aircomp
