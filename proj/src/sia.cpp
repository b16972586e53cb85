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

#include "aircomp/sia.hpp"

#include <string>

#include "aircomp/errors.hpp"

namespace aircomp {

PerCellMatrices build_reference_matrices(int M, int n_prime, Rng& rng, ReferenceMode mode)
{
    if (n_prime < 1 || n_prime >= M)
        throw SizeMismatch("build_reference_matrices: need 0 < N' < M, got N'=" +
                           std::to_string(n_prime) + ", M=" + std::to_string(M));
    PerCellMatrices B;
    if (mode == ReferenceMode::canonical) {
        const ComplexMatrix eye = ComplexMatrix::Identity(M, M);
        B[0] = eye.leftCols(n_prime);
        B[1] = eye.rightCols(n_prime);
        return B;
    }
    for (auto& b : B)
        b = linalg::orthonormal_columns(M, n_prime, rng);
    return B;
}

PerCellMatrices build_aggregation_beamformers(const PerCellMatrices& B)
{
    PerCellMatrices A;
    for (int i = 0; i < kNumCells; ++i)
        A[i] = linalg::left_null_space_basis(B[other_cell(i)]);
    return A;
}

PrecoderParts build_precoder(int k, int cell, const ChannelSet& channels,
                             const ComplexMatrix& A_i, const ComplexMatrix& B_i)
{
    if (k < 0 || k >= channels.K || cell < 0 || cell >= kNumCells)
        throw SizeMismatch("build_precoder: device index out of range");
    const auto& H = channels.H[k][cell];
    const auto& G = channels.G[k][cell];
    if (A_i.cols() != channels.M || B_i.rows() != channels.M)
        throw SizeMismatch("build_precoder: A_i / B_i do not match M");

    PrecoderParts out;
    out.W_a = linalg::inverse(G);
    const ComplexMatrix ia = out.W_a * B_i;            // M x N'
    const ComplexMatrix effective = A_i * H * ia;      // N_ac x N'
    out.W_c = linalg::right_inverse(effective);        // N' x N_ac
    out.W = ia * out.W_c;
    return out;
}

SiaMatrices build_sia(const ChannelSet& channels, const PerCellMatrices& B)
{
    SiaMatrices out;
    out.B = B;
    out.A = build_aggregation_beamformers(B);
    const auto K = static_cast<std::size_t>(channels.K);
    out.W_a.resize(K);
    out.W_c.resize(K);
    out.W.resize(K);
    for (int k = 0; k < channels.K; ++k) {
        for (int i = 0; i < kNumCells; ++i) {
            auto parts = build_precoder(k, i, channels, out.A[i], out.B[i]);
            out.W_a[k][i] = std::move(parts.W_a);
            out.W_c[k][i] = std::move(parts.W_c);
            out.W[k][i] = std::move(parts.W);
        }
    }
    return out;
}

std::size_t aligned_interference_dimension(int cell, const ChannelSet& channels,
                                           const PerDeviceMatrices& precoders)
{
    if (precoders.size() != static_cast<std::size_t>(channels.K) || channels.K == 0)
        throw SizeMismatch("aligned_interference_dimension: precoder count differs from K");
    const auto n_ac = precoders[0][cell].cols();
    ComplexMatrix stack(channels.M, channels.K * n_ac);
    for (int k = 0; k < channels.K; ++k)
        stack.middleCols(k * n_ac, n_ac) = channels.G[k][cell] * precoders[k][cell];
    return linalg::numerical_rank(stack);
}

ComplexVector recover(const ComplexMatrix& A_i, const ComplexVector& y_tilde)
{
    if (A_i.cols() != y_tilde.size())
        throw SizeMismatch("recover: beamformer has " + std::to_string(A_i.cols()) +
                           " columns but received vector has length " +
                           std::to_string(y_tilde.size()));
    return A_i * y_tilde;
}

} // namespace aircomp
