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

// Test-only reference computations. Deliberately written with plain loops and
// no calls into the library's numerical code paths.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "aircomp/linalg.hpp"
#include "aircomp/system_model.hpp"

namespace oracle {

using aircomp::Complex;
using aircomp::ComplexMatrix;
using aircomp::ComplexVector;

inline ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x)
{
    ComplexVector y(a.rows());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        Complex acc(0.0, 0.0);
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            acc += a(r, c) * x(c);
        y(r) = acc;
    }
    return y;
}

// Received vector at AP `cell` accumulated entry by entry:
// sum over every device of both cells, picking H for the home cell and G for
// the neighbour.
inline ComplexVector brute_force_receive(const aircomp::ChannelSet& ch,
                                         const aircomp::PerDeviceMatrices& W,
                                         const aircomp::SymbolBlock& s, int cell,
                                         const ComplexVector& noise)
{
    ComplexVector y = noise;
    for (int src = 0; src < aircomp::kNumCells; ++src) {
        for (int k = 0; k < ch.K; ++k) {
            const ComplexMatrix& link = (src == cell) ? ch.H[k][src] : ch.G[k][src];
            const ComplexVector tx = matvec(W[k][src], s.x[k][src]);
            const ComplexVector rx = matvec(link, tx);
            for (Eigen::Index m = 0; m < y.size(); ++m)
                y(m) += rx(m);
        }
    }
    return y;
}

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
};

inline MeanStderr mean_stderr(const std::vector<double>& v)
{
    MeanStderr out;
    const double n = static_cast<double>(v.size());
    for (double x : v)
        out.mean += x;
    out.mean /= n;
    double ss = 0.0;
    for (double x : v)
        ss += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(ss / (n - 1.0) / n);
    return out;
}

inline double arithmetic_mean(const std::vector<double>& v)
{
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

inline double geometric_mean(const std::vector<double>& v)
{
    double p = 1.0;
    for (double x : v)
        p *= x;
    return std::pow(p, 1.0 / static_cast<double>(v.size()));
}

inline double max_abs_entry(const ComplexMatrix& a)
{
    double m = 0.0;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a(r, c)));
    return m;
}

// Haar-like random unitary from the QR factor of a Gaussian draw.
inline ComplexMatrix random_unitary(int n, aircomp::Rng& rng)
{
    const ComplexMatrix g = aircomp::linalg::gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

} // namespace oracle
