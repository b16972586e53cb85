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

#include "aircomp/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "aircomp/errors.hpp"

namespace aircomp::linalg {

namespace {

std::string shape(const ComplexMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

Eigen::VectorXd singular_values(const ComplexMatrix& a)
{
    return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
}

} // namespace

ComplexMatrix gaussian_matrix(std::ptrdiff_t rows, std::ptrdiff_t cols, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix out(rows, cols);
    // Column-major fill order is part of the determinism contract.
    for (std::ptrdiff_t c = 0; c < cols; ++c) {
        for (std::ptrdiff_t r = 0; r < rows; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            out(r, c) = Complex(re, im);
        }
    }
    return out;
}

ComplexVector gaussian_vector(std::ptrdiff_t size, Rng& rng)
{
    return gaussian_matrix(size, 1, rng).col(0);
}

ComplexMatrix orthonormal_columns(std::ptrdiff_t rows, std::ptrdiff_t cols, Rng& rng)
{
    if (cols > rows) {
        throw SizeMismatch("orthonormal_columns: cols " + std::to_string(cols) +
                           " exceeds rows " + std::to_string(rows));
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
        const ComplexMatrix draw = gaussian_matrix(rows, cols, rng);
        if (numerical_rank(draw, kFullRankTolerance) < static_cast<std::size_t>(cols))
            continue;
        Eigen::HouseholderQR<ComplexMatrix> qr(draw);
        return qr.householderQ() * ComplexMatrix::Identity(rows, cols);
    }
    throw RankDeficient("orthonormal_columns: no full-rank Gaussian draw in 100 attempts");
}

double condition_number(const ComplexMatrix& a)
{
    const Eigen::VectorXd s = singular_values(a);
    if (s.size() == 0)
        return std::numeric_limits<double>::infinity();
    const double smin = s(s.size() - 1);
    if (smin == 0.0)
        return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

ComplexMatrix inverse(const ComplexMatrix& a)
{
    if (a.rows() != a.cols() || a.rows() == 0)
        throw SizeMismatch("inverse: expected a non-empty square matrix, got " + shape(a));
    const double cond = condition_number(a);
    if (!(cond <= kMaxConditionNumber))
        throw NearSingular("inverse: condition number " + std::to_string(cond) +
                           " exceeds guard");
    return Eigen::PartialPivLU<ComplexMatrix>(a).inverse();
}

ComplexMatrix right_inverse(const ComplexMatrix& a)
{
    if (a.rows() > a.cols() || a.rows() == 0)
        throw SizeMismatch("right_inverse: expected rows <= cols, got " + shape(a));
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    if (!(smax > 0.0) || !(smin > kFullRankTolerance * smax))
        throw RankDeficient("right_inverse: " + shape(a) + " matrix is not full row rank");
    // X = V * S^-1 * U^H
    return svd.matrixV() * s.cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
}

ComplexMatrix left_null_space_basis(const ComplexMatrix& b)
{
    const auto m = b.rows();
    const auto n = b.cols();
    if (n == 0 || n >= m)
        throw SizeMismatch("left_null_space_basis: expected M x n with 0 < n < M, got " +
                           shape(b));
    Eigen::JacobiSVD<ComplexMatrix> svd(b, Eigen::ComputeFullU);
    const Eigen::VectorXd& s = svd.singularValues();
    if (!(s(0) > 0.0) || !(s(n - 1) > kFullRankTolerance * s(0)))
        throw RankDeficient("left_null_space_basis: " + shape(b) +
                            " matrix is not full column rank");
    return svd.matrixU().rightCols(m - n).adjoint();
}

std::size_t numerical_rank(const ComplexMatrix& a, double tol)
{
    if (a.size() == 0)
        return 0;
    const Eigen::VectorXd s = singular_values(a);
    if (!(s(0) > 0.0))
        return 0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > tol * s(0))
            ++rank;
    }
    return rank;
}

bool all_finite(const ComplexMatrix& a)
{
    return a.allFinite();
}

} // namespace aircomp::linalg
