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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace aircomp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Every random draw in the library goes through a caller-owned engine of this
// type; streams are never shared between workers.
using Rng = std::mt19937_64;

namespace linalg {

// Guard thresholds shared by the whole pipeline.
inline constexpr double kMaxConditionNumber = 1e12;
inline constexpr double kFullRankTolerance = 1e-10;
inline constexpr double kDefaultRankTolerance = 1e-8;

// i.i.d. CN(0,1) entries: real and imaginary parts are N(0, 1/2).
ComplexMatrix gaussian_matrix(std::ptrdiff_t rows, std::ptrdiff_t cols, Rng& rng);
ComplexVector gaussian_vector(std::ptrdiff_t size, Rng& rng);

// rows x cols matrix with orthonormal columns (rows >= cols), obtained from the
// thin Q factor of a Gaussian draw.
ComplexMatrix orthonormal_columns(std::ptrdiff_t rows, std::ptrdiff_t cols, Rng& rng);

// 2-norm condition number sigma_max / sigma_min; +inf for singular input.
double condition_number(const ComplexMatrix& a);

// Inverse of a square matrix with condition number <= kMaxConditionNumber.
// Throws SizeMismatch for non-square input and NearSingular past the guard.
ComplexMatrix inverse(const ComplexMatrix& a);

// Minimum-norm (Moore-Penrose) right inverse X of a wide or square matrix,
// a * X = I. Throws SizeMismatch if rows > cols and RankDeficient when the
// smallest singular value is <= kFullRankTolerance * largest.
ComplexMatrix right_inverse(const ComplexMatrix& a);

// Orthonormal-row basis A ((M-n) x M) of the left null space of an M x n
// full-column-rank matrix b, so that A * b = 0 and A * A^H = I.
ComplexMatrix left_null_space_basis(const ComplexMatrix& b);

// Number of singular values strictly above tol * sigma_max. Zero matrix -> 0.
std::size_t numerical_rank(const ComplexMatrix& a, double tol = kDefaultRankTolerance);

bool all_finite(const ComplexMatrix& a);

} // namespace linalg
} // namespace aircomp
