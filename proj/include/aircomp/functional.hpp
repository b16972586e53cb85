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

#include <span>
#include <vector>

#include "aircomp/config.hpp"
#include "aircomp/linalg.hpp"

namespace aircomp {

// Nomographic function f(d_1..d_K) = post(sum_k pre(d_k)), applied per stream.
//   sum:     pre = identity, post = s
//   mean:    pre = identity, post = s / K
//   geomean: pre = ln,       post = exp(s / K)
// Data rides on the real part of each symbol; the imaginary part is zero.
struct FunctionSpec {
    FunctionKind kind = FunctionKind::sum;
    int K = 1;
};

// Throws DomainError for non-finite data or non-positive geomean input.
ComplexVector preprocess(const FunctionSpec& spec, std::span<const double> data);

// Maps the over-the-air aggregate (possibly noisy) to function values.
std::vector<double> postprocess(const FunctionSpec& spec, const ComplexVector& aggregate);

} // namespace aircomp
