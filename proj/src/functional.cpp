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

#include "aircomp/functional.hpp"

#include <cmath>
#include <string>

#include "aircomp/errors.hpp"

namespace aircomp {

ComplexVector preprocess(const FunctionSpec& spec, std::span<const double> data)
{
    ComplexVector out(static_cast<Eigen::Index>(data.size()));
    for (std::size_t s = 0; s < data.size(); ++s) {
        const double d = data[s];
        if (!std::isfinite(d))
            throw DomainError("preprocess: non-finite input");
        if (spec.kind == FunctionKind::geomean) {
            if (!(d > 0.0))
                throw DomainError("preprocess: geomean needs strictly positive input, got " +
                                  std::to_string(d));
            out(static_cast<Eigen::Index>(s)) = Complex(std::log(d), 0.0);
        } else {
            out(static_cast<Eigen::Index>(s)) = Complex(d, 0.0);
        }
    }
    return out;
}

std::vector<double> postprocess(const FunctionSpec& spec, const ComplexVector& aggregate)
{
    if (spec.K < 1)
        throw DomainError("postprocess: K must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(aggregate.size()));
    for (Eigen::Index s = 0; s < aggregate.size(); ++s) {
        const double re = aggregate(s).real();
        switch (spec.kind) {
        case FunctionKind::sum: out[s] = re; break;
        case FunctionKind::mean: out[s] = re / spec.K; break;
        case FunctionKind::geomean: out[s] = std::exp(re / spec.K); break;
        }
    }
    return out;
}

} // namespace aircomp
