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

#include <stdexcept>
#include <string>

namespace aircomp {

// Base for every failure raised by the library. Callers that only care about
// "something went wrong in the simulator" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes do not agree.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

// Square matrix whose 2-norm condition number exceeds the inversion guard.
class NearSingular : public Error {
public:
    using Error::Error;
};

// Matrix lacks the full row/column rank an operation requires.
class RankDeficient : public Error {
public:
    using Error::Error;
};

// Channel redraw budget exhausted without a usable draw.
class DegenerateChannels : public Error {
public:
    using Error::Error;
};

// Invalid SystemConfig, flag or input file.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Input outside a function's domain (e.g. non-positive data for geomean).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace aircomp
