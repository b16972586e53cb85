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

#include <iosfwd>

namespace aircomp::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDegenerate = 3;

// Entry point shared by the executable and the tests. Subcommands:
//   run      Monte Carlo NMSE sweep, CSV or JSON output
//   compare  communication-efficiency table, conventional IA vs SIA
//   plot     SVG chart of NMSE vs SNR from a run CSV
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace aircomp::cli
