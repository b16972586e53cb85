# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""Two-cell over-the-air computation with simultaneous signal-and-interference alignment."""

from ._aircomp import (  # noqa: F401
    AirCompError,
    ConfigError,
    DegenerateChannels,
    DomainError,
    NearSingular,
    RankDeficient,
    SizeMismatch,
    SystemConfig,
    analytic_noise_mse,
    communication_efficiency,
    conventional_ia_array_size,
    inverse,
    left_null_space_basis,
    numerical_rank,
    optimal_partition_search,
    partition,
    postprocess,
    preprocess,
    recover,
    right_inverse,
    run_sweep,
    run_trial,
    sia_array_size,
    sia_matrices,
)

__version__ = "0.1.0"
