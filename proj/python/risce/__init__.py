# SPDX-License-Identifier: Apache-2.0
#
# risce: semi-blind channel estimation for RIS-assisted MIMO links
# Copyright (C) 2026 The risce authors
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

"""Semi-blind channel estimation for RIS-assisted MIMO links."""

from ._core import (  # noqa: F401
    Error,
    ParseError,
    SystemConfig,
    aggregate_csv,
    combine,
    design_dft_frames,
    flops,
    khatri_rao,
    kron,
    krf_decouple,
    load_config,
    nmse,
    parse_config,
    pinv,
    read_aggregates_csv,
    read_trials_csv,
    run_sweep,
    run_trial,
    synthesize,
    tals,
    trials_csv,
    tsb,
    validate,
)

__version__ = "0.1.0"
