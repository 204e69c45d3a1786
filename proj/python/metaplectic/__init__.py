# Copyright 2026 The Metaplectic Compiler Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Qutrit circuit synthesis over the metaplectic gate set."""

from ._core import (
    InputError,
    SynthesisError,
    approx_state,
    axial_reflection,
    classical_group_order,
    distance,
    exact_synthesize_1q,
    r_count,
    rc,
    simulate,
    solve_norm,
    synthesize,
)

__all__ = [
    "InputError",
    "SynthesisError",
    "approx_state",
    "axial_reflection",
    "classical_group_order",
    "distance",
    "exact_synthesize_1q",
    "r_count",
    "rc",
    "simulate",
    "solve_norm",
    "synthesize",
]
