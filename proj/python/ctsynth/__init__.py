# Copyright 2026 The ctsynth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Clifford+T synthesis of single-qubit unitaries."""

from ._ctsynth import (
    SynthesisError,
    approximate_rz,
    approximate_su2,
    count_normal_forms,
    lower_bound_tcount,
    normalize,
    t_count,
    verify,
)

__all__ = [
    "SynthesisError",
    "approximate_rz",
    "approximate_su2",
    "count_normal_forms",
    "lower_bound_tcount",
    "normalize",
    "t_count",
    "verify",
]
