# Copyright 2026 The realcyclo Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Maximal real cyclotomic rings Z[x]/(Psi_n) in the Chebyshev V basis."""

from ._realcyclo import (
    Conductor,
    RealcycloError,
    campaign,
    conductor_with_degree,
    cosine_condition,
    dct2,
    dct3,
    distinguish,
    embedding_condition,
    enumerate_conductors,
    min_poly,
    mul,
    preset_check,
    scan,
    sparse_v,
    verify_min_poly,
)

__all__ = [
    "Conductor",
    "RealcycloError",
    "campaign",
    "conductor_with_degree",
    "cosine_condition",
    "dct2",
    "dct3",
    "distinguish",
    "embedding_condition",
    "enumerate_conductors",
    "min_poly",
    "mul",
    "preset_check",
    "scan",
    "sparse_v",
    "verify_min_poly",
]
