# Copyright 2026 The Authors.
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
"""Exact Gale duality, dual defect tests and sparse discriminants."""

from discforge._core import (
    DiscforgeError,
    Polynomial,
    cayley,
    check_grouping,
    check_specialization,
    codim1_discriminant,
    discriminant,
    dual_of,
    dual_variety_dim,
    gale_dual,
    horn_implicitize,
    is_dual_defect,
    lattice_index,
    member,
    reduce,
    rho_bound,
)

__all__ = [
    "DiscforgeError",
    "Polynomial",
    "cayley",
    "check_grouping",
    "check_specialization",
    "codim1_discriminant",
    "discriminant",
    "dual_of",
    "dual_variety_dim",
    "gale_dual",
    "horn_implicitize",
    "is_dual_defect",
    "lattice_index",
    "member",
    "reduce",
    "rho_bound",
]
