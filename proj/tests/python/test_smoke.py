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
"""Smoke tests for the Python module and the command-line tool."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import discforge

TWISTED_CUBIC = [[1, 0], [-2, 1], [1, -2], [0, 1]]
SEVEN = [[0, 1], [-3, 1], [2, -3], [-1, 1], [1, 0], [3, 0], [-2, 0]]


def test_gale_dual_annihilates_points():
    a = [[1, 1, 1, 1], [0, 1, 2, 3]]
    b = discforge.gale_dual(a)
    for row in a:
        for k in range(len(b[0])):
            assert sum(row[i] * b[i][k] for i in range(4)) == 0
    assert discforge.lattice_index(b) == 1


def test_cubic_discriminant():
    d = discforge.discriminant(TWISTED_CUBIC)
    assert str(d) == "x2^2*x3^2 - 4*x1*x3^3 - 4*x2^3*x4 + 18*x1*x2*x3*x4 - 27*x1^2*x4^2"
    assert len(d) == 5
    assert d.evaluate(["-1", "3", "-3", "1"]) == "0"


def test_quadratic_from_points():
    d = discforge.discriminant([[1, 1, 1], [0, 1, 2]], side="A")
    assert d.terms == [(1, [0, 2, 0]), (-4, [1, 0, 1])]


def test_large_coefficients_are_python_ints():
    d, trace = discforge.discriminant(SEVEN, trace=True)
    coeffs = [c for c, _ in d.terms]
    assert -14348907 in coeffs
    assert json.loads(trace)["step"] == "non-splitting-line"


def test_membership_accepts_fractions():
    assert discforge.member(TWISTED_CUBIC, [1, -1, -1, 1])
    assert not discforge.member(TWISTED_CUBIC, [Fraction(1, 2), 1, 1, 1])


def test_defect_and_rho():
    b = discforge.gale_dual(discforge.cayley([2, 2, 2]))
    report = discforge.is_dual_defect(b, cross_check=True)
    assert report["defect"] and report["checks_agreed"]
    assert discforge.dual_variety_dim(discforge.cayley([2, 2, 2])) == 6
    rho = discforge.rho_bound(b)
    assert rho["rho"] == 3 and rho["sufficient_defect"]


def test_checks_on_seven_vectors():
    assert discforge.check_specialization(SEVEN, 4)["divides"]
    assert discforge.check_grouping(SEVEN, 4, 5)
    assert discforge.reduce(SEVEN)["labels"][-1] == "x5+x6+x7"


def test_errors_raise():
    with pytest.raises(discforge.DiscforgeError, match="NotHomogeneous"):
        discforge.discriminant([[1], [1], [-1]])
    with pytest.raises(ValueError):
        discforge.gale_dual([[1, 1, 1], [0, 0, 2]])


@pytest.mark.skipif("DISCFORGE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_round_trip():
    cli = os.environ["DISCFORGE_CLI"]
    out = subprocess.run([cli, "index", "--matrix", "[[2,0],[0,1]]"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == {"index": "2"}
    bad = subprocess.run([cli, "discriminant", "--matrix", "[[1],[1],[-1]]"],
                         capture_output=True, text=True)
    assert bad.returncode == 3
