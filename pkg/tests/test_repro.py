###
# Copyright 2026-present The galepoly Authors.
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
###
"""Test file for the repro.py module."""

import typing

import pytest

from galepoly import repro
from galepoly.repro import Criterion, CriterionResult, format_table, run_all


def fail_with_value_error() -> typing.List[str]:
    """Raise the error a multiplex generator raises for d=1."""
    raise ValueError("A multiplex must have dimension at least 2, got d=1")


def fail_with_type_error() -> typing.List[str]:
    """Fail the way a criterion with a bug in it would."""
    raise TypeError("unhashable type: 'set'")


def test_run_all_records_exceptions(monkeypatch: pytest.MonkeyPatch) -> None:
    """Check a criterion raising an exception is recorded as failing instead of aborting the run."""
    monkeypatch.setattr(repro, "CRITERIA", (
        Criterion("passing", "Nothing is wrong", lambda: []),
        Criterion("raising", "Something is wrong", fail_with_value_error),
        Criterion("broken", "Something else is wrong", fail_with_type_error),
        Criterion("slow", "Takes a while", lambda: ["not run"], slow=True),
    ))

    results = run_all(include_slow=False)
    assert [result.name for result in results] == ["passing", "raising", "broken"]
    assert results[0].passed
    assert not results[1].passed
    assert results[1].failures == [
        "ValueError: A multiplex must have dimension at least 2, got d=1"
    ]
    assert results[2].failures == ["TypeError: unhashable type: 'set'"]

    assert [result.name for result in run_all()] == ["passing", "raising", "broken", "slow"]


def test_format_table() -> None:
    """Check failures are listed below the criterion they belong to."""
    table = format_table([
        CriterionResult("oracle", "Hulls are cyclic", []),
        CriterionResult("lattice", "Lattices are Eulerian", ["C(6,3) is not Eulerian"]),
    ])
    assert table.splitlines() == [
        "PASS  oracle        Hulls are cyclic",
        "FAIL  lattice       Lattices are Eulerian",
        "      - C(6,3) is not Eulerian",
    ]


def test_format_table_anchor() -> None:
    """Check the known result behind a claim is printed at the end of its row."""
    table = format_table([CriterionResult("cyclic", "Hulls are cyclic", [], anchor="u = n")])
    assert table == "PASS  cyclic        Hulls are cyclic [u = n]"


def test_every_criterion_has_an_anchor() -> None:
    """Check every criterion of the acceptance suite names the known result it restates."""
    assert all(criterion.anchor for criterion in repro.CRITERIA)
    bicyclic = next(criterion for criterion in repro.CRITERIA if criterion.name == "bicyclic")
    assert "period 15" in bicyclic.claim
    assert bicyclic.anchor.endswith("estimates 12")


@pytest.mark.parametrize(
    "name",
    ("oracle", "divisibility", "braxtope", "cyclic", "trig-moment"),
)
def test_criterion_passes(name: str) -> None:
    """Check the fast acceptance criteria hold."""
    (criterion, ) = [criterion for criterion in repro.CRITERIA if criterion.name == name]
    assert not criterion.slow
    assert criterion.check() == []


@pytest.mark.slow
@pytest.mark.parametrize(
    "name",
    ("bicyclic", "multiplex", "flag-vector", "lattice"),
)
def test_slow_criterion_passes(name: str) -> None:
    """Check the acceptance criteria that enumerate larger lattices or hulls hold."""
    (criterion, ) = [criterion for criterion in repro.CRITERIA if criterion.name == name]
    assert criterion.check() == []
