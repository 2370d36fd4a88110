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
"""Test file for the realization.py module."""

import fractions
import random
import typing

import pytest

from galepoly.gale import cyclic_facets
from galepoly.hull import hull_facets
from galepoly.points import PointConfig, moment_points, sigma_points
from galepoly.realization import CyclicityMethod, CyclicityResult, NotGale
from galepoly.realization import NotPeriodicallyCyclic, bicyclic_report, detect_period
from galepoly.realization import is_cyclic_polytope, is_rotation_invariant, search_pc_point
from galepoly.realization import verify_pc_step

F = fractions.Fraction


def octahedron_points() -> PointConfig:
    """Return the exact vertices of the octahedron."""
    points = []
    for axis in range(3):
        for sign in (1, -1):
            points.append(tuple(F(sign) if j == axis else F(0) for j in range(3)))
    return PointConfig(dim=3, points=tuple(points))


def cube_points() -> PointConfig:
    """Return the exact vertices of the unit cube."""
    return PointConfig(
        dim=3, points=tuple(tuple(F((v >> axis) & 1) for axis in range(3)) for v in range(8)))


def test_cyclic_in_index_order() -> None:
    """Check points on the moment curve are recognized as cyclic without computing the hull."""
    result = is_cyclic_polytope(moment_points(range(1, 8), 4))
    assert result
    assert result.order == tuple(range(7))
    assert result.method is CyclicityMethod.INDEX_ORDER


@pytest.mark.parametrize(("order", "d", "method"), (
    pytest.param([3, 0, 6, 1, 5, 2, 7, 4], 4, CyclicityMethod.UNIVERSAL_EDGE_CYCLE,
                 id="universal-edges"),
    pytest.param([2, 0, 4, 1, 5, 3], 3, CyclicityMethod.EXHAUSTIVE, id="exhaustive"),
    pytest.param([4, 0, 8, 2, 6, 1, 7, 3, 5], 3, CyclicityMethod.LATTICE_ISOMORPHISM,
                 id="lattice-isomorphism"),
))
def test_cyclic_in_another_order(order: typing.List[int], d: int, method: CyclicityMethod) -> None:
    """Check a shuffled moment curve configuration is cyclic with respect to a recovered vertex
    array.
    """
    pc = moment_points(range(1, len(order) + 1), d).subconfig(order)
    if method is CyclicityMethod.UNIVERSAL_EDGE_CYCLE:
        result = is_cyclic_polytope(pc)
    else:
        with pytest.warns(UserWarning, match="past the order of its points"):
            result = is_cyclic_polytope(pc)

    assert result
    assert result.method is method
    assert result.order is not None
    relabeled = hull_facets(pc).relabeled(result.order)
    assert relabeled.facet_set == cyclic_facets(len(order), d).facet_set


def test_not_cyclic() -> None:
    """Check hulls which are not cyclic polytopes are rejected."""
    with pytest.warns(UserWarning, match="past the order of its points"):
        assert not is_cyclic_polytope(octahedron_points())

    assert not is_cyclic_polytope(cube_points())

    pc = moment_points(range(5), 3)
    assert not is_cyclic_polytope(pc.with_point(pc.centroid()))


def test_detect_period_of_cyclic_configuration() -> None:
    """Check the period of a cyclic configuration is its number of points."""
    assert detect_period(moment_points(range(1, 10), 4)) == 9


def test_detect_period_preconditions() -> None:
    """Check configurations which are not Gale or are too small are rejected."""
    with pytest.raises(NotGale):
        detect_period(octahedron_points())

    with pytest.raises(ValueError, match="d \\+ 2 = 6"):
        detect_period(moment_points(range(5), 4))


def test_detect_period_with_extra_cyclic_window(monkeypatch: pytest.MonkeyPatch) -> None:
    """Check a window of k + 1 points which is still cyclic is reported."""

    def fake_is_cyclic_polytope(pc: PointConfig, /, *,
                                facets: typing.Optional[typing.Any] = None) -> CyclicityResult:
        size = len(pc)
        first = int(pc.points[0][0]) - 1
        found = size <= 7 or (size == 8 and first == 0)
        return CyclicityResult(found=found, order=tuple(range(size)) if found else None,
                               method=CyclicityMethod.INDEX_ORDER if found else None)

    monkeypatch.setattr("galepoly.realization.is_cyclic_polytope", fake_is_cyclic_polytope)
    with pytest.raises(NotPeriodicallyCyclic) as excinfo:
        detect_period(moment_points(range(1, 11), 4))

    assert excinfo.value.size == 8
    assert excinfo.value.cyclic_windows == (0, )
    assert excinfo.value.acyclic_windows == (1, 2)


def test_bicyclic_gale_divisibility() -> None:
    """Check B(2, 3, n) is Gale in the order of its points exactly when 3 divides n."""
    report = bicyclic_report(2, 3, 12)
    assert report.gale
    assert set(report.facet_size_census) <= {4, 6}
    assert report.rotation_invariant

    report = bicyclic_report(2, 3, 13)
    assert not report.gale
    assert report.period is None
    assert report.period_ratio is None
    assert report.to_dict()["gale"] is False


@pytest.mark.slow
def test_bicyclic_period() -> None:
    """Check B(2, 3, 30) is periodically-cyclic with period 15 and stable at double precision."""
    report = bicyclic_report(2, 3, 30, recheck_precision=True)
    assert report.gale
    assert report.period == 15
    assert report.period_ratio == pytest.approx(0.5)
    assert report.facet_size_census == {4: 135, 6: 10}
    assert report.rotation_invariant
    assert report.to_dict()["period"] == 15


@pytest.mark.slow
@pytest.mark.parametrize(("size", "cyclic"), (
    pytest.param(12, True, id="estimated-period"),
    pytest.param(15, True, id="period"),
    pytest.param(16, False, id="past-period"),
))
def test_bicyclic_windows(size: int, cyclic: bool) -> None:
    """Check which windows of B(2, 3, 30) span the cyclic polytope in the order of their points."""
    pc = sigma_points(2, 3, 30)
    for first in (0, 7):
        spans = hull_facets(pc.window(first, size)).facet_set == cyclic_facets(size, 4).facet_set
        assert spans == cyclic


def test_is_rotation_invariant() -> None:
    """Check rotation invariance of facet lists under the shift i -> i + 1."""
    assert is_rotation_invariant(cyclic_facets(8, 4))
    assert not is_rotation_invariant(cyclic_facets(8, 3))


def test_verify_pc_step_vacuous() -> None:
    """Check a configuration of exactly k points passes without any condition to check."""
    report = verify_pc_step(moment_points(range(1, 9), 6), 8)
    assert report.vacuous
    assert report.passed


def test_verify_pc_step_validation() -> None:
    """Check the period and the number of points are validated."""
    pc = moment_points(range(1, 9), 6)
    with pytest.raises(ValueError, match="k >= d \\+ 1"):
        verify_pc_step(pc, 6)

    with pytest.raises(ValueError, match="at least k=9"):
        verify_pc_step(pc, 9)


def test_verify_pc_step_fails_affine_hull_condition() -> None:
    """Check points on the moment curve leave the affine hull named by the first condition."""
    report = verify_pc_step(moment_points(range(1, 11), 6), 8)
    assert not report.vacuous
    assert not report.pc1
    assert not report.passed
    assert report.to_dict()["pc1"] is False

    pc = moment_points(range(1, 10), 6)
    report = verify_pc_step(pc.with_point(pc.centroid()), 8)
    assert not report.pc1


def test_search_pc_point() -> None:
    """Check the search finds a point extending the moment curve configuration with period 8."""
    pc = moment_points(range(1, 10), 6)
    candidate = search_pc_point(pc, 8, rng=random.Random(0), attempts=200)
    assert candidate is not None

    report = verify_pc_step(pc.with_point(candidate), 8)
    assert not report.vacuous
    assert report.pc1 and report.pc2 and report.pc3
    assert report.passed


def test_search_pc_point_requires_exact_mode() -> None:
    """Check the search refuses floating point configurations."""
    with pytest.raises(ValueError, match="exact"):
        search_pc_point(sigma_points(2, 3, 12), 5, rng=random.Random(0))
