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
"""Reproducible checks of the known properties of cyclic polytopes, multiplexes, braxtopes, and
bi-cyclic polytopes, run together as an acceptance suite.
"""

import functools
import typing

from galepoly.families import BraxialKind, braxtope_facets, classify_gale_braxial, is_braxial
from galepoly.families import is_multiplex, is_ordinary, multiplex_facets
from galepoly.facet_list import FacetList
from galepoly.gale import characteristic, cyclic_facets, is_gale, is_reversal_closed
from galepoly.hull import hull_facets, stable_hull_facets
from galepoly.lattice import build_lattice, dual_lattice, f_vector, flag_vector, is_isomorphic
from galepoly.lattice import is_self_dual, polygon, pyramid, universal_edges, vertex_figure
from galepoly.lattice import face_facet_list
from galepoly.points import moment_points, sigma_points, trig_moment4_points
from galepoly.realization import bicyclic_report

ORACLE_GRID = ((6, 3), (7, 3), (7, 4), (8, 4), (9, 4), (8, 5), (9, 6), (10, 6))
MULTIPLEX_GRID = tuple((n, d) for d in (3, 4, 5, 6) for n in range(d + 1, d + 6))
BRAXTOPE_GRID = tuple((v, e) for e in (3, 4, 5) for v in range(e + 1, e + 5))

# The hull oracle finds every window of 15 points of B(2,3,30) cyclic and none of 16, against the
# k = [t_23 n] = 12 obtained from the estimate t_23 ~ 0.419569.
BICYCLIC_PERIOD = 15
BICYCLIC_ESTIMATED_PERIOD = 12


class Criterion(typing.NamedTuple):
    name: str
    claim: str
    check: typing.Callable[[], typing.List[str]]
    """Return the list of failures, empty when the claim holds."""
    slow: bool = False
    anchor: str = ""
    """The known result the claim restates."""


class CriterionResult(typing.NamedTuple):
    name: str
    claim: str
    failures: typing.List[str]
    anchor: str = ""

    @property
    def passed(self) -> bool:
        """Return whether the claim held."""
        return not self.failures


def _iterated_pyramid(fl: FacetList, times: int, /) -> FacetList:
    for _ in range(times):
        fl = pyramid(fl)
    return fl


def _check_oracle_equivalence() -> typing.List[str]:
    return [
        f"hull of the moment curve points 1..{n} in R^{d} differs from C({n}, {d})"
        for (n, d) in ORACLE_GRID
        if hull_facets(moment_points(range(1, n + 1), d)).facet_set != cyclic_facets(n, d).facet_set
    ]


def _check_bicyclic_period() -> typing.List[str]:
    report = bicyclic_report(2, 3, 30, recheck_precision=True)
    failures = []
    if not report.gale:
        failures.append("B(2,3,30) is not Gale")
    if report.period != BICYCLIC_PERIOD:
        failures.append(f"B(2,3,30) has period {report.period}, expected {BICYCLIC_PERIOD}")
    if not set(report.facet_size_census) <= {4, 6}:
        failures.append(f"B(2,3,30) has facet sizes {sorted(report.facet_size_census)}")
    if not report.rotation_invariant:
        failures.append("B(2,3,30) is not invariant under the index shift")

    pc = sigma_points(2, 3, 30)
    for (size, cyclic) in ((BICYCLIC_ESTIMATED_PERIOD, True), (BICYCLIC_PERIOD, True),
                           (BICYCLIC_PERIOD + 1, False)):
        spans = hull_facets(pc.window(0, size)).facet_set == cyclic_facets(size, 4).facet_set
        if spans != cyclic:
            verb = "span" if spans else "do not span"
            failures.append(f"The first {size} points of B(2,3,30) {verb} C({size}, 4)")
    return failures


def _check_gale_divisibility() -> typing.List[str]:
    failures = []
    if not bicyclic_report(2, 3, 12).gale:
        failures.append("B(2,3,12) is not Gale although 3 divides 12")
    if bicyclic_report(2, 3, 13).gale:
        failures.append("B(2,3,13) is Gale although 3 does not divide 13")
    return failures


def _check_multiplexes() -> typing.List[str]:
    failures = []
    for (n, d) in MULTIPLEX_GRID:
        fl = multiplex_facets(n, d)
        lat = build_lattice(fl)
        label = f"M({n},{d})"
        if len(fl.facets) != n + 1:
            failures.append(f"{label} has {len(fl.facets)} facets")
        if not all(is_multiplex(face_facet_list(lat, facet)) for facet in lat.facets):
            failures.append(f"{label} has a facet which is not a multiplex")
        if not all(is_multiplex(vertex_figure(fl, v)) for v in range(fl.num_vertices)):
            failures.append(f"{label} has a vertex figure which is not a multiplex")
        if not is_self_dual(lat):
            failures.append(f"{label} is not self-dual")
        if d == 5 and not (is_ordinary(fl) and characteristic(fl) == 5):
            failures.append(f"{label} is not ordinary with characteristic 5")
    return failures


def _check_multiplex_flag_vectors() -> typing.List[str]:
    return [
        f"M({n},{d}) and the {d - 2}-fold pyramid over the {n - d + 3}-gon have different flag"
        " vectors" for (n, d) in MULTIPLEX_GRID
        if flag_vector(build_lattice(multiplex_facets(n, d))) != flag_vector(
            build_lattice(_iterated_pyramid(polygon(n - d + 3), d - 2)))
    ]


def _check_braxtopes() -> typing.List[str]:
    failures = []
    for (v, e) in BRAXTOPE_GRID:
        fl = braxtope_facets(v, e)
        label = f"braxtope({v},{e})"
        if not is_braxial(fl):
            failures.append(f"{label} is not braxial")
        figure = vertex_figure(fl, 0)
        if figure.dim != e - 1 or not is_multiplex(figure):
            failures.append(f"The vertex figure of {label} at 0 is not an {e - 1}-multiplex")
        if not f_vector(build_lattice(fl)).satisfies_euler():
            failures.append(f"{label} violates the Euler relation")
        if is_gale(fl):
            classification = classify_gale_braxial(fl)
            if (classification.kind is not BraxialKind.BRAXTOPE or classification.s != v - e + 1):
                failures.append(f"{label} is classified as {classification}")
    return failures


def _check_cyclic_polytopes() -> typing.List[str]:
    failures = []
    for (n, d) in ((7, 4), (8, 4), (9, 4), (10, 4), (9, 6), (10, 6)):
        fl = cyclic_facets(n, d)
        lat = build_lattice(fl)
        label = f"C({n},{d})"
        if not is_ordinary(fl):
            failures.append(f"{label} is not ordinary")
        if characteristic(fl) != n - 1:
            failures.append(f"{label} has characteristic {characteristic(fl)}")
        if not (is_reversal_closed(fl) and is_isomorphic(lat, build_lattice(fl.reversed()))):
            failures.append(f"{label} is not symmetric under reversing the vertex array")
        if d == 4 and len(universal_edges(lat)) != n:
            failures.append(f"{label} has {len(universal_edges(lat))} universal edges")
    return failures


def _check_trig_moment_curve() -> typing.List[str]:
    return [
        f"The trigonometric moment curve hull on {n} points is not C({n}, 4)" for n in range(6, 11)
        if stable_hull_facets(functools.partial(trig_moment4_points, n)).facet_set != cyclic_facets(
            n, 4).facet_set
    ]


def _check_lattice_properties() -> typing.List[str]:
    families = [
        *(cyclic_facets(n, d) for (n, d) in ORACLE_GRID),
        *(multiplex_facets(n, d) for (n, d) in MULTIPLEX_GRID),
        *(braxtope_facets(v, e) for (v, e) in BRAXTOPE_GRID),
    ]
    failures = []
    for fl in families:
        lat = build_lattice(fl)
        if not f_vector(lat).satisfies_euler():
            failures.append(f"{fl.to_json()} violates the Euler relation")
        if not is_isomorphic(dual_lattice(dual_lattice(lat)), lat):
            failures.append(f"The dual of the dual of {fl.to_json()} is not the original lattice")
    return failures


CRITERIA = (
    Criterion("oracle", "Moment curve hulls are the cyclic polytopes of Gale's Evenness Condition",
              _check_oracle_equivalence,
              anchor="X is a facet of C(n, d) iff the vertices outside X are evenly separated"),
    Criterion(
        "bicyclic", f"B(2,3,30) is Gale, periodically-cyclic with period {BICYCLIC_PERIOD},"
        " with facets of 4 or 6 vertices, and invariant under the index shift",
        _check_bicyclic_period, slow=True,
        anchor=f"k = [t_23 n] with t_23 ~ 0.419569 estimates {BICYCLIC_ESTIMATED_PERIOD}"),
    Criterion("divisibility", "B(2,3,n) is Gale in the order of its points iff 3 divides n",
              _check_gale_divisibility, anchor="B(p, q, n) with n > pq is Gale iff q divides n"),
    Criterion(
        "multiplex", "Multiplex facets and vertex figures are multiplexes, multiplexes are"
        " self-dual, and odd ones are ordinary", _check_multiplexes,
        anchor="M(n, d) with d odd is ordinary with characteristic d"),
    Criterion("flag-vector", "M(n,d) has the flag vector of the (d-2)-fold pyramid over the"
              " (n-d+3)-gon", _check_multiplex_flag_vectors,
              anchor="flag(M(n, d)) = flag(pyr^(d-2) P_(n-d+3))"),
    Criterion("braxtope", "Braxtopes are braxial with multiplex vertex figures at y_0",
              _check_braxtopes, anchor="a Gale braxtope on y_0, ..., y_v has s = v - e + 1"),
    Criterion("cyclic", "Cyclic polytopes are ordinary, symmetric, and have n universal edges",
              _check_cyclic_polytopes,
              anchor="a neighbourly 2m-polytope with n vertices is cyclic iff u = n"),
    Criterion("trig-moment", "Hulls of the trigonometric moment curve are cyclic 4-polytopes",
              _check_trig_moment_curve,
              anchor="points on (cos 2pi t, sin 2pi t, cos 4pi t, sin 4pi t) span C(n, 4)"),
    Criterion("lattice", "Every generated lattice satisfies the Euler relation and is its own"
              " double dual", _check_lattice_properties,
              anchor="f_0 - f_1 + ... + (-1)^(d-1) f_(d-1) = 1 - (-1)^d"),
)


def run_all(*, include_slow: bool = True) -> typing.List[CriterionResult]:
    """Run every criterion, recording exceptions as failures."""
    results = []
    for criterion in CRITERIA:
        if criterion.slow and not include_slow:
            continue

        try:
            failures = criterion.check()
        # pylint: disable-next=broad-except
        except Exception as err:
            failures = [f"{type(err).__name__}: {err}"]

        results.append(
            CriterionResult(criterion.name, criterion.claim, failures, anchor=criterion.anchor))

    return results


def format_table(results: typing.Iterable[CriterionResult], /) -> str:
    """Return one PASS or FAIL row per result, each followed by its failures."""
    lines = []
    for result in results:
        row = f"{'PASS' if result.passed else 'FAIL':4}  {result.name:12}  {result.claim}"
        lines.append(f"{row} [{result.anchor}]" if result.anchor else row)
        lines.extend(f"      - {failure}" for failure in result.failures)
    return "\n".join(lines)
