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
"""Combinatorial questions about point configurations answered through their convex hulls.

A window of a configuration is a run x_i, ..., x_(i+size-1) of consecutive points. A Gale polytope
is periodically-cyclic with period k when every window of k points spans a cyclic polytope and no
window of k + 1 points does.
"""

import collections
import dataclasses
import enum
import fractions
import itertools
import random
import typing
import warnings

import networkx

from galepoly.facet_list import FacetList, VertexSet, sort_key
from galepoly.gale import cyclic_facets, is_gale
from galepoly.hull import HullOracle, NonVertexInput, Side, beneath_beyond, hull_facets
from galepoly.hull import stable_hull_facets
from galepoly.lattice import build_lattice, is_isomorphic, is_simplicial, universal_edges
from galepoly.points import DEFAULT_EPS, DEFAULT_PRECISION_BITS, PointConfig, Scalar
from galepoly.points import ScalarMode, sigma_points

EXHAUSTIVE_CYCLIC_SEARCH_LIMIT = 8


class NotGale(ValueError):
    """The hull of a configuration is not Gale with respect to the order of its points."""


class NotPeriodicallyCyclic(ValueError):
    """The windows of a Gale configuration do not exhibit a period."""

    def __init__(
        self, message: str, /, *, size: typing.Optional[int] = None,
        cyclic_windows: typing.Sequence[int] = (), acyclic_windows: typing.Sequence[int] = ()
    ) -> None:
        super().__init__(message)
        self.size = size
        self.cyclic_windows = tuple(cyclic_windows)
        self.acyclic_windows = tuple(acyclic_windows)


class CyclicityMethod(enum.Enum):
    INDEX_ORDER = "index_order"
    UNIVERSAL_EDGE_CYCLE = "universal_edge_cycle"
    EXHAUSTIVE = "exhaustive"
    LATTICE_ISOMORPHISM = "lattice_isomorphism"


@dataclasses.dataclass(frozen=True)
class CyclicityResult:
    """Outcome of a cyclicity test, truthy exactly when the hull is a cyclic polytope.

    The order lists the point indices along a vertex array satisfying Gale's Evenness Condition.
    """

    found: bool
    order: typing.Optional[typing.Tuple[int, ...]] = None
    method: typing.Optional[CyclicityMethod] = None

    def __bool__(self) -> bool:
        return self.found


def _certifies_gale_facets(oracle: HullOracle, facets: FacetList, /) -> bool:
    # The d-subsets satisfying Gale's Evenness Condition form a closed pseudomanifold, so if each
    # one strictly supports the points then they are the entire boundary of the hull.
    return all(oracle.strictly_supports(facet) for facet in facets.facets)


def _cycle_orders(cycle: typing.Sequence[int], /) -> typing.Iterator[typing.Tuple[int, ...]]:
    n = len(cycle)
    for start in range(n):
        forward = tuple(cycle[(start + i) % n] for i in range(n))
        yield forward
        yield tuple(reversed(forward))


def _matching_order(fl: FacetList, target: FacetList, orders: typing.Iterable[typing.Tuple[int,
                                                                                           ...]],
                    /) -> typing.Optional[typing.Tuple[int, ...]]:
    return next((order for order in orders if fl.relabeled(order).facet_set == target.facet_set),
                None)


def is_cyclic_polytope(pc: PointConfig, /, *,
                       facets: typing.Optional[FacetList] = None) -> CyclicityResult:
    """Decide whether the convex hull of the points is a cyclic polytope.

    The index order is tried first, directly against the points; reversing a vertex array
    preserves Gale's Evenness Condition, so this also covers the reversed order. Otherwise the
    hull must be simplicial with every point a vertex; in even dimension the universal edges of a
    cyclic polytope form a Hamiltonian cycle whose linearizations are tried next, and as a last
    resort small polytopes are searched exhaustively and larger ones compared with C(n, d).
    """
    n = len(pc)
    d = pc.dim
    target = cyclic_facets(n, d)
    identity = tuple(range(n))

    with pc.arithmetic():
        oracle = HullOracle(pc)
        if _certifies_gale_facets(oracle, target):
            return CyclicityResult(found=True, order=identity, method=CyclicityMethod.INDEX_ORDER)

    if facets is None:
        try:
            facets = hull_facets(pc)
        except NonVertexInput:
            return CyclicityResult(found=False)

    if not is_simplicial(facets) or len(facets.facets) != len(target.facets):
        return CyclicityResult(found=False)

    lat = build_lattice(facets)
    if d % 2 == 0 and d >= 4:
        graph = networkx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(tuple(sort_key(edge)) for edge in universal_edges(lat))
        if (graph.number_of_edges() == n and networkx.is_connected(graph)
                and all(degree == 2 for (_, degree) in graph.degree())):
            cycle = [u for (u, _) in networkx.find_cycle(graph, source=0)]
            if (order := _matching_order(facets, target, _cycle_orders(cycle))) is not None:
                return CyclicityResult(found=True, order=order,
                                       method=CyclicityMethod.UNIVERSAL_EDGE_CYCLE)

        # A cyclic 2m-polytope with n >= 2m + 3 vertices has exactly n universal edges.
        if n >= d + 3:
            return CyclicityResult(found=False)

    warnings.warn(f"Searching vertex arrays of a {n}-vertex hull past the order of its points")
    if n <= EXHAUSTIVE_CYCLIC_SEARCH_LIMIT:
        orders = (order for order in itertools.permutations(range(n)) if order[0] < order[-1])
        if (order := _matching_order(facets, target, orders)) is not None:
            return CyclicityResult(found=True, order=order, method=CyclicityMethod.EXHAUSTIVE)
        return CyclicityResult(found=False)

    witness = is_isomorphic(build_lattice(target), lat)
    if not witness or witness.vertex_map is None:
        return CyclicityResult(found=False)

    return CyclicityResult(found=True, order=tuple(witness.vertex_map[i] for i in range(n)),
                           method=CyclicityMethod.LATTICE_ISOMORPHISM)


def detect_period(pc: PointConfig, /, *, facets: typing.Optional[FacetList] = None) -> int:
    """Return the period of a configuration whose hull is Gale in the order of its points.

    When every window is cyclic, including the whole configuration, the period is the number of
    points.
    """
    if facets is None:
        facets = hull_facets(pc)

    if not is_gale(facets):
        raise NotGale("The hull is not Gale with respect to the order of the points")

    n = len(pc)
    d = pc.dim
    if n < d + 2:
        raise ValueError(f"A period needs at least d + 2 = {d + 2} points, got {n}")

    period: typing.Optional[int] = None
    first_gap: typing.Optional[typing.Tuple[int, typing.List[int], typing.List[int]]] = None
    for size in range(d + 2, n + 1):
        cyclic = []
        acyclic = []
        for first in range(n - size + 1):
            result = is_cyclic_polytope(pc.window(first, size),
                                        facets=facets if size == n else None)
            (cyclic if result else acyclic).append(first)
            if result and result.method is not CyclicityMethod.INDEX_ORDER:
                warnings.warn(f"Window {first} of size {size} is cyclic only with respect to a"
                              f" vertex array other than the order of its points")

        if not acyclic:
            assert first_gap is None, f"All windows of size {size} are cyclic after a smaller size"
            period = size
        elif first_gap is None:
            first_gap = (size, cyclic, acyclic)

        if not cyclic:
            break

    if period is None:
        raise NotPeriodicallyCyclic(f"Not every window of d + 2 = {d + 2} points is cyclic",
                                    size=d + 2, cyclic_windows=first_gap[1] if first_gap else (),
                                    acyclic_windows=first_gap[2] if first_gap else ())

    if first_gap is not None and first_gap[0] == period + 1 and first_gap[1]:
        raise NotPeriodicallyCyclic(
            f"Every window of {period} points is cyclic but so are the windows {first_gap[1]} of"
            f" {period + 1} points", size=period + 1, cyclic_windows=first_gap[1],
            acyclic_windows=first_gap[2])

    return period


@dataclasses.dataclass(frozen=True)
class BicyclicReport:
    # pylint: disable=missing-function-docstring
    """Properties of the bi-cyclic 4-polytope B(p, q, n) in the order of its points."""

    p: int
    q: int
    n: int
    gale: bool
    period: typing.Optional[int]
    facet_size_census: typing.Mapping[int, int]
    rotation_invariant: bool

    @property
    def period_ratio(self) -> typing.Optional[float]:
        return None if self.period is None else self.period / self.n

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "gale": self.gale,
            "period": self.period,
            "facet_size_census":
            {str(size): count
             for (size, count) in sorted(self.facet_size_census.items())},
            "rotation_invariant": self.rotation_invariant,
            "period_ratio": self.period_ratio,
        }


def is_rotation_invariant(fl: FacetList, /) -> bool:
    """Return True if the index shift i -> i + 1 (mod n) maps every facet to a facet."""
    n = fl.num_vertices
    return {frozenset((v + 1) % n for v in facet) for facet in fl.facets} == fl.facet_set


def bicyclic_report(p: int, q: int, n: int, /, *, bits: int = DEFAULT_PRECISION_BITS,
                    eps: typing.Union[str, Scalar] = DEFAULT_EPS,
                    recheck_precision: bool = False) -> BicyclicReport:
    """Compute the Gale property, period, facet sizes, and rotation symmetry of B(p, q, n).

    With recheck_precision=True the hull is recomputed at twice the precision and
    PrecisionAmbiguous is raised if its facets differ.
    """

    def factory(*, bits: int, eps: Scalar) -> PointConfig:
        return sigma_points(p, q, n, bits=bits, eps=eps)

    pc = factory(bits=bits, eps=eps)
    if recheck_precision:
        facets = stable_hull_facets(factory, bits=bits, eps=eps)
    else:
        facets = hull_facets(pc)

    gale = is_gale(facets)
    period = None
    if gale:
        try:
            period = detect_period(pc, facets=facets)
        except NotPeriodicallyCyclic:
            pass

    census = collections.Counter(len(facet) for facet in facets.facets)
    return BicyclicReport(p=p, q=q, n=n, gale=gale, period=period, facet_size_census=dict(census),
                          rotation_invariant=is_rotation_invariant(facets))


@dataclasses.dataclass(frozen=True)
class PcStepReport:
    # pylint: disable=missing-function-docstring
    """Outcome of checking that the last point x_(m-1) extends a periodically-cyclic sequence
    with period k.

    The affine-hull condition is pc1. Facets of the previous hull that the new point had to see
    but does not are listed in pc2_violations, and facets it had to leave intact but does not are
    listed in pc3_violations.
    """

    k: int
    pc1: bool
    pc2_violations: typing.Tuple[VertexSet, ...] = ()
    pc3_violations: typing.Tuple[VertexSet, ...] = ()
    non_faces: typing.Tuple[VertexSet, ...] = ()
    """Sets named by the case split which are not faces of the previous hull."""
    vacuous: bool = False

    @property
    def pc2(self) -> bool:
        return not self.pc2_violations

    @property
    def pc3(self) -> bool:
        return not self.pc3_violations

    @property
    def passed(self) -> bool:
        return self.pc1 and self.pc2 and self.pc3

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "k": self.k,
            "vacuous": self.vacuous,
            "pc1": self.pc1,
            "pc2": self.pc2,
            "pc3": self.pc3,
            "pc2_violations": [list(sort_key(f)) for f in self.pc2_violations],
            "pc3_violations": [list(sort_key(f)) for f in self.pc3_violations],
            "non_faces": [list(sort_key(f)) for f in self.non_faces],
            "passed": self.passed,
        }


def verify_pc_step(pc: PointConfig, k: int, /, *,
                   previous: typing.Optional[FacetList] = None) -> PcStepReport:
    """Check the conditions under which adding the last point x_(m-1) to the hull of
    x_0, ..., x_(m-2) keeps the sequence periodically-cyclic with period k.

    PC1 asks for x_(m-1) to lie in the affine hull of x_0, x_(m-k), x_(m-k+1), x_(m-2). Then, for
    each facet F of the previous hull, with A = {x_0, x_(m-k), x_(m-2)} and
    B = {x_0, x_(m-k), x_(m-k+1), x_(m-2)}: if F meets A in exactly {x_0, x_(m-2)}, PC2 asks for
    x_(m-1) to lie beyond F; otherwise if F does not contain B, PC3 asks for F to remain a facet,
    that is for x_(m-1) to lie beneath F.
    """
    m = len(pc)
    if k < pc.dim + 1:
        raise ValueError(f"Expected k >= d + 1 = {pc.dim + 1}, got k={k}")

    if m < k:
        raise ValueError(f"Expected at least k={k} points, got {m}")

    if m == k:
        return PcStepReport(k=k, pc1=True, vacuous=True)

    last = m - 1
    span = [0, m - k, m - k + 1, m - 2]
    with pc.arithmetic():
        oracle = HullOracle(pc)
        pc1 = oracle.affine_rank([*span, last]) == oracle.affine_rank(span)

    head = pc.without_last()
    if previous is None:
        previous = hull_facets(head)

    a_set = frozenset((0, m - k, m - 2))
    b_set = frozenset(span)
    ends = frozenset((0, m - 2))
    lat = build_lattice(previous)
    non_faces = tuple(s for s in (a_set, b_set, ends) if not lat.is_face(s))
    for face in non_faces:
        warnings.warn(f"{sort_key(face)} is not a face of the hull of the first {m - 1} points")

    point = pc.points[last]
    pc2_violations = []
    pc3_violations = []
    for facet in previous.facets:
        if facet & a_set == ends:
            if beneath_beyond(point, facet, head, previous) is not Side.BEYOND:
                pc2_violations.append(facet)
        elif not b_set <= facet:
            if beneath_beyond(point, facet, head, previous) is not Side.BENEATH:
                pc3_violations.append(facet)

    return PcStepReport(k=k, pc1=pc1, pc2_violations=tuple(pc2_violations),
                        pc3_violations=tuple(pc3_violations), non_faces=non_faces)


def search_pc_point(pc: PointConfig, k: int, /, *, rng: random.Random,
                    attempts: int = 200) -> typing.Optional[typing.Tuple[Scalar, ...]]:
    """Search randomly for a next point which passes verify_pc_step with period k.

    Candidates are affine combinations of the four points spanning the PC1 subspace, with
    weights drawn from multiples of 1/10 in [-2, 2]. Only exact configurations are supported.
    """
    if pc.mode is not ScalarMode.EXACT:
        raise ValueError("The point search only supports exact configurations")

    m = len(pc) + 1
    if m <= k:
        raise ValueError(f"Expected at least k={k} points before the new one, got {len(pc)}")

    span = [pc.points[i] for i in (0, m - k, m - k + 1, m - 2)]
    previous = hull_facets(pc)
    for _ in range(attempts):
        weights = [fractions.Fraction(rng.randint(-20, 20), 10) for _ in range(3)]
        weights.append(1 - sum(weights))
        candidate = tuple(sum(w * p[j] for (w, p) in zip(weights, span)) for j in range(pc.dim))
        if candidate in pc.points:
            continue

        if verify_pc_step(pc.with_point(candidate), k, previous=previous).passed:
            return candidate

    return None
