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
"""Brute-force convex hull facet enumeration over exact or high-precision scalars.

Every affinely independent d-subset of the points spans a hyperplane. The hyperplane supports the
hull when no two points lie strictly on opposite sides of it, and the facet it cuts out is every
point lying on it, so non-simplicial facets are recovered whole.
"""

import dataclasses
import enum
import itertools
import typing

import mpmath

from galepoly.facet_list import FacetList, VertexSet, sort_key
from galepoly.points import DEFAULT_EPS, DEFAULT_PRECISION_BITS, Point, PointConfig, Scalar
from galepoly.points import ScalarMode


class DegenerateInput(ValueError):
    """The points do not affinely span R^d."""


class NonVertexInput(ValueError):
    """Some of the points are not vertices of their convex hull."""

    def __init__(self, message: str, /, *, indices: typing.Sequence[int]) -> None:
        super().__init__(message)
        self.indices = tuple(indices)


class PrecisionAmbiguous(ValueError):
    """A side classification depends on the tolerance, so the working precision is too low."""

    def __init__(self, message: str, /, *, indices: typing.Sequence[int]) -> None:
        super().__init__(message)
        self.indices = tuple(indices)


class Side(enum.Enum):
    BENEATH = "beneath"
    BEYOND = "beyond"
    ON = "on"


@dataclasses.dataclass(frozen=True)
class Hyperplane:
    # pylint: disable=missing-function-docstring
    """The hyperplane {x : normal . x = offset}."""

    normal: Point
    offset: Scalar

    def evaluate(self, x: typing.Sequence[Scalar], /) -> Scalar:
        return sum(a * v for (a, v) in zip(self.normal, x)) - self.offset

    def flipped(self) -> "Hyperplane":
        return Hyperplane(normal=tuple(-a for a in self.normal), offset=-self.offset)


def row_reduce(rows: typing.Sequence[typing.Sequence[Scalar]], tolerance: Scalar,
               /) -> typing.Tuple[typing.List[typing.List[Scalar]], typing.List[int]]:
    """Return the reduced row echelon form of a matrix and its pivot columns.

    Entries no larger than the tolerance in absolute value are never used as pivots.
    """
    matrix = [list(row) for row in rows]
    pivots: typing.List[int] = []
    num_cols = len(matrix[0]) if matrix else 0
    for col in range(num_cols):
        if (r := len(pivots)) == len(matrix):
            break

        best = max(range(r, len(matrix)), key=lambda i: abs(matrix[i][col]))
        if abs(matrix[best][col]) <= tolerance:
            continue

        (matrix[r], matrix[best]) = (matrix[best], matrix[r])
        pivot = matrix[r][col]
        matrix[r] = [x / pivot for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and (factor := matrix[i][col]) != 0:
                matrix[i] = [x - factor * y for (x, y) in zip(matrix[i], matrix[r])]

        pivots.append(col)

    return (matrix, pivots)


# pylint: disable-next=too-few-public-methods
class ConfigFactory(typing.Protocol):
    """Callable producing the same configuration at a requested precision."""

    def __call__(self, *, bits: int, eps: Scalar) -> PointConfig:
        ...


class HullOracle:
    # pylint: disable=missing-function-docstring
    """Hyperplane computations over one configuration, scaled to unit size in float mode.

    Callers must hold the configuration's arithmetic() context while using the oracle.
    """

    def __init__(self, pc: PointConfig, /) -> None:
        self.pc = pc
        self.tolerance = pc.tolerance
        self.strong_tolerance = 10 * self.tolerance
        self.scale = 1
        if pc.mode is ScalarMode.FLOAT:
            self.scale = max(abs(x) for p in pc.points for x in p)

        self.points = [self.scaled(p) for p in pc.points]
        self._hyperplanes: typing.Dict[VertexSet, typing.Optional[Hyperplane]] = {}

    def scaled(self, x: typing.Sequence[Scalar], /) -> Point:
        return tuple(v / self.scale for v in x) if self.scale != 1 else tuple(x)

    def affine_rank(self, indices: typing.Sequence[int], /) -> int:
        if not indices:
            return -1

        origin = self.points[indices[0]]
        rows = [[x - o for (x, o) in zip(self.points[i], origin)] for i in indices[1:]]
        return len(row_reduce(rows, self.tolerance)[1]) if rows else 0

    def hyperplane(self, indices: typing.Iterable[int], /) -> typing.Optional[Hyperplane]:
        """Return the hyperplane spanned by d points, or None if they are affinely dependent."""
        key = frozenset(indices)
        if key not in self._hyperplanes:
            self._hyperplanes[key] = self._span(sorted(key))
        return self._hyperplanes[key]

    def _span(self, indices: typing.Sequence[int], /) -> typing.Optional[Hyperplane]:
        d = self.pc.dim
        (matrix, pivots) = row_reduce([[*self.points[i], 1] for i in indices], self.tolerance)
        if len(pivots) < d:
            return None

        free = next(col for col in range(d + 1) if col not in pivots)
        kernel = [0] * (d + 1)
        kernel[free] = 1
        for (row, col) in enumerate(pivots):
            kernel[col] = -matrix[row][free]

        normal = kernel[:d]
        if all(a == 0 for a in normal):
            return None

        if self.pc.mode is ScalarMode.FLOAT:
            norm = mpmath.sqrt(sum(a * a for a in normal))
        else:
            norm = abs(next(a for a in normal if a != 0))

        return Hyperplane(normal=tuple(a / norm for a in normal), offset=-kernel[d] / norm)

    def side(self, value: Scalar, /) -> Side:
        if abs(value) <= self.tolerance:
            return Side.ON
        return Side.BEYOND if value > 0 else Side.BENEATH

    def supported_face(self, plane: Hyperplane, /) -> typing.Optional[VertexSet]:
        """Return the points on the hyperplane if it supports the hull, or None if points lie
        strictly on both sides of it.
        """
        (positive, negative) = (False, False)
        on = []
        ambiguous = []
        for (i, x) in enumerate(self.points):
            value = plane.evaluate(x)
            if (magnitude := abs(value)) <= self.tolerance:
                on.append(i)
            elif magnitude <= self.strong_tolerance:
                ambiguous.append(i)
            elif value > 0:
                positive = True
            else:
                negative = True

            if positive and negative:
                return None

        if ambiguous:
            raise PrecisionAmbiguous(
                f"Points {ambiguous} lie within 10*eps of a candidate supporting hyperplane",
                indices=ambiguous)

        return frozenset(on)

    def strictly_supports(self, indices: typing.Iterable[int], /) -> bool:
        """Return True if the given points span a hyperplane with every other point strictly on
        one side of it.
        """
        key = frozenset(indices)
        if (plane := self.hyperplane(key)) is None:
            return False

        face = self.supported_face(plane)
        return face is not None and face == key

    def oriented_hyperplane(self, facet: VertexSet, /) -> Hyperplane:
        """Return the hyperplane of a facet with the hull on its non-positive side."""
        for subset in itertools.combinations(sort_key(facet), self.pc.dim):
            if (plane := self.hyperplane(subset)) is not None:
                break
        else:
            raise ValueError(f"{sort_key(facet)} does not span a hyperplane")

        for (i, x) in enumerate(self.points):
            if i not in facet and (side := self.side(plane.evaluate(x))) is not Side.ON:
                return plane.flipped() if side is Side.BEYOND else plane

        raise ValueError(f"{sort_key(facet)} spans a hyperplane containing every point")


def hull_facets(pc: PointConfig, /) -> FacetList:
    """Return the facets of the convex hull of the points, indexed by their position."""
    d = pc.dim
    n = len(pc)
    with pc.arithmetic():
        oracle = HullOracle(pc)
        if oracle.affine_rank(range(n)) < d:
            raise DegenerateInput(f"The {n} points do not affinely span R^{d}")

        found: typing.List[VertexSet] = []
        for subset in itertools.combinations(range(n), d):
            if any(set(subset) <= facet for facet in found):
                continue

            if (plane := oracle.hyperplane(subset)) is None:
                continue

            if (face := oracle.supported_face(plane)) is not None:
                found.append(face)

    if non_vertices := [v for v in range(n) if sum(1 for facet in found if v in facet) < d]:
        raise NonVertexInput(f"Points {non_vertices} are not vertices of the convex hull",
                             indices=non_vertices)

    return FacetList(dim=d, num_vertices=n, facets=tuple(found))


def supporting_hyperplane(pc: PointConfig, facet: VertexSet, /) -> Hyperplane:
    """Return the hyperplane of a facet in the unit-scaled coordinates of the configuration,
    oriented with the hull on its non-positive side.
    """
    with pc.arithmetic():
        return HullOracle(pc).oriented_hyperplane(facet)


def beneath_beyond(x: typing.Sequence[Scalar], facet: VertexSet, pc: PointConfig, fl: FacetList,
                   /) -> Side:
    """Classify a point against the affine hull of a facet of the convex hull of pc.

    The point is beneath the facet if it lies strictly on the same side as the hull, beyond it if
    strictly on the other side, and on it otherwise.
    """
    if facet not in fl.facet_set:
        raise ValueError(f"{sort_key(facet)} is not a facet of the given facet list")

    with pc.arithmetic():
        oracle = HullOracle(pc)
        plane = oracle.oriented_hyperplane(facet)
        return oracle.side(plane.evaluate(oracle.scaled(x)))


def stable_hull_facets(factory: ConfigFactory, /, *, bits: int = DEFAULT_PRECISION_BITS,
                       eps: typing.Union[str, Scalar] = DEFAULT_EPS) -> FacetList:
    """Return the hull facets of a configuration after checking they do not change when the
    precision is doubled and the tolerance squared.
    """
    with mpmath.workprec(bits):
        coarse_eps = mpmath.mpf(eps)
    coarse = hull_facets(factory(bits=bits, eps=coarse_eps))

    with mpmath.workprec(2 * bits):
        fine_eps = mpmath.mpf(eps)**2
    fine = hull_facets(factory(bits=2 * bits, eps=fine_eps))

    if coarse.facet_set != fine.facet_set:
        changed = sorted({v for facet in coarse.facet_set ^ fine.facet_set for v in facet})
        raise PrecisionAmbiguous(
            f"The hull facets change at {2 * bits} bits; points {changed} are affected",
            indices=changed)

    return coarse
