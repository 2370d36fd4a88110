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
"""Generators and recognizers for multiplexes, braxtopes, and the polytopes built from them.

Both families are written over a vertex array y_0 < y_1 < ... < y_n and use the convention that
y_j stands for y_0 when j < 0 and for y_n when j > n.
"""

import dataclasses
import enum
import typing

from galepoly.facet_list import FacetList, VertexSet
from galepoly.gale import is_gale
from galepoly.lattice import build_lattice, face_facet_list, simplex


class NotGaleBraxial(ValueError):
    """The polytope is not both Gale and braxial with respect to the index order."""


class EdgePatternViolation(ValueError):
    """The edges at the last vertex do not form a run x_s, ..., x_(n-1) of consecutive vertices."""

    def __init__(self, message: str, /, *, neighbours: typing.Sequence[int]) -> None:
        super().__init__(message)
        self.neighbours = tuple(neighbours)


@dataclasses.dataclass(frozen=True)
class ClampedIndexScheme:
    # pylint: disable=missing-function-docstring
    """Index arithmetic over the vertex array y_0, ..., y_last with out-of-range indices clamped
    to the nearest end.
    """

    last: int

    @property
    def lower_clamp(self) -> int:
        return 0

    @property
    def upper_clamp(self) -> int:
        return self.last

    def clamp(self, j: int, /) -> int:
        return min(max(j, self.lower_clamp), self.upper_clamp)

    def window(self, first: int, last: int, /) -> VertexSet:
        """Return {y_first, ..., y_last} after clamping, with repeated vertices collapsed."""
        return frozenset(self.clamp(j) for j in range(first, last + 1))

    def punctured_window(self, centre: int, radius: int, /) -> VertexSet:
        """Return {y_(centre-radius), ..., y_(centre-1), y_(centre+1), ..., y_(centre+radius)}.

        Only the raw index centre is left out, so y_centre is still present when it is the clamped
        image of an index past either end.
        """
        return frozenset(
            self.clamp(j) for j in range(centre - radius, centre + radius + 1) if j != centre)


def _from_generated(dim: int, num_vertices: int, facets: typing.Iterable[VertexSet],
                    /) -> FacetList:
    return FacetList(dim=dim, num_vertices=num_vertices, facets=tuple(set(facets)))


def multiplex_facets(n: int, d: int, /) -> FacetList:
    """Return the facets F_i = [y_(i-d+1), ..., y_(i-1), y_(i+1), ..., y_(i+d-1)], i = 0, ..., n,
    of the d-multiplex M(n, d) on n + 1 vertices.
    """
    if d < 2:
        raise ValueError(f"A multiplex must have dimension at least 2, got d={d}")

    if n < d:
        raise ValueError(f"M(n, d) needs n >= d, got n={n} and d={d}")

    scheme = ClampedIndexScheme(n)
    return _from_generated(d, n + 1, (scheme.punctured_window(i, d - 1) for i in range(n + 1)))


def ordinary_char_d_facets(n: int, d: int, /) -> FacetList:
    """Return the facets of the ordinary d-polytope with characteristic d on n + 1 vertices.

    This family exists only for odd d >= 5, where its facets are the windows
    [x_(i-d+1), ..., x_(i-1), x_(i+1), ..., x_(i+d-1)] for i = 0, ..., n.
    """
    if d < 5 or d % 2 == 0:
        raise ValueError(f"Ordinary polytopes with characteristic d need an odd d >= 5, got d={d}")

    if n < d:
        raise ValueError(f"Expected n >= d, got n={n} and d={d}")

    scheme = ClampedIndexScheme(n)
    facets = []
    for i in range(n + 1):
        below = scheme.window(i - d + 1, i - 1)
        above = scheme.window(i + 1, i + d - 1)
        facets.append(below | above)

    return _from_generated(d, n + 1, facets)


def braxtope_facets(v: int, e: int, /) -> FacetList:
    """Return the facets of the e-braxtope on the vertices y_0, ..., y_v.

    The facets are the simplices T_i = [y_i, ..., y_(i+e-1)] for i = 0, ..., v - e + 1 and the
    facets E_j = [y_0, y_(j-e+2), ..., y_(j-1), y_(j+1), ..., y_(j+e-2)] for j = 2, ..., v.
    Braxtopes of dimension e <= 2 are simplices.
    """
    if e < 1:
        raise ValueError(f"A braxtope must have dimension at least 1, got e={e}")

    if e <= 2:
        if v != e:
            raise ValueError(f"An {e}-braxtope is an {e}-simplex and needs v = e, got v={v}")
        return simplex(e)

    if v < e:
        raise ValueError(f"A braxtope needs v >= e, got v={v} and e={e}")

    scheme = ClampedIndexScheme(v)
    simplices = (scheme.window(i, i + e - 1) for i in range(v - e + 2))
    through_first = (frozenset({0}) | scheme.punctured_window(j, e - 2) for j in range(2, v + 1))
    return _from_generated(e, v + 1, [*simplices, *through_first])


def _matches_family(fl: FacetList, generate: typing.Callable[[int, int], FacetList], /) -> bool:
    if fl.dim < 2:
        return fl.facet_set == simplex(fl.dim).facet_set

    if fl.num_vertices - 1 < fl.dim:
        return False

    return fl.facet_set == generate(fl.num_vertices - 1, fl.dim).facet_set


def is_multiplex(fl: FacetList, /) -> bool:
    """Return True if the index order is a vertex array making the polytope a multiplex."""
    return _matches_family(fl, multiplex_facets)


def is_braxtope(fl: FacetList, /) -> bool:
    """Return True if the index order is a vertex array making the polytope a braxtope."""
    if fl.dim <= 2:
        return fl.facet_set == simplex(fl.dim).facet_set

    return _matches_family(fl, braxtope_facets)


def _every_face(fl: FacetList, predicate: typing.Callable[[FacetList], bool], /, *,
                strict: bool) -> bool:
    """Return True if every facet, or with strict=True every proper face of dimension at least 1,
    satisfies the predicate under the induced vertex array.
    """
    lat = build_lattice(fl)
    if strict:
        faces = [face for (face, j) in lat.rank.items() if 1 <= j < fl.dim]
    else:
        faces = list(lat.facets)

    return all(predicate(face_facet_list(lat, face)) for face in faces)


def is_multiplicial(fl: FacetList, /, *, strict: bool = False) -> bool:
    """Return True if every proper face is a multiplex via the induced vertex array.

    Faces of a multiplicial polytope are multiplicial, so checking the facets is enough unless
    strict=True asks for every proper face to be checked directly.
    """
    return _every_face(fl, is_multiplex, strict=strict)


def is_braxial(fl: FacetList, /, *, strict: bool = False) -> bool:
    """Return True if every proper face is a braxtope via the induced vertex array."""
    return _every_face(fl, is_braxtope, strict=strict)


def is_ordinary(fl: FacetList, /, *, strict: bool = False) -> bool:
    """Return True if the polytope is Gale and multiplicial with respect to the index order."""
    return is_gale(fl) and is_multiplicial(fl, strict=strict)


class BraxialKind(enum.Enum):
    CYCLIC = "cyclic"
    PERIODICALLY_CYCLIC = "periodically_cyclic"
    BRAXTOPE = "braxtope"


@dataclasses.dataclass(frozen=True)
class BraxialClassification:
    """Where a Gale braxial polytope on x_0, ..., x_n falls, decided by the first vertex x_s of
    the run of neighbours x_s, ..., x_(n-1) of x_n.
    """

    s: int
    kind: BraxialKind
    period: typing.Optional[int] = None
    """The period k = n - s + 2 of a periodically-cyclic polytope."""


def classify_gale_braxial(fl: FacetList, /) -> BraxialClassification:
    """Classify a polytope that is Gale and braxial with respect to the index order.

    With n = num_vertices - 1, s = 1 means the polytope is cyclic, 2 <= s <= n - d means it is
    periodically-cyclic with period n - s + 2, and s = n - d + 1 means it is a braxtope. The
    classification is stated for even d >= 6; other dimensions are classified by the same rule.
    Whether x_0 is adjacent to x_n plays no part.
    """
    if not is_gale(fl):
        raise NotGaleBraxial("The polytope is not Gale with respect to the index order")

    if not is_braxial(fl):
        raise NotGaleBraxial("The polytope is not braxial with respect to the index order")

    lat = build_lattice(fl)
    n = fl.num_vertices - 1
    neighbours = [j for j in range(1, n) if lat.is_face((j, n))]
    if not neighbours or neighbours[-1] != n - 1:
        raise EdgePatternViolation(f"x_{n} is not adjacent to x_{n - 1}", neighbours=neighbours)

    s = n - 1
    while s - 1 in neighbours:
        s -= 1

    if neighbours != list(range(s, n)):
        raise EdgePatternViolation(
            f"The neighbours {neighbours} of x_{n} among x_1, ..., x_{n - 1} are not a single run"
            f" ending at x_{n - 1}", neighbours=neighbours)

    if s == 1:
        return BraxialClassification(s=s, kind=BraxialKind.CYCLIC)

    if s == n - fl.dim + 1:
        return BraxialClassification(s=s, kind=BraxialKind.BRAXTOPE)

    if 2 <= s <= n - fl.dim:
        return BraxialClassification(s=s, kind=BraxialKind.PERIODICALLY_CYCLIC, period=n - s + 2)

    raise EdgePatternViolation(
        f"x_{n} has neighbours x_{s}, ..., x_{n - 1}, fewer than a {fl.dim}-polytope allows",
        neighbours=neighbours)
