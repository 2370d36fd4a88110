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
"""Gale's Evenness Condition and the properties of a polytope relative to its vertex array.

A d-subset X of the vertices 0 < 1 < ... < n - 1 is a facet of the cyclic polytope C(n, d) if,
and only if, every two vertices outside X are separated by an even number of elements of X. A
polytope is Gale with respect to its vertex array when every facet satisfies that necessary half
of the condition; this is checked here for facets of any size.
"""

import dataclasses
import itertools
import typing
import warnings

from galepoly.facet_list import FacetList, VertexSet, sort_key
from galepoly.lattice import build_lattice, is_simplicial

DEFAULT_MAX_GALE_SEARCH = 10


class TooLarge(ValueError):
    """A permutation search was requested over more vertices than the configured cap."""


class PatternViolation(ValueError):
    """The edges at the ends of the vertex array do not form the initial segments that an
    ordinary polytope has.
    """


def separation_count(i: int, k: int, vertices: typing.Iterable[int], /) -> int:
    """Return the number of the given vertices strictly between i and k."""
    if i >= k:
        raise ValueError(f"Expected i < k, got i={i} and k={k}")

    return sum(1 for x in vertices if i < x < k)


def _evenly_separated(facet: VertexSet, num_vertices: int, /) -> bool:
    """Return True if every two vertices outside the facet are separated by an even number of
    its elements.

    Separation counts add up along the vertex array, so only consecutive outside vertices need to
    be compared.
    """
    outside = [v for v in range(num_vertices) if v not in facet]
    return all(separation_count(i, k, facet) % 2 == 0 for (i, k) in zip(outside, outside[1:]))


@dataclasses.dataclass(frozen=True)
class GecQuery:
    """A candidate d-subset of the vertex array 0 < 1 < ... < n - 1."""

    n: int
    d: int
    candidate: VertexSet

    def __post_init__(self) -> None:
        if len(self.candidate) != self.d:
            raise ValueError(f"Candidate {sort_key(self.candidate)} does not have d={self.d}"
                             " elements")

        if not all(0 <= v < self.n for v in self.candidate):
            raise ValueError(
                f"Candidate {sort_key(self.candidate)} is not a subset of [0, {self.n - 1}]")


def gec_is_facet(query: GecQuery, /) -> bool:
    """Return whether the queried d-subset satisfies Gale's Evenness Condition."""
    return _evenly_separated(query.candidate, query.n)


def cyclic_facets(n: int, d: int, /) -> FacetList:
    """Return the facets of the cyclic polytope C(n, d) enumerated by Gale's Evenness Condition."""
    if d < 2:
        raise ValueError(f"Cyclic polytopes need dimension at least 2, got {d}")

    if n <= d:
        raise ValueError(f"C(n, d) needs n > d, got n={n} and d={d}")

    facets = (frozenset(subset) for subset in itertools.combinations(range(n), d))
    return FacetList(dim=d, num_vertices=n,
                     facets=tuple(facet for facet in facets if gec_is_facet(GecQuery(n, d, facet))))


def is_gale(fl: FacetList, /) -> bool:
    """Return True if every facet satisfies the necessary part of Gale's Evenness Condition with
    respect to the index order.
    """
    return all(_evenly_separated(facet, fl.num_vertices) for facet in fl.facets)


def is_gale_simplicial(fl: FacetList, /) -> bool:
    """Return True if the polytope is Gale and simplicial, which in even dimension characterizes
    the cyclic polytopes with the index order as their vertex array.
    """
    return is_gale(fl) and is_simplicial(fl)


def is_reversal_closed(fl: FacetList, /) -> bool:
    """Return True if mapping x_j to x_{n-1-j} sends every facet to a facet."""
    return fl.reversed().facet_set == fl.facet_set


def find_gale_order(
        fl: FacetList, /, *,
        max_n: int = DEFAULT_MAX_GALE_SEARCH) -> typing.Optional[typing.Tuple[int, ...]]:
    """Search for a vertex array with respect to which the polytope is Gale.

    The returned order lists the old vertex indices in their new positions, so that
    is_gale(fl.relabeled(order)) holds. None is returned if no vertex array works. Orders are
    built one vertex at a time and abandoned as soon as two placed vertices outside some facet
    are separated by an odd number of its elements. Reversing a vertex array preserves the Gale
    property, so only orders whose first vertex is smaller than their last vertex are accepted.
    """
    n = fl.num_vertices
    if n > max_n:
        raise TooLarge(f"Refusing to search the vertex arrays of {n} vertices; the cap is"
                       f" max_n={max_n}")

    if n > 8:
        warnings.warn(f"Searching up to {n}!/2 vertex arrays; this may take a while")

    facets = fl.facets

    def extend(order: typing.Tuple[int, ...], runs: typing.Tuple[typing.Optional[int], ...],
               /) -> typing.Optional[typing.Tuple[int, ...]]:
        # runs[f] counts the elements of facet f placed since the last placed vertex outside it,
        # or is None when no vertex outside the facet has been placed yet.
        if len(order) == n:
            return order if order[0] < order[-1] else None

        for w in range(n):
            if w in order:
                continue

            next_runs: typing.List[typing.Optional[int]] = []
            for (facet, run) in zip(facets, runs):
                if w in facet:
                    next_runs.append(None if run is None else run + 1)
                elif run is not None and run % 2:
                    break
                else:
                    next_runs.append(0)
            else:
                if (found := extend(order + (w, ), tuple(next_runs))) is not None:
                    return found

        return None

    return extend((), (None, ) * len(facets))


def characteristic(fl: FacetList, /) -> int:
    """Return the characteristic k of an ordinary polytope with the index order as its vertex
    array.

    With x_0 < x_1 < ... < x_n, the edges at x_0 must be exactly [x_0, x_i] for i = 1, ..., k and
    the edges at x_n exactly [x_{n-i}, x_n] for the same i, with d <= k <= n. The caller is
    responsible for checking the polytope is Gale in the given order.
    """
    lat = build_lattice(fl)
    last = fl.num_vertices - 1

    at_first = [i for i in range(1, last + 1) if lat.is_face((0, i))]
    k = len(at_first)
    if at_first != list(range(1, k + 1)):
        raise PatternViolation(f"The neighbours {at_first} of x_0 are not x_1, ..., x_k")

    at_last = [i for i in range(1, last + 1) if lat.is_face((last - i, last))]
    if at_last != at_first:
        raise PatternViolation(
            f"x_0 is adjacent to x_i for i in {at_first} but x_n is adjacent to x_(n-i) for i in"
            f" {at_last}")

    if not fl.dim <= k <= last:
        raise PatternViolation(f"The characteristic {k} is outside [d, n] = [{fl.dim}, {last}]")

    return k
