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
"""The FacetList interchange type: a polytope given combinatorially by the vertex sets of its
facets.

Vertices are the integers 0, 1, ..., n - 1 and their natural order is the vertex array. Every
property in the galepoly package is stated relative to that order; reordering a polytope always
goes through FacetList.relabeled() so permutations stay explicit data.

.. code-block:: json

    {"dim": 3, "facets": [[0, 1, 2], [0, 1, 3, 4], [0, 2, 3], [1, 2, 4], [2, 3, 4]],
     "num_vertices": 5}
"""

import collections
import dataclasses
import itertools
import json
import typing

VertexSet = typing.FrozenSet[int]


def sort_key(vertices: VertexSet, /) -> typing.Tuple[int, ...]:
    """Return the ascending tuple of indices used to order vertex sets lexicographically."""
    return tuple(sorted(vertices))


def sorted_vertex_sets(vertex_sets: typing.Iterable[VertexSet], /) -> typing.List[VertexSet]:
    """Return the vertex sets in lexicographic order of their ascending index tuples."""
    return sorted(vertex_sets, key=sort_key)


@dataclasses.dataclass(frozen=True)
class FacetList:
    """A d-polytope described by its number of vertices and the vertex set of every facet."""

    dim: int
    num_vertices: int
    facets: typing.Tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        facets = tuple(sorted_vertex_sets(frozenset(facet) for facet in self.facets))
        # The dataclass is frozen so the canonical ordering has to be installed through
        # object.__setattr__().
        object.__setattr__(self, "facets", facets)
        self._validate()

    def _validate(self) -> None:
        if self.dim < 1:
            raise ValueError(f"A polytope must have dimension at least 1, got {self.dim}")

        if len(set(self.facets)) != len(self.facets):
            raise ValueError("Facets must be pairwise distinct")

        universe = range(self.num_vertices)
        incidences: typing.Counter[int] = collections.Counter()
        for facet in self.facets:
            if len(facet) < self.dim:
                raise ValueError(f"Facet {sort_key(facet)} has fewer than d={self.dim} vertices")

            if not all(index in universe for index in facet):
                raise ValueError(
                    f"Facet {sort_key(facet)} has indices outside [0, {self.num_vertices - 1}]")

            incidences.update(facet)

        for (first, second) in itertools.combinations(self.facets, 2):
            if first <= second or second <= first:
                raise ValueError(
                    f"Facets {sort_key(first)} and {sort_key(second)} are comparable under"
                    " inclusion")

        if (lonely := [v for v in universe if incidences[v] < self.dim]):
            raise ValueError(f"Vertices {lonely} lie in fewer than d={self.dim} facets")

    @classmethod
    def from_facets(cls, dim: int, facets: typing.Iterable[typing.Iterable[int]], /, *,
                    num_vertices: typing.Optional[int] = None) -> "FacetList":
        """Build a FacetList, inferring the vertex count from the largest index when omitted."""
        vertex_sets = tuple(frozenset(facet) for facet in facets)
        if num_vertices is None:
            num_vertices = 1 + max(max(facet) for facet in vertex_sets)

        return cls(dim=dim, num_vertices=num_vertices, facets=vertex_sets)

    @property
    def facet_set(self) -> typing.FrozenSet[VertexSet]:
        """Return the facets as an unordered set for comparisons between families."""
        return frozenset(self.facets)

    @property
    def vertices(self) -> VertexSet:
        """Return the vertex indices 0, ..., num_vertices - 1."""
        return frozenset(range(self.num_vertices))

    def facets_containing(self, vertices: typing.Iterable[int], /) -> typing.List[VertexSet]:
        """Return the facets which contain every one of the given vertices."""
        wanted = frozenset(vertices)
        return [facet for facet in self.facets if wanted <= facet]

    def relabeled(self, order: typing.Sequence[int], /) -> "FacetList":
        """Return the same polytope with vertex order[i] renamed to i.

        The order is the new vertex array written in terms of the old indices.
        """
        if sorted(order) != list(range(self.num_vertices)):
            raise ValueError(f"{list(order)} is not a permutation of the vertex indices")

        new_index = {old: new for (new, old) in enumerate(order)}
        return FacetList(
            dim=self.dim, num_vertices=self.num_vertices,
            facets=tuple(frozenset(new_index[v] for v in facet) for facet in self.facets))

    def reversed(self) -> "FacetList":
        """Return the same polytope with the vertex array x_{n-1} < ... < x_1 < x_0."""
        return self.relabeled(range(self.num_vertices - 1, -1, -1))

    def to_json(self) -> str:
        """Serialize to canonical JSON with sorted keys and lexicographically sorted facets."""
        return json.dumps(
            {
                "dim": self.dim,
                "num_vertices": self.num_vertices,
                "facets": [list(sort_key(facet)) for facet in self.facets],
            }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str, /) -> "FacetList":
        """Parse the JSON produced by FacetList.to_json()."""
        raw = json.loads(text)
        try:
            return cls.from_facets(int(raw["dim"]), raw["facets"],
                                   num_vertices=int(raw["num_vertices"]))
        except KeyError as err:
            raise ValueError(f"FacetList JSON is missing the {err.args[0]!r} key") from err
