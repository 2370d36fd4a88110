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
"""Face lattices built from vertex-facet incidences and the invariants computed from them.

Faces are identified with their vertex sets. The lattice of a FacetList is its closure under
pairwise intersection together with the empty face and the whole polytope, graded by the length
of the longest chain up to the top. This grading works for non-simplicial facets (multiplexes,
antiprisms) where the dimension of a face is not its number of vertices minus one.
"""

import dataclasses
import enum
import functools
import itertools
import typing

import networkx
from networkx.algorithms import isomorphism

from galepoly.facet_list import FacetList, VertexSet, sort_key, sorted_vertex_sets


class NotAPolytopeLattice(ValueError):
    """The intersection closure of a facet list is not the face lattice of any polytope."""


@dataclasses.dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}) of a d-polytope."""

    counts: typing.Tuple[int, ...]

    @property
    def proper(self) -> typing.Tuple[int, ...]:
        """Return (f_0, f_1, ..., f_{d-1}), the form in which f-vectors are usually quoted."""
        return self.counts[1:]

    def __getitem__(self, j: int, /) -> int:
        return self.counts[j + 1]

    def satisfies_euler(self) -> bool:
        """Return True if f_0 - f_1 + f_2 - ... + (-1)^(d-1) f_{d-1} equals 1 - (-1)^d."""
        dim = len(self.proper)
        return sum((-1)**j * f_j for (j, f_j) in enumerate(self.proper)) == 1 - (-1)**dim


@dataclasses.dataclass(frozen=True)
class FlagVector:
    """Chain counts f_S for every subset S of {0, 1, ..., d - 1}."""

    dim: int
    entries: typing.Mapping[typing.FrozenSet[int], int]

    def __getitem__(self, dims: typing.Iterable[int], /) -> int:
        return self.entries[frozenset(dims)]

    def rows(self) -> typing.List[typing.Tuple[typing.Tuple[int, ...], int]]:
        """Return (dimension set, count) pairs ordered by size and then lexicographically."""
        return sorted(((sort_key(dims), count) for (dims, count) in self.entries.items()),
                      key=lambda row: (len(row[0]), row[0]))


@dataclasses.dataclass(frozen=True, eq=False)
class FaceLattice:
    # pylint: disable=missing-function-docstring
    """Every face of a d-polytope, its dimension, and the faces directly above it."""

    dim: int
    num_vertices: int
    rank: typing.Mapping[VertexSet, int]
    covers: typing.Mapping[VertexSet, typing.FrozenSet[VertexSet]]
    """Mapping from each face to the faces covering it in the Hasse diagram."""

    @functools.cached_property
    def faces_by_dim(self) -> typing.Mapping[int, typing.Tuple[VertexSet, ...]]:
        grouped: typing.Dict[int, typing.List[VertexSet]] = {j: [] for j in range(-1, self.dim + 1)}
        for (face, j) in self.rank.items():
            grouped[j].append(face)

        return {j: tuple(sorted_vertex_sets(faces)) for (j, faces) in grouped.items()}

    def faces_of_dim(self, j: int, /) -> typing.Tuple[VertexSet, ...]:
        return self.faces_by_dim.get(j, ())

    @property
    def vertices(self) -> typing.Tuple[VertexSet, ...]:
        return self.faces_of_dim(0)

    @property
    def edges(self) -> typing.Tuple[VertexSet, ...]:
        return self.faces_of_dim(1)

    @property
    def facets(self) -> typing.Tuple[VertexSet, ...]:
        return self.faces_of_dim(self.dim - 1)

    @property
    def cover_relations(self) -> typing.List[typing.Tuple[VertexSet, VertexSet]]:
        """Return the Hasse diagram edges as (lower, upper) pairs in a deterministic order."""
        return sorted(
            ((lower, upper) for (lower, uppers) in self.covers.items() for upper in uppers),
            key=lambda pair: (self.rank[pair[0]], sort_key(pair[0]), sort_key(pair[1])))

    def is_face(self, vertices: typing.Iterable[int], /) -> bool:
        return frozenset(vertices) in self.rank


def build_lattice(fl: FacetList, /) -> FaceLattice:
    """Build the face lattice of a polytope from its facet list.

    Raises NotAPolytopeLattice if the intersection closure is not graded, or if some vertex is
    not itself a face, both of which mean the facet list belongs to no polytope.
    """
    top = fl.vertices
    faces: typing.Set[VertexSet] = set(fl.facets)
    frontier = list(fl.facets)
    while frontier:
        discovered = []
        for face in frontier:
            for facet in fl.facets:
                if (meet := face & facet) not in faces:
                    faces.add(meet)
                    discovered.append(meet)
        frontier = discovered

    faces.update((top, frozenset()))

    incident = {v: fl.facets_containing((v, )) for v in top}

    def closure(vertices: VertexSet) -> VertexSet:
        """Return the smallest face containing the given nonempty vertex set."""
        containing = [facet for facet in incident[min(vertices)] if vertices <= facet]
        return frozenset.intersection(*containing) if containing else top

    covers: typing.Dict[VertexSet, typing.FrozenSet[VertexSet]] = {top: frozenset()}
    for face in faces - {top}:
        candidates = {closure(face | {v}) for v in top - face}
        covers[face] = frozenset(upper for upper in candidates
                                 if not any(other < upper for other in candidates))

    # Every cover of a face is strictly larger than it, so visiting faces by decreasing size
    # always finds the covers' chain lengths already computed.
    chain_length = {top: 0}
    for face in sorted(faces - {top}, key=len, reverse=True):
        chain_length[face] = 1 + max(chain_length[upper] for upper in covers[face])

    rank = {face: fl.dim - length for (face, length) in chain_length.items()}

    if rank[frozenset()] != -1:
        raise NotAPolytopeLattice(
            f"The empty face has dimension {rank[frozenset()]} instead of -1 in a"
            f" {fl.dim}-polytope")

    if (bad := [v for v in top if rank.get(frozenset((v, ))) != 0]):
        raise NotAPolytopeLattice(f"Vertices {bad} are not 0-dimensional faces")

    for (lower, uppers) in covers.items():
        for upper in uppers:
            if rank[upper] != rank[lower] + 1:
                raise NotAPolytopeLattice(
                    f"The closure is not graded: {sort_key(lower)} has dimension {rank[lower]}"
                    f" but is covered by {sort_key(upper)} of dimension {rank[upper]}")

    return FaceLattice(dim=fl.dim, num_vertices=fl.num_vertices, rank=rank, covers=covers)


def f_vector(lat: FaceLattice, /) -> FVector:
    """Return the f-vector (f_-1, f_0, ..., f_d)."""
    return FVector(tuple(len(lat.faces_of_dim(j)) for j in range(-1, lat.dim)))


def flag_vector(lat: FaceLattice, /) -> FlagVector:
    """Count the chains of proper faces by their set of dimensions.

    The count for a dimension set S is accumulated one dimension at a time: the number of chains
    with dimensions S ending in a face G is the sum over the faces H < G of the number of chains
    with dimensions S - {max S} ending in H.
    """
    entries: typing.Dict[typing.FrozenSet[int], int] = {frozenset(): 1}
    ending: typing.Dict[typing.Tuple[int, ...], typing.Dict[VertexSet, int]] = {}

    for size in range(1, lat.dim + 1):
        for dims in itertools.combinations(range(lat.dim), size):
            if size == 1:
                ending[dims] = {face: 1 for face in lat.faces_of_dim(dims[0])}
            else:
                shorter = ending[dims[:-1]]
                ending[dims] = {
                    face: sum(count for (lower, count) in shorter.items() if lower < face)
                    for face in lat.faces_of_dim(dims[-1])
                }

            entries[frozenset(dims)] = sum(ending[dims].values())

    return FlagVector(dim=lat.dim, entries=entries)


def simplex(d: int, /) -> FacetList:
    """Return the d-simplex on the vertices 0, 1, ..., d."""
    if d < 1:
        raise ValueError(f"A simplex must have dimension at least 1, got {d}")

    return FacetList.from_facets(d, itertools.combinations(range(d + 1), d), num_vertices=d + 1)


def polygon(g: int, /) -> FacetList:
    """Return the g-gon whose edges join consecutive indices modulo g."""
    if g < 3:
        raise ValueError(f"A polygon needs at least 3 vertices, got {g}")

    return FacetList.from_facets(2, ((i, (i + 1) % g) for i in range(g)), num_vertices=g)


def pyramid(fl: FacetList, /) -> FacetList:
    """Return the pyramid over the given polytope with the new apex as the last vertex."""
    apex = fl.num_vertices
    facets = [fl.vertices] + [facet | {apex} for facet in fl.facets]
    return FacetList(dim=fl.dim + 1, num_vertices=fl.num_vertices + 1, facets=tuple(facets))


def dual_lattice(lat: FaceLattice, /) -> FaceLattice:
    """Return the order-reversed lattice.

    The vertices of the dual are the facets of the original, numbered in lexicographic order, and
    each face G becomes the set of facets containing G.
    """
    facets = lat.facets

    def dualize(face: VertexSet) -> VertexSet:
        return frozenset(i for (i, facet) in enumerate(facets) if face <= facet)

    dual_of = {face: dualize(face) for face in lat.rank}
    rank = {dual_of[face]: lat.dim - 1 - j for (face, j) in lat.rank.items()}

    covered_by: typing.Dict[VertexSet, typing.Set[VertexSet]] = {face: set() for face in rank}
    for (lower, uppers) in lat.covers.items():
        for upper in uppers:
            covered_by[dual_of[upper]].add(dual_of[lower])

    return FaceLattice(dim=lat.dim, num_vertices=len(facets), rank=rank,
                       covers={face: frozenset(uppers)
                               for (face, uppers) in covered_by.items()})


@dataclasses.dataclass(frozen=True)
class LatticeIsomorphism:
    """Outcome of an isomorphism search, truthy exactly when an isomorphism was found."""

    found: bool
    vertex_map: typing.Optional[typing.Mapping[int, int]] = None
    """Witness bijection from the vertices of the first lattice to those of the second."""

    def __bool__(self) -> bool:
        return self.found


def _incidence_graph(lat: FaceLattice, /) -> networkx.Graph:
    """Return the vertex-facet incidence graph with a pruning signature on every node.

    A face lattice of a polytope is atomic and coatomic, so two lattices are isomorphic exactly
    when their incidence graphs are isomorphic by a map sending vertices to vertices.
    """
    facets = lat.facets
    degree = {v: sum(1 for facet in facets if v in facet) for (v, ) in lat.vertices}

    graph = networkx.Graph()
    for (v, ) in lat.vertices:
        sizes = tuple(sorted(len(facet) for facet in facets if v in facet))
        graph.add_node(("vertex", v), signature=("vertex", degree[v], sizes))

    for (i, facet) in enumerate(facets):
        degrees = tuple(sorted(degree[v] for v in facet))
        graph.add_node(("facet", i), signature=("facet", len(facet), degrees))
        graph.add_edges_from((("vertex", v), ("facet", i)) for v in facet)

    return graph


def is_isomorphic(a: FaceLattice, b: FaceLattice, /) -> LatticeIsomorphism:
    """Search for a graded lattice isomorphism from a to b, returning a vertex witness."""
    if a.dim != b.dim or f_vector(a) != f_vector(b):
        return LatticeIsomorphism(found=False)

    matcher = isomorphism.GraphMatcher(
        _incidence_graph(a), _incidence_graph(b),
        node_match=lambda first, second: first["signature"] == second["signature"])

    if not matcher.is_isomorphic():
        return LatticeIsomorphism(found=False)

    vertex_map = {
        source[1]: target[1]
        for (source, target) in matcher.mapping.items() if source[0] == "vertex"
    }
    return LatticeIsomorphism(found=True, vertex_map=vertex_map)


def is_self_dual(lat: FaceLattice, /) -> LatticeIsomorphism:
    """Search for an isomorphism from the lattice to its dual."""
    return is_isomorphic(lat, dual_lattice(lat))


def face_facet_list(lat: FaceLattice, face: VertexSet, /) -> FacetList:
    """Return a face of dimension at least 1 as a polytope in its own right.

    The vertices of the face are renumbered 0, 1, ... in the order induced by the vertex array.
    """
    if (j := lat.rank.get(face, -1)) < 1:
        raise ValueError(f"{sort_key(face)} is not a face of dimension at least 1")

    order = sort_key(face)
    new_index = {old: new for (new, old) in enumerate(order)}
    ridges = [ridge for ridge in lat.faces_of_dim(j - 1) if ridge <= face]
    return FacetList(dim=j, num_vertices=len(order),
                     facets=tuple(frozenset(new_index[v] for v in ridge) for ridge in ridges))


def vertex_figure(fl: FacetList, v: int, /) -> FacetList:
    """Return the vertex figure at v with the vertex array induced on the neighbours of v."""
    if not 0 <= v < fl.num_vertices:
        raise ValueError(f"Vertex {v} is out of range for a polytope with {fl.num_vertices}"
                         " vertices")

    lat = build_lattice(fl)
    neighbours = sorted(w for edge in lat.edges if v in edge for w in edge if w != v)
    new_index = {old: new for (new, old) in enumerate(neighbours)}
    links = [facet & frozenset(neighbours) for facet in fl.facets_containing((v, ))]
    return FacetList(dim=fl.dim - 1, num_vertices=len(neighbours),
                     facets=tuple(frozenset(new_index[w] for w in link) for link in links))


def universal_edges(lat: FaceLattice, /) -> typing.List[VertexSet]:
    """Return the edges E such that E together with any single vertex is the vertex set of a
    face.
    """
    return [
        edge for edge in lat.edges if all(lat.is_face(edge | vertex) for vertex in lat.vertices)
    ]


def is_neighbourly(lat: FaceLattice, /) -> bool:
    """Return True if every floor(d/2) vertices form the vertex set of a face."""
    return all(
        lat.is_face(subset)
        for subset in itertools.combinations(range(lat.num_vertices), lat.dim // 2))


def is_simplicial(fl: FacetList, /) -> bool:
    """Return whether every facet has exactly dim vertices."""
    return all(len(facet) == fl.dim for facet in fl.facets)


class UniversalEdgeClass(enum.Enum):
    """Classification of a neighbourly 2m-polytope by its number u of universal edges."""

    CYCLIC = "cyclic"
    ALMOST_CYCLIC = "almost_cyclic"
    OTHER = "other"
    NOT_APPLICABLE = "not_applicable"


def classify_by_universal_edges(lat: FaceLattice, /) -> UniversalEdgeClass:
    """Classify a neighbourly 2m-polytope with n >= 2m + 3 vertices.

    Such a polytope has u <= n universal edges with u = n exactly when it is cyclic, and u is
    never n - 1; the polytopes with u = n - 2 are called almost-cyclic.
    """
    n = lat.num_vertices
    if lat.dim % 2 or n < lat.dim + 3 or not is_neighbourly(lat):
        return UniversalEdgeClass.NOT_APPLICABLE

    u = len(universal_edges(lat))
    if u == n:
        return UniversalEdgeClass.CYCLIC

    if u == n - 2:
        return UniversalEdgeClass.ALMOST_CYCLIC

    return UniversalEdgeClass.OTHER
