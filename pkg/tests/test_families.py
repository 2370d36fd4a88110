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
"""Test file for the families.py module."""

import typing

import pytest
from hypothesis import given, settings, strategies as st

from galepoly.families import BraxialKind, ClampedIndexScheme, NotGaleBraxial, braxtope_facets
from galepoly.families import classify_gale_braxial, is_braxial, is_braxtope, is_multiplex
from galepoly.families import is_multiplicial, is_ordinary, multiplex_facets
from galepoly.families import ordinary_char_d_facets
from galepoly.facet_list import FacetList
from galepoly.gale import characteristic, cyclic_facets, is_gale
from galepoly.lattice import build_lattice, f_vector, face_facet_list, flag_vector, is_self_dual
from galepoly.lattice import polygon, pyramid, simplex, vertex_figure


def cube() -> FacetList:
    """Return the 3-cube with vertex v at the point given by the binary digits of v."""
    return FacetList.from_facets(3, [[v for v in range(8) if (v >> axis) & 1 == side]
                                     for axis in range(3) for side in range(2)])


def octahedron() -> FacetList:
    """Return the octahedron with the antipodal pairs (0, 1), (2, 3), and (4, 5)."""
    return FacetList.from_facets(3, [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)])


def test_clamped_index_scheme() -> None:
    """Check indices past either end of the vertex array are clamped."""
    scheme = ClampedIndexScheme(4)
    assert (scheme.lower_clamp, scheme.upper_clamp) == (0, 4)
    assert [scheme.clamp(j) for j in (-2, 0, 3, 7)] == [0, 0, 3, 4]
    assert scheme.window(3, 6) == {3, 4}
    assert scheme.punctured_window(0, 2) == {0, 1, 2}
    assert scheme.punctured_window(4, 1) == {3, 4}


def test_multiplex_facets() -> None:
    """Check the facets of M(4, 3), which is a square pyramid with apex 2."""
    assert multiplex_facets(4, 3).facet_set == {
        frozenset({0, 1, 2}),
        frozenset({0, 2, 3}),
        frozenset({0, 1, 3, 4}),
        frozenset({1, 2, 4}),
        frozenset({2, 3, 4}),
    }


def test_multiplex_small_cases() -> None:
    """Check M(d, d) is a simplex and 2-multiplexes are zigzag polygons."""
    for d in range(2, 7):
        assert multiplex_facets(d, d).facet_set == simplex(d).facet_set

    assert multiplex_facets(3, 2).facet_set == {
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({1, 3}),
        frozenset({2, 3})
    }
    assert f_vector(build_lattice(multiplex_facets(5, 3))).proper == (6, 10, 6)


def test_multiplex_validation() -> None:
    """Check the dimension and number of vertices of a multiplex are validated."""
    with pytest.raises(ValueError, match="d=1"):
        multiplex_facets(4, 1)

    with pytest.raises(ValueError, match="n >= d"):
        multiplex_facets(3, 4)


@pytest.mark.parametrize(("fl", "expected"), (
    pytest.param(multiplex_facets(6, 4), True, id="multiplex"),
    pytest.param(cyclic_facets(7, 4), False, id="cyclic"),
    pytest.param(simplex(4), True, id="simplex"),
    pytest.param(cube(), False, id="cube"),
    pytest.param(polygon(4), False, id="square-in-cyclic-order"),
))
def test_is_multiplex(fl: FacetList, expected: bool) -> None:
    """Check multiplexes are recognized in the index order."""
    assert is_multiplex(fl) == expected


@pytest.mark.parametrize(("fl", "expected"), (
    pytest.param(cyclic_facets(7, 4), True, id="simplicial"),
    pytest.param(multiplex_facets(6, 5), True, id="multiplex"),
    pytest.param(pyramid(cube()), False, id="cube-facet"),
))
def test_is_multiplicial(fl: FacetList, expected: bool) -> None:
    """Check every facet is a multiplex in its induced vertex array."""
    assert is_multiplicial(fl) == expected
    assert is_multiplicial(fl, strict=True) == expected


@pytest.mark.parametrize(("fl", "expected"), (
    pytest.param(cyclic_facets(7, 4), True, id="cyclic-even"),
    pytest.param(cyclic_facets(8, 5), True, id="cyclic-odd"),
    pytest.param(multiplex_facets(7, 5), True, id="multiplex-odd"),
    pytest.param(octahedron(), False, id="octahedron"),
))
def test_is_ordinary(fl: FacetList, expected: bool) -> None:
    """Check ordinary polytopes are the Gale multiplicial ones."""
    assert is_ordinary(fl) == expected


def test_multiplex_properties() -> None:
    """Check facets and vertex figures of multiplexes are multiplexes and multiplexes are
    self-dual.
    """
    for (n, d) in ((5, 3), (6, 3), (6, 4), (8, 4), (7, 5)):
        fl = multiplex_facets(n, d)
        lat = build_lattice(fl)
        assert all(is_multiplex(face_facet_list(lat, facet)) for facet in lat.facets)
        assert all(is_multiplex(vertex_figure(fl, v)) for v in range(n + 1))
        assert is_self_dual(lat)


@pytest.mark.parametrize(("n", "d"), [(n, d) for d in (3, 4, 5) for n in range(d + 1, d + 4)])
def test_multiplex_flag_vector(n: int, d: int) -> None:
    """Check M(n, d) has the flag vector of the (d-2)-fold pyramid over the (n-d+3)-gon."""
    fl = polygon(n - d + 3)
    for _ in range(d - 2):
        fl = pyramid(fl)

    assert flag_vector(build_lattice(multiplex_facets(n, d))) == flag_vector(build_lattice(fl))


def test_ordinary_char_d_facets() -> None:
    """Check the ordinary polytopes of characteristic d are the odd multiplexes."""
    for n in range(5, 10):
        assert ordinary_char_d_facets(n, 5).facet_set == multiplex_facets(n, 5).facet_set

    assert ordinary_char_d_facets(8, 7).facet_set == multiplex_facets(8, 7).facet_set
    assert characteristic(ordinary_char_d_facets(8, 5)) == 5
    assert characteristic(multiplex_facets(6, 5)) == 5

    for d in (3, 4, 6):
        with pytest.raises(ValueError, match="odd d >= 5"):
            ordinary_char_d_facets(8, d)


def test_braxtope_facets() -> None:
    """Check the facets of the 3-braxtope on five vertices."""
    fl = braxtope_facets(4, 3)
    assert fl.facet_set == {
        frozenset({0, 1, 2}),
        frozenset({1, 2, 3}),
        frozenset({2, 3, 4}),
        frozenset({0, 1, 3}),
        frozenset({0, 2, 4}),
        frozenset({0, 3, 4}),
    }
    assert f_vector(build_lattice(fl)).proper == (5, 9, 6)


@pytest.mark.parametrize(
    ("v", "e"),
    [pytest.param(v, e, id=f"braxtope-{v}-{e}") for e in (4, 6) for v in range(e + 1, 11)])
def test_even_braxtopes_classify_as_braxtopes(v: int, e: int) -> None:
    """Check even-dimensional braxtopes are Gale and braxial with s = v - e + 1."""
    fl = braxtope_facets(v, e)
    assert all(isinstance(facet, frozenset) for facet in fl.facets)
    assert is_braxtope(fl)
    assert is_gale(fl)

    classification = classify_gale_braxial(fl)
    assert classification.kind is BraxialKind.BRAXTOPE
    assert classification.s == v - e + 1
    assert classification.period is None


def test_braxtope_small_cases() -> None:
    """Check braxtopes with v = e and braxtopes of dimension at most 2 are simplices."""
    for e in range(1, 7):
        assert braxtope_facets(e, e).facet_set == simplex(e).facet_set

    with pytest.raises(ValueError, match="v = e"):
        braxtope_facets(3, 2)

    with pytest.raises(ValueError, match="v >= e"):
        braxtope_facets(3, 4)

    with pytest.raises(ValueError, match="at least 1"):
        braxtope_facets(0, 0)


@pytest.mark.parametrize(("fl", "expected"), (
    pytest.param(braxtope_facets(7, 4), True, id="braxtope"),
    pytest.param(multiplex_facets(5, 4), False, id="multiplex"),
    pytest.param(simplex(4), True, id="simplex"),
))
def test_is_braxtope(fl: FacetList, expected: bool) -> None:
    """Check braxtopes are recognized in the index order."""
    assert is_braxtope(fl) == expected


@pytest.mark.parametrize(("fl", "expected"), (
    pytest.param(braxtope_facets(6, 4), True, id="braxtope"),
    pytest.param(cyclic_facets(8, 4), True, id="simplicial"),
    pytest.param(pyramid(cube()), False, id="cube-facet"),
))
def test_is_braxial(fl: FacetList, expected: bool) -> None:
    """Check every facet is a braxtope in its induced vertex array."""
    assert is_braxial(fl) == expected


def test_braxtope_vertex_figure() -> None:
    """Check the vertex figure of a braxtope at y_0 is a multiplex."""
    for (v, e) in ((5, 3), (6, 4), (7, 4), (7, 5)):
        figure = vertex_figure(braxtope_facets(v, e), 0)
        assert figure.dim == e - 1
        assert is_multiplex(figure)


@pytest.mark.parametrize(("fl", "s", "kind", "period"), (
    pytest.param(braxtope_facets(8, 6), 3, BraxialKind.BRAXTOPE, None, id="braxtope-8-6"),
    pytest.param(braxtope_facets(6, 4), 3, BraxialKind.BRAXTOPE, None, id="braxtope-6-4"),
    pytest.param(cyclic_facets(10, 6), 1, BraxialKind.CYCLIC, None, id="cyclic-10-6"),
    pytest.param(cyclic_facets(8, 4), 1, BraxialKind.CYCLIC, None, id="cyclic-8-4"),
))
def test_classify_gale_braxial(fl: FacetList, s: int, kind: BraxialKind,
                               period: typing.Optional[int]) -> None:
    """Check Gale braxial polytopes are classified by the neighbours of their last vertex."""
    assert is_gale(fl)
    classification = classify_gale_braxial(fl)
    assert classification.s == s
    assert classification.kind is kind
    assert classification.period == period


def test_classify_gale_braxial_preconditions() -> None:
    """Check polytopes which are not Gale and braxial are rejected."""
    with pytest.raises(NotGaleBraxial, match="not Gale"):
        classify_gale_braxial(braxtope_facets(4, 3))

    with pytest.raises(NotGaleBraxial, match="not Gale"):
        classify_gale_braxial(octahedron())


@st.composite
def multiplex_parameters(
        draw: typing.Callable[[st.SearchStrategy[int]], int]) -> typing.Tuple[int, int]:
    """Draw (n, d) with n >= d for a multiplex."""
    d = draw(st.integers(min_value=2, max_value=6))
    n = draw(st.integers(min_value=d + 1, max_value=d + 6))
    return (n, d)


@given(multiplex_parameters())
@settings(max_examples=30, deadline=None)
def test_multiplex_facet_count(parameters: typing.Tuple[int, int]) -> None:
    """Check M(n, d) has n + 1 facets and a face lattice satisfying the Euler relation."""
    (n, d) = parameters
    fl = multiplex_facets(n, d)
    assert len(fl.facets) == n + 1
    assert f_vector(build_lattice(fl)).satisfies_euler()


@given(st.sampled_from((3, 5)), st.integers(min_value=0, max_value=4))
@settings(max_examples=20, deadline=None)
def test_odd_gale_braxtopes_are_cyclic(e: int, extra: int) -> None:
    """Check an odd-dimensional braxtope which is Gale has the facets of a cyclic polytope."""
    fl = braxtope_facets(e + extra, e)
    assert f_vector(build_lattice(fl)).satisfies_euler()
    assert is_braxial(fl)
    if is_gale(fl):
        assert fl.facet_set == cyclic_facets(e + extra + 1, e).facet_set
