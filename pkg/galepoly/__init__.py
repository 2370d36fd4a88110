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
"""Combinatorics of cyclic, ordinary, and periodically-cyclic polytopes.

The package builds face lattices from facet lists, recognizes the polytope families defined by
Gale's Evenness Condition relative to a vertex array, and checks the same properties geometrically
on point configurations through an exact or high-precision convex hull oracle.
"""

import typing

from galepoly.facet_list import FacetList
from galepoly.lattice import FaceLattice, build_lattice
from galepoly.points import PointConfig

__version__: typing.Optional[str]

try:
    from galepoly._version import version as __version__
except ImportError:
    # The package is not installed so we don't bother giving it a version number.
    __version__ = None

__all__ = ["FaceLattice", "FacetList", "PointConfig", "__version__", "build_lattice"]
