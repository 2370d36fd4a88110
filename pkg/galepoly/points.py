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
"""Point configurations on the moment curve and its trigonometric relatives.

A configuration is ordered, and its order is the vertex array. Coordinates are either exact
rationals (fractions.Fraction) or mpmath floats at a fixed number of mantissa bits, never a mix of
the two.
"""

import contextlib
import dataclasses
import enum
import fractions
import json
import math
import typing

import mpmath

DEFAULT_PRECISION_BITS = 256
DEFAULT_EPS = "1e-30"

Scalar = typing.Any
"""A fractions.Fraction in exact mode and an mpmath.mpf in float mode."""

Point = typing.Tuple[Scalar, ...]


class ScalarMode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def _decimal_digits(bits: int, /) -> int:
    return math.ceil(bits * math.log10(2)) + 1


@dataclasses.dataclass(frozen=True)
class PointConfig:
    # pylint: disable=missing-function-docstring
    """An ordered set of at least d + 1 distinct points in R^d."""

    dim: int
    points: typing.Tuple[Point, ...]
    mode: ScalarMode = ScalarMode.EXACT
    precision_bits: int = DEFAULT_PRECISION_BITS
    eps: typing.Optional[Scalar] = None
    """Absolute tolerance of float mode; unused in exact mode."""

    def __post_init__(self) -> None:
        if len(self.points) < self.dim + 1:
            raise ValueError(f"A configuration in R^{self.dim} needs at least {self.dim + 1}"
                             f" points, got {len(self.points)}")

        if (bad := next((p for p in self.points if len(p) != self.dim), None)) is not None:
            raise ValueError(f"Point {bad} does not have {self.dim} coordinates")

        if len(set(self.points)) != len(self.points):
            raise ValueError("The points of a configuration must be distinct")

        if self.mode is ScalarMode.FLOAT and (self.eps is None or not self.eps > 0):
            raise ValueError(f"Float mode needs a positive eps, got {self.eps}")

        if self.mode is ScalarMode.EXACT and not all(
                isinstance(x, fractions.Fraction) for p in self.points for x in p):
            raise ValueError("Exact mode needs fractions.Fraction coordinates")

    def __len__(self) -> int:
        return len(self.points)

    def arithmetic(self) -> typing.ContextManager[typing.Any]:
        """Return a context in which mpmath computes at this configuration's precision."""
        if self.mode is ScalarMode.FLOAT:
            return mpmath.workprec(self.precision_bits)
        return contextlib.nullcontext()

    @property
    def tolerance(self) -> Scalar:
        return self.eps if self.mode is ScalarMode.FLOAT else fractions.Fraction(0)

    def subconfig(self, indices: typing.Iterable[int], /) -> "PointConfig":
        return dataclasses.replace(self, points=tuple(self.points[i] for i in indices))

    def window(self, first: int, size: int, /) -> "PointConfig":
        """Return the points x_first, ..., x_(first+size-1) in their original order."""
        if first < 0 or first + size > len(self.points):
            raise ValueError(f"Window [{first}, {first + size}) is out of range for"
                             f" {len(self.points)} points")

        return self.subconfig(range(first, first + size))

    def with_point(self, point: typing.Sequence[Scalar], /) -> "PointConfig":
        return dataclasses.replace(self, points=self.points + (tuple(point), ))

    def without_last(self) -> "PointConfig":
        return self.subconfig(range(len(self.points) - 1))

    def centroid(self) -> Point:
        with self.arithmetic():
            count = len(self.points)
            return tuple(sum(p[j] for p in self.points) / count for j in range(self.dim))

    def to_json(self) -> str:
        if self.mode is ScalarMode.EXACT:
            points = [[str(x) for x in p] for p in self.points]
            eps = None
        else:
            digits = _decimal_digits(self.precision_bits)
            points = [[mpmath.nstr(x, digits) for x in p] for p in self.points]
            eps = mpmath.nstr(self.eps, 15)

        return json.dumps(
            {
                "dim": self.dim,
                "mode": self.mode.value,
                "precision_bits": self.precision_bits,
                "eps": eps,
                "points": points,
            }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str, /) -> "PointConfig":
        data = json.loads(text)
        try:
            mode = ScalarMode(data["mode"])
            bits = int(data.get("precision_bits", DEFAULT_PRECISION_BITS))
            if mode is ScalarMode.EXACT:
                return cls(
                    dim=data["dim"], mode=mode, precision_bits=bits,
                    points=tuple(tuple(fractions.Fraction(x) for x in p) for p in data["points"]))

            with mpmath.workprec(bits):
                return cls(dim=data["dim"], mode=mode, precision_bits=bits,
                           eps=mpmath.mpf(data["eps"] or DEFAULT_EPS),
                           points=tuple(tuple(mpmath.mpf(x) for x in p) for p in data["points"]))
        except KeyError as err:
            raise ValueError(
                f"Point configuration JSON is missing the {err.args[0]!r} key") from err


def _to_mpf(t: typing.Union[int, str, fractions.Fraction, Scalar], /) -> Scalar:
    if isinstance(t, fractions.Fraction):
        return mpmath.mpf(t.numerator) / t.denominator
    return mpmath.mpf(t)


def _float_config(dim: int, points: typing.Iterable[Point], /, *, bits: int,
                  eps: typing.Union[str, Scalar]) -> PointConfig:
    return PointConfig(dim=dim, points=tuple(points), mode=ScalarMode.FLOAT, precision_bits=bits,
                       eps=mpmath.mpf(eps))


def moment_points(ts: typing.Sequence[typing.Union[int, str, fractions.Fraction]], d: int,
                  /) -> PointConfig:
    """Return the exact points (t, t^2, ..., t^d) on the moment curve for the given t."""
    if d < 2:
        raise ValueError(f"The moment curve needs d >= 2, got d={d}")

    params = [fractions.Fraction(t) for t in ts]
    if any(s >= t for (s, t) in zip(params, params[1:])):
        raise ValueError(f"Expected strictly increasing parameters, got {[str(t) for t in params]}")

    return PointConfig(dim=d, points=tuple(tuple(t**j for j in range(1, d + 1)) for t in params))


def interior_angles(n: int, /, *, bits: int = DEFAULT_PRECISION_BITS) -> typing.List[Scalar]:
    """Return the n equally spaced angles pi*i/(n+1), i = 1, ..., n, inside (0, pi)."""
    if n < 1:
        raise ValueError(f"Expected at least one angle, got n={n}")

    with mpmath.workprec(bits):
        return [mpmath.pi * i / (n + 1) for i in range(1, n + 1)]


def psi_points(m: int, ts: typing.Sequence[typing.Union[int, str, fractions.Fraction, Scalar]], /,
               *, bits: int = DEFAULT_PRECISION_BITS,
               eps: typing.Union[str, Scalar] = DEFAULT_EPS) -> PointConfig:
    """Return the points (cos(mt) sin(t), sin(mt) sin(t), cos(t)) on the unit sphere."""
    if m < 1:
        raise ValueError(f"Expected m >= 1, got m={m}")

    with mpmath.workprec(bits):
        params = [_to_mpf(t) for t in ts]
        if (bad := next((t for t in params if not 0 < t < mpmath.pi), None)) is not None:
            raise ValueError(f"Parameter {mpmath.nstr(bad, 15)} is outside (0, pi)")

        if any(s >= t for (s, t) in zip(params, params[1:])):
            raise ValueError("Expected strictly increasing parameters")

        points = ((mpmath.cos(m * t) * mpmath.sin(t), mpmath.sin(m * t) * mpmath.sin(t),
                   mpmath.cos(t)) for t in params)
        return _float_config(3, points, bits=bits, eps=eps)


def trig_moment4_points(n: int, /, *, bits: int = DEFAULT_PRECISION_BITS,
                        eps: typing.Union[str, Scalar] = DEFAULT_EPS) -> PointConfig:
    """Return (cos 2πt, sin 2πt, cos 4πt, sin 4πt) at t = i/n for i = 0, ..., n - 1."""
    if n < 5:
        raise ValueError(f"Expected n >= 5, got n={n}")

    return sigma_points(1, 2, n, bits=bits, eps=eps, check_range=False)


def sigma_points(p: int, q: int, n: int, /, *, bits: int = DEFAULT_PRECISION_BITS,
                 eps: typing.Union[str,
                                   Scalar] = DEFAULT_EPS, check_range: bool = True) -> PointConfig:
    """Return b_i = (cos 2πpt, sin 2πpt, cos 2πqt, sin 2πqt) at t = i/n for i = 0, ..., n - 1.

    Their convex hull is the bi-cyclic 4-polytope B(p, q, n), defined for coprime 1 < p < q and
    n >= pq.
    """
    if math.gcd(p, q) != 1:
        raise ValueError(f"Expected coprime p and q, got p={p} and q={q}")

    if check_range:
        if not 1 < p < q:
            raise ValueError(f"Expected 1 < p < q, got p={p} and q={q}")

        if n < p * q:
            raise ValueError(f"Expected n >= pq = {p * q}, got n={n}")

    with mpmath.workprec(bits):
        points = []
        for i in range(n):
            t = mpmath.mpf(2 * i) / n
            points.append((mpmath.cospi(p * t), mpmath.sinpi(p * t), mpmath.cospi(q * t),
                           mpmath.sinpi(q * t)))

        return _float_config(4, points, bits=bits, eps=eps)
