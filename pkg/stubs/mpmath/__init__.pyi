import typing

_Real = typing.Union["mpf", int, float, str]


class mpf:

    def __init__(self, value: _Real = ...) -> None:
        ...

    def __add__(self, other: _Real) -> mpf:
        ...

    def __radd__(self, other: _Real) -> mpf:
        ...

    def __sub__(self, other: _Real) -> mpf:
        ...

    def __rsub__(self, other: _Real) -> mpf:
        ...

    def __mul__(self, other: _Real) -> mpf:
        ...

    def __rmul__(self, other: _Real) -> mpf:
        ...

    def __truediv__(self, other: _Real) -> mpf:
        ...

    def __rtruediv__(self, other: _Real) -> mpf:
        ...

    def __pow__(self, other: _Real) -> mpf:
        ...

    def __neg__(self) -> mpf:
        ...

    def __abs__(self) -> mpf:
        ...

    def __lt__(self, other: _Real) -> bool:
        ...

    def __le__(self, other: _Real) -> bool:
        ...

    def __gt__(self, other: _Real) -> bool:
        ...

    def __ge__(self, other: _Real) -> bool:
        ...

    def __hash__(self) -> int:
        ...


pi: mpf


def workprec(n: int) -> typing.ContextManager[None]:
    ...


def cos(x: _Real) -> mpf:
    ...


def sin(x: _Real) -> mpf:
    ...


def cospi(x: _Real) -> mpf:
    ...


def sinpi(x: _Real) -> mpf:
    ...


def sqrt(x: _Real) -> mpf:
    ...


def nstr(x: _Real, n: int = ...) -> str:
    ...
