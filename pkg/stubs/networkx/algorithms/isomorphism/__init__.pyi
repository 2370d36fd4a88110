import typing

from networkx import Graph

_Attributes = typing.Dict[str, typing.Any]


class GraphMatcher:
    mapping: typing.Dict[typing.Any, typing.Any]

    def __init__(
        self, G1: Graph, G2: Graph,
        node_match: typing.Optional[typing.Callable[[_Attributes, _Attributes],
                                                    bool]] = ...) -> None:
        ...

    def is_isomorphic(self) -> bool:
        ...
