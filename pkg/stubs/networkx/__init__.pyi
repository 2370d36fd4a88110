import typing

_Node = typing.Hashable
_Edge = typing.Tuple[typing.Any, ...]


class Graph:

    def __init__(self) -> None:
        ...

    def add_node(self, node: _Node, **attr: typing.Any) -> None:
        ...

    def add_nodes_from(self, nodes: typing.Iterable[_Node]) -> None:
        ...

    def add_edge(self, u: _Node, v: _Node) -> None:
        ...

    def add_edges_from(self, edges: typing.Iterable[typing.Tuple[_Node, ...]]) -> None:
        ...

    def number_of_nodes(self) -> int:
        ...

    def number_of_edges(self) -> int:
        ...

    def degree(self) -> typing.Iterable[typing.Tuple[typing.Any, int]]:
        ...


def is_connected(graph: Graph) -> bool:
    ...


def find_cycle(graph: Graph, source: typing.Optional[_Node] = ...) -> typing.List[_Edge]:
    ...
