# /project/cubing/hyperplanes.py
"""
Hyperplanes (walls) of a finite cube complex: the classes of edges under the
parallelism generated by opposite edges of squares. Each wall of a cubing
splits the vertices into exactly two halfspaces.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx
from networkx.utils import UnionFind

from cubing.automorphism import Automorphism
from cubing.complex import CubeComplex, Edge
from cubing.errors import AmbiguousDualEdge, InvalidStep, SeparationFailure, UnknownVertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Wall:
    id: int
    edges: FrozenSet[Edge]

    def sorted_edges(self) -> List[Tuple[str, str]]:
        return sorted(tuple(sorted(edge)) for edge in self.edges)

    def __str__(self):
        return f"wall {self.id}: " + " ".join(f"{u}-{v}" for u, v in self.sorted_edges())


@dataclass(frozen=True)
class HalfspacePair:
    wall: Wall
    side0: FrozenSet[str]
    side1: FrozenSet[str]

    def side_of(self, vertex: str) -> int:
        if vertex in self.side0:
            return 0
        if vertex in self.side1:
            return 1
        raise UnknownVertex(vertex)


@dataclass(frozen=True)
class Carrier:
    wall: Wall
    subcomplex: CubeComplex

    def dual_edge_at(self, vertex: str) -> Edge:
        found = [edge for edge in self.wall.edges if vertex in edge]
        if not found:
            raise UnknownVertex(vertex)
        if len(found) > 1:
            raise AmbiguousDualEdge(f"vertex {vertex} lies on {len(found)} edges dual to wall {self.wall.id}")
        return found[0]


def walls(X: CubeComplex) -> List[Wall]:
    """Walls of X, numbered in order of their least edge."""
    def compute():
        classes = UnionFind(X.edges)
        for square in X.squares:
            c = square.corners
            classes.union(frozenset((c[0], c[1])), frozenset((c[2], c[3])))
            classes.union(frozenset((c[0], c[2])), frozenset((c[1], c[3])))
        groups = sorted(
            (frozenset(group) for group in classes.to_sets()),
            key=lambda group: min(tuple(sorted(edge)) for edge in group),
        )
        result = [Wall(index, group) for index, group in enumerate(groups)]
        logger.debug(f"Found {len(result)} walls among {len(X.edges)} edges")
        return result
    return X.memoize("walls", compute)


def wall_index(X: CubeComplex) -> Dict[Edge, int]:
    def compute():
        return {edge: wall.id for wall in walls(X) for edge in wall.edges}
    return X.memoize("wall_index", compute)


def wall_of_edge(X: CubeComplex, u: str, v: str) -> Wall:
    try:
        return walls(X)[wall_index(X)[frozenset((u, v))]]
    except KeyError:
        raise InvalidStep(f"{u}-{v} is not an edge") from None


def halfspaces(X: CubeComplex, W: Wall) -> HalfspacePair:
    table = X.memoize("halfspaces", dict)
    if W.id in table:
        return table[W.id]
    graph = X.graph.copy()
    graph.remove_edges_from(tuple(edge) for edge in W.edges)
    components = list(nx.connected_components(graph))
    if len(components) != 2:
        raise SeparationFailure(f"removing wall {W.id} leaves {len(components)} components")
    first, second = (frozenset(c) for c in components)
    if min(X.vertices) in second:
        first, second = second, first
    for edge in W.edges:
        if len(edge & first) != 1:
            u, v = sorted(edge)
            raise SeparationFailure(f"edge {u}-{v} of wall {W.id} does not cross between halfspaces")
    table[W.id] = HalfspacePair(W, first, second)
    return table[W.id]


def separates(P: HalfspacePair, u: str, v: str) -> bool:
    return P.side_of(u) != P.side_of(v)


def wall_signatures(X: CubeComplex) -> Dict[str, int]:
    """Vertex to bit vector: bit i set when the vertex lies on side 1 of wall i."""
    def compute():
        signature = {vertex: 0 for vertex in X.vertices}
        for wall in walls(X):
            for vertex in halfspaces(X, wall).side1:
                signature[vertex] |= 1 << wall.id
        return signature
    return X.memoize("signatures", compute)


def carrier(X: CubeComplex, W: Wall) -> Carrier:
    """Union of the cubes crossed by W."""
    cubes = {}
    for edge in W.edges:
        anchor = min(edge)
        for cube in X.cubes_at(anchor):
            if edge <= cube.key and edge in cube.edges():
                cubes[cube.key] = cube
    return Carrier(W, CubeComplex(cubes.values()))


def dual_neighbor(X: CubeComplex, W: Wall, vertex: str) -> str:
    """The other end of the unique edge of W at `vertex`."""
    index = wall_index(X)
    found = [other for other in X.neighbors(vertex) if index[frozenset((vertex, other))] == W.id]
    if not found:
        raise InvalidStep(f"vertex {vertex} is not on the carrier of wall {W.id}")
    if len(found) > 1:
        raise AmbiguousDualEdge(f"vertex {vertex} lies on {len(found)} edges dual to wall {W.id}")
    return found[0]


def reflection(X: CubeComplex, W: Wall) -> Automorphism:
    """The involution of the carrier of W swapping the ends of every dual edge."""
    C = carrier(X, W)
    mapping = {}
    for u, v in W.sorted_edges():
        for a, b in ((u, v), (v, u)):
            if a in mapping:
                raise AmbiguousDualEdge(f"vertex {a} lies on more than one edge dual to wall {W.id}")
            mapping[a] = b
    return Automorphism.from_mapping(C.subcomplex, mapping, name=f"sigma{W.id}")
