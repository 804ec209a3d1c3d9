# /project/cubing/metric.py
"""
Combinatorial (edge-count) metric on 1-skeletons, geodesics and their
hyperplane crossing sequences.

Every function accepts a finite CubeComplex or an ImplicitComplex. On a
cubing the distance between two vertices equals the number of walls
separating them, and a path is geodesic exactly when it crosses no wall
twice.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from cubing.complex import DEFAULT_VERTEX_BUDGET, CubeComplex, ImplicitComplex, all_pairs_lengths
from cubing.errors import (
    BudgetExceeded,
    DisconnectedPair,
    DisconnectedSet,
    InvalidStep,
    MetricMismatch,
    PreconditionError,
)
from cubing.hyperplanes import wall_index, wall_signatures
from cubing.process import Processor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CombinatorialPath:
    vertices: Tuple[str, ...]

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def stutter_free(self) -> bool:
        return all(a != b for a, b in zip(self.vertices, self.vertices[1:]))

    def normalized(self) -> "CombinatorialPath":
        """Drop repeated consecutive vertices."""
        kept = [self.vertices[0]]
        for vertex in self.vertices[1:]:
            if vertex != kept[-1]:
                kept.append(vertex)
        return CombinatorialPath(tuple(kept))

    def __str__(self):
        return " ".join(self.vertices)


@dataclass(frozen=True)
class CrossingSequence:
    walls: Tuple[Hashable, ...]

    def first_repeat(self) -> Optional[Tuple[int, int, Hashable]]:
        """(earlier position, later position, wall) of the first wall crossed twice."""
        seen = {}
        for position, wall in enumerate(self.walls):
            if wall in seen:
                return seen[wall], position, wall
            seen[wall] = position
        return None

    def is_duplicate_free(self) -> bool:
        return self.first_repeat() is None


def _as_path(p) -> CombinatorialPath:
    if isinstance(p, CombinatorialPath):
        path = p
    else:
        path = CombinatorialPath(tuple(p))
    if not path.vertices:
        raise InvalidStep("empty path")
    return path.normalized()


def _search(I: ImplicitComplex, u: str, v: str, budget: int, limit: Optional[int] = None) -> Optional[List[str]]:
    """Bidirectional breadth-first search; None when the distance exceeds `limit`."""
    if u == v:
        return [u]
    parents = ({u: None}, {v: None})
    frontiers = ([u], [v])
    depths = [0, 0]
    while frontiers[0] and frontiers[1]:
        if limit is not None and depths[0] + depths[1] >= limit:
            return None
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, theirs = parents[side], parents[1 - side]
        meeting = None
        grown = []
        for vertex in frontiers[side]:
            for other in I.neighbors(vertex):
                if other in mine:
                    continue
                mine[other] = vertex
                grown.append(other)
                if meeting is None and other in theirs:
                    meeting = other
            if len(mine) + len(theirs) > budget:
                raise BudgetExceeded(f"search from {u} to {v} in {I.name} exceeds {budget} vertices")
        depths[side] += 1
        if side == 0:
            frontiers = (grown, frontiers[1])
        else:
            frontiers = (frontiers[0], grown)
        if meeting is not None:
            head, tail = [], []
            vertex = meeting
            while vertex is not None:
                head.append(vertex)
                vertex = parents[0][vertex]
            vertex = parents[1][meeting]
            while vertex is not None:
                tail.append(vertex)
                vertex = parents[1][vertex]
            return head[::-1] + tail
    raise DisconnectedPair(f"{u} and {v} lie in different components of {I.name}")


def separating_walls(X: CubeComplex, u: str, v: str) -> List[int]:
    X.require(u)
    X.require(v)
    signatures = wall_signatures(X)
    difference = signatures[u] ^ signatures[v]
    return [i for i in range(difference.bit_length()) if difference >> i & 1]


def distance(X, u: str, v: str, cross_check: bool = False, budget: int = DEFAULT_VERTEX_BUDGET) -> int:
    if isinstance(X, CubeComplex):
        X.require(u)
        X.require(v)
        try:
            result = nx.shortest_path_length(X.graph, u, v)
        except nx.NetworkXNoPath:
            raise DisconnectedPair(f"{u} and {v} lie in different components") from None
        if cross_check:
            count = len(separating_walls(X, u, v))
            if count != result:
                raise MetricMismatch(f"d({u}, {v}) = {result} but {count} walls separate them")
        return result
    if X.distance_fn is not None:
        return X.distance_fn(u, v)
    return len(_search(X, u, v, budget)) - 1


def distance_within(X, u: str, v: str, limit: int, budget: int = DEFAULT_VERTEX_BUDGET) -> Optional[int]:
    """Distance from u to v, or None when it exceeds `limit`."""
    if isinstance(X, CubeComplex) or X.distance_fn is not None:
        result = distance(X, u, v, budget=budget)
        return result if result <= limit else None
    path = _search(X, u, v, budget, limit=limit)
    return None if path is None else len(path) - 1


def geodesic_path(X, u: str, v: str, budget: int = DEFAULT_VERTEX_BUDGET) -> CombinatorialPath:
    if isinstance(X, CubeComplex):
        X.require(u)
        X.require(v)
        try:
            return CombinatorialPath(tuple(nx.shortest_path(X.graph, u, v)))
        except nx.NetworkXNoPath:
            raise DisconnectedPair(f"{u} and {v} lie in different components") from None
    if X.distance_fn is None:
        return CombinatorialPath(tuple(_search(X, u, v, budget)))
    remaining = X.distance_fn(u, v)
    vertices = [u]
    while remaining > 0:
        current = vertices[-1]
        step = next((w for w in X.neighbors(current) if X.distance_fn(w, v) == remaining - 1), None)
        if step is None:
            raise MetricMismatch(f"no neighbor of {current} is closer to {v} in {X.name}")
        vertices.append(step)
        remaining -= 1
    return CombinatorialPath(tuple(vertices))


def edge_wall(X, u: str, v: str) -> Hashable:
    """Label of the wall dual to the edge u-v."""
    if isinstance(X, CubeComplex):
        try:
            return wall_index(X)[frozenset((u, v))]
        except KeyError:
            raise InvalidStep(f"{u}-{v} is not an edge") from None
    if X.wall_fn is None:
        raise PreconditionError(f"{X.name} has no hyperplane labelling")
    if u == v or v not in set(X.neighbor_fn(u)):
        raise InvalidStep(f"{u}-{v} is not an edge of {X.name}")
    return X.wall_fn(u, v)


def crossing_sequence(X, p) -> CrossingSequence:
    path = _as_path(p)
    return CrossingSequence(tuple(edge_wall(X, a, b) for a, b in zip(path.vertices, path.vertices[1:])))


def is_geodesic(X, p, cross_check: bool = False) -> bool:
    path = _as_path(p)
    if path.length == 0:
        return True
    if isinstance(X, ImplicitComplex) and X.wall_fn is None:
        for a, b in zip(path.vertices, path.vertices[1:]):
            if b not in set(X.neighbor_fn(a)):
                raise InvalidStep(f"{a}-{b} is not an edge of {X.name}")
        return distance(X, path.start, path.end) == path.length
    result = crossing_sequence(X, path).is_duplicate_free()
    if cross_check:
        metric = distance(X, path.start, path.end) == path.length
        if metric != result:
            raise MetricMismatch(
                f"path {path} is {'' if result else 'not '}duplicate-free but its length "
                f"{'differs from' if result else 'equals'} the distance"
            )
    return result


def interval(X: CubeComplex, u: str, v: str) -> FrozenSet[str]:
    """All vertices on some geodesic from u to v."""
    X.require(u)
    X.require(v)
    from_u = nx.single_source_shortest_path_length(X.graph, u)
    if v not in from_u:
        raise DisconnectedPair(f"{u} and {v} lie in different components")
    from_v = nx.single_source_shortest_path_length(X.graph, v)
    target = from_u[v]
    return frozenset(w for w, d in from_u.items() if d + from_v.get(w, target + 1) == target)


def is_convex(X: CubeComplex, S: Iterable[str]) -> bool:
    members = frozenset(S)
    for vertex in members:
        X.require(vertex)
    if not members:
        return True
    if not nx.is_connected(X.graph.subgraph(members)):
        raise DisconnectedSet(f"{len(members)} vertices do not span a connected subgraph")
    lengths = all_pairs_lengths(X)
    order = sorted(members)
    for i, u in enumerate(order):
        from_u = lengths[u]
        for v in order[i + 1:]:
            from_v = lengths[v]
            target = from_u[v]
            # only the component of S can hold a geodesic between its vertices
            for w, d in from_u.items():
                if w not in members and d + from_v[w] == target:
                    return False
    return True


def verify_wall_distance(X: CubeComplex, processor: Optional[Processor] = None) -> int:
    """
    Check d(u, v) equals the number of separating walls for every pair.

    Args:
        X: A finite complex whose walls all separate.
        processor: Runs one task per source vertex; serial when omitted.

    Returns:
        The number of unordered pairs checked.
    """
    signatures = wall_signatures(X)
    lengths = all_pairs_lengths(X)
    order = sorted(X.vertices)

    def check_from(index: int) -> List[str]:
        u = order[index]
        problems = []
        for v in order[index + 1:]:
            count = bin(signatures[u] ^ signatures[v]).count("1")
            if lengths[u].get(v) != count:
                problems.append(f"d({u}, {v}) = {lengths[u].get(v)} but {count} walls separate them")
        return problems

    indices: Sequence[int] = list(range(len(order)))
    if processor is None:
        outcomes = [check_from(i) for i in indices]
    else:
        outcomes = processor.run_tasks(check_from, indices, label="distance checks")
    problems = [problem for outcome in outcomes for problem in outcome]
    if problems:
        raise MetricMismatch(problems[0] + (f" (and {len(problems) - 1} more)" if len(problems) > 1 else ""))
    pairs = len(order) * (len(order) - 1) // 2
    logger.info(f"Distance equals separating-wall count on all {pairs} pairs")
    return pairs
