# /project/cubing/wallspace.py
"""
Finite spaces with walls and the cube complex they determine.

A vertex of the cubulation is an orientation: one block chosen per wall,
with every two chosen blocks intersecting. Orientations are written as bit
strings, bit i being the index of the block chosen for wall i. Walls listed
more than once are kept apart by ordering each class of copies: for copies
i < j, choosing for i the block holding the least point while choosing the
other block for j is inconsistent.
"""
import logging
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

import networkx as nx

from cubing.automorphism import Automorphism
from cubing.complex import Cube, CubeComplex
from cubing.errors import BudgetExceeded, UnknownVertex, WallspaceError

logger = logging.getLogger(__name__)

DEFAULT_MAX_WALLS = 20


@dataclass(frozen=True)
class Partition:
    blocks: Tuple[FrozenSet[str], FrozenSet[str]]

    def block_of(self, point: str) -> int:
        if point in self.blocks[0]:
            return 0
        if point in self.blocks[1]:
            return 1
        raise UnknownVertex(point)

    def separates(self, u: str, v: str) -> bool:
        return self.block_of(u) != self.block_of(v)

    @property
    def key(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(self.blocks)

    def __str__(self):
        return "wall " + " ".join(sorted(self.blocks[0])) + " | " + " ".join(sorted(self.blocks[1]))


@dataclass(frozen=True)
class Wallspace:
    points: Tuple[str, ...]
    walls: Tuple[Partition, ...]

    def __post_init__(self):
        universe = set(self.points)
        if len(universe) != len(self.points):
            raise WallspaceError("repeated point")
        for index, wall in enumerate(self.walls):
            first, second = wall.blocks
            if not first or not second:
                raise WallspaceError(f"wall {index} has an empty block")
            if first & second:
                raise WallspaceError(f"wall {index} puts {', '.join(sorted(first & second))} in both blocks")
            unknown = (first | second) - universe
            if unknown:
                raise WallspaceError(f"wall {index} names unknown points {', '.join(sorted(unknown))}")
            uncovered = universe - first - second
            if uncovered:
                raise WallspaceError(f"wall {index} does not cover {', '.join(sorted(uncovered))}")

    def require(self, point: str):
        if point not in self.points:
            raise UnknownVertex(point)

    def low_block(self, index: int) -> int:
        """Index of the block of wall `index` holding the least point."""
        return self.walls[index].block_of(min(self.points))

    def duplicate_classes(self) -> Dict[FrozenSet[FrozenSet[str]], List[int]]:
        classes: Dict[FrozenSet[FrozenSet[str]], List[int]] = {}
        for index, wall in enumerate(self.walls):
            classes.setdefault(wall.key, []).append(index)
        return classes


@dataclass(frozen=True)
class Orientation:
    choice: Tuple[int, ...]

    @classmethod
    def from_token(cls, token: str) -> "Orientation":
        return cls(tuple(int(bit) for bit in token.strip("-")))

    @property
    def token(self) -> str:
        return "".join(str(bit) for bit in self.choice) or "-"

    def flip(self, *indices: int) -> "Orientation":
        choice = list(self.choice)
        for i in indices:
            choice[i] ^= 1
        return Orientation(tuple(choice))


@dataclass(frozen=True)
class Cubulation:
    space: Wallspace
    complex: CubeComplex
    embedding: Dict[str, str]


def wall_distance(W: Wallspace, u: str, v: str) -> int:
    W.require(u)
    W.require(v)
    return sum(1 for wall in W.walls if wall.separates(u, v))


def principal_orientation(W: Wallspace, point: str) -> Orientation:
    W.require(point)
    return Orientation(tuple(wall.block_of(point) for wall in W.walls))


class _Compatibility:
    """Table of which block choices on two walls may coexist."""

    def __init__(self, W: Wallspace):
        count = len(W.walls)
        low = [W.low_block(i) for i in range(count)]
        self.allowed = {}
        for i in range(count):
            for j in range(i + 1, count):
                duplicate = W.walls[i].key == W.walls[j].key
                for s in (0, 1):
                    for t in (0, 1):
                        meet = bool(W.walls[i].blocks[s] & W.walls[j].blocks[t])
                        if duplicate:
                            meet = meet or (s != low[i] and t == low[j])
                        self.allowed[i, s, j, t] = meet
                        self.allowed[j, t, i, s] = meet

    def compatible(self, i: int, s: int, j: int, t: int) -> bool:
        return self.allowed[i, s, j, t]

    def consistent(self, o: Orientation) -> bool:
        count = len(o.choice)
        return all(self.allowed[i, o.choice[i], j, o.choice[j]] for i in range(count) for j in range(i + 1, count))

    def flippable(self, o: Orientation, i: int) -> bool:
        s = 1 - o.choice[i]
        return all(self.allowed[i, s, j, t] for j, t in enumerate(o.choice) if j != i)


def is_consistent(W: Wallspace, o: Orientation) -> bool:
    return _Compatibility(W).consistent(o)


def cubulate(W: Wallspace, max_walls: int = DEFAULT_MAX_WALLS) -> Cubulation:
    """
    Cube complex of consistent orientations reachable from the principal ones.

    Args:
        W: A finite wallspace.
        max_walls: Refuse larger wallspaces.

    Returns:
        The cubulation, with the embedding of each point as its principal
        orientation token.
    """
    if len(W.walls) > max_walls:
        raise BudgetExceeded(f"wallspace has {len(W.walls)} walls, limit is {max_walls}")
    start_time = time.time()
    table = _Compatibility(W)
    embedding = {point: principal_orientation(W, point) for point in W.points}
    seen = set(embedding.values())
    queue = sorted(seen, key=lambda o: o.choice)
    while queue:
        current = queue.pop()
        for i in range(len(W.walls)):
            if table.flippable(current, i):
                other = current.flip(i)
                if other not in seen:
                    seen.add(other)
                    queue.append(other)

    cubes = []
    for o in sorted(seen, key=lambda o: o.choice):
        free = [i for i in range(len(W.walls)) if table.flippable(o, i)]
        transverse = nx.Graph()
        transverse.add_nodes_from(free)
        for a, i in enumerate(free):
            for j in free[a + 1:]:
                if table.compatible(i, 1 - o.choice[i], j, 1 - o.choice[j]):
                    transverse.add_edge(i, j)
        for clique in nx.find_cliques(transverse):
            axes = sorted(clique)
            corners = []
            for index in range(1 << len(axes)):
                corners.append(o.flip(*(axes[t] for t in range(len(axes)) if index >> t & 1)).token)
            cubes.append(Cube(tuple(corners)))
    X = CubeComplex(cubes, vertices=(o.token for o in seen))
    logger.info(
        f"Cubulated {len(W.points)} points and {len(W.walls)} walls into {len(X.vertices)} vertices "
        f"in {time.time() - start_time:.2f} seconds"
    )
    return Cubulation(W, X, {point: o.token for point, o in embedding.items()})


def _wall_permutation(W: Wallspace, g: Mapping[str, str]) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Image index of every wall and, per wall, the image index of each of its blocks."""
    classes = W.duplicate_classes()
    target = [0] * len(W.walls)
    for key, members in classes.items():
        image = frozenset(frozenset(g[x] for x in block) for block in key)
        images = classes.get(image)
        if images is None or len(images) != len(members):
            raise WallspaceError(f"map does not send {W.walls[members[0]]} to a wall")
        low = W.walls[members[0]].blocks[W.low_block(members[0])]
        low_image = W.walls[images[0]].blocks[W.low_block(images[0])]
        ordered = images if frozenset(g[x] for x in low) == low_image else images[::-1]
        for source, dest in zip(members, ordered):
            target[source] = dest
    sides = []
    for i, wall in enumerate(W.walls):
        image_first = frozenset(g[x] for x in wall.blocks[0])
        if image_first == W.walls[target[i]].blocks[0]:
            sides.append((0, 1))
        else:
            sides.append((1, 0))
    return target, sides


def extend_automorphism(W: Wallspace, g: Mapping[str, str], cubulation: Optional[Cubulation] = None,
                        name: str = "g") -> Automorphism:
    """The automorphism of the cubulation induced by a wall-preserving bijection of the points."""
    if set(g) != set(W.points) or set(g.values()) != set(W.points):
        raise WallspaceError("map is not a bijection of the points")
    if cubulation is None:
        cubulation = cubulate(W)
    target, sides = _wall_permutation(W, g)
    mapping = {}
    for token in cubulation.complex.vertices:
        o = Orientation.from_token(token)
        choice = [0] * len(W.walls)
        for i, s in enumerate(o.choice):
            choice[target[i]] = sides[i][s]
        mapping[token] = Orientation(tuple(choice)).token
    return Automorphism.from_mapping(cubulation.complex, mapping, name=name)
