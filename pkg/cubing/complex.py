# /project/cubing/complex.py
"""
Finite cube complexes, vertex links, implicit (generator-style) complexes and
the combinatorial CAT(0) checks.

A complex is given by cubes over opaque string vertex tokens. A cube of
dimension k is an ordered tuple of 2^k corners; position i holds the corner
whose binary coordinates are the bits of i. Faces are implied and added on
construction.
"""
import logging
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Container, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from cubing.errors import BudgetExceeded, CubeShapeError, PreconditionError, UnknownVertex

logger = logging.getLogger(__name__)

Edge = FrozenSet[str]

DEFAULT_VERTEX_BUDGET = 100000


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Cube:
    corners: Tuple[str, ...]

    def __post_init__(self):
        count = len(self.corners)
        if count == 0 or count & (count - 1):
            raise CubeShapeError(f"corner count {count} is not a power of two")
        if len(set(self.corners)) != count:
            raise CubeShapeError(f"repeated corner in cube {' '.join(self.corners)}")

    @property
    def dim(self) -> int:
        return len(self.corners).bit_length() - 1

    @property
    def key(self) -> FrozenSet[str]:
        return frozenset(self.corners)

    def face(self, mask: int, values: int) -> "Cube":
        """Face fixing the coordinates in `mask` to the bits of `values`."""
        return Cube(tuple(c for i, c in enumerate(self.corners) if i & mask == values))

    def facets(self) -> List["Cube"]:
        result = []
        for j in range(self.dim):
            result.append(self.face(1 << j, 0))
            result.append(self.face(1 << j, 1 << j))
        return result

    def faces(self) -> Iterator["Cube"]:
        """Every face, the cube itself included (3^dim of them)."""
        full = (1 << self.dim) - 1
        for mask in range(full + 1):
            for values in _submasks(mask):
                yield self.face(mask, values)

    def edges(self) -> FrozenSet[Edge]:
        result = set()
        for i, corner in enumerate(self.corners):
            for j in range(self.dim):
                if not i & (1 << j):
                    result.add(frozenset((corner, self.corners[i | (1 << j)])))
        return frozenset(result)

    def edges_at(self, vertex: str) -> FrozenSet[Edge]:
        i = self.corners.index(vertex)
        return frozenset(frozenset((vertex, self.corners[i ^ (1 << j)])) for j in range(self.dim))

    def canonical(self) -> "Cube":
        """Least corner first, axes ordered by the token of the corner next to it."""
        if self.dim == 0:
            return self
        origin = self.corners.index(min(self.corners))
        reflected = [self.corners[i ^ origin] for i in range(len(self.corners))]
        axes = sorted(range(self.dim), key=lambda j: reflected[1 << j])
        corners = []
        for index in range(len(reflected)):
            old = 0
            for t, axis in enumerate(axes):
                if index >> t & 1:
                    old |= 1 << axis
            corners.append(reflected[old])
        return Cube(tuple(corners))

    def __str__(self):
        return "cube " + " ".join(self.corners)


class CubeComplex:
    """
    Finite cube complex, closed under faces. Immutable after construction.

    Cube records sharing a corner set but not an edge structure are not merged:
    the first record wins and the clash is kept in `defects`, where
    `validate` reports it as a compatibility failure.
    """

    def __init__(self, cubes: Iterable[Cube] = (), vertices: Iterable[str] = ()):
        self.cubes: Dict[FrozenSet[str], Cube] = {}
        self.defects: List[str] = []
        for cube in cubes:
            self._add_with_faces(cube)
        for vertex in vertices:
            self._add_with_faces(Cube((vertex,)))
        self.vertices: FrozenSet[str] = frozenset(
            next(iter(key)) for key, cube in self.cubes.items() if cube.dim == 0
        )
        self._at: Dict[str, List[Cube]] = {v: [] for v in self.vertices}
        for cube in self.cubes.values():
            for corner in cube.corners:
                self._at[corner].append(cube)
        self._memo: Dict[str, object] = {}

    def _add_with_faces(self, cube: Cube):
        cube = cube.canonical()
        existing = self.cubes.get(cube.key)
        if existing is not None:
            if existing.edges() != cube.edges():
                self.defects.append(f"conflicting records for cube over {{{', '.join(sorted(cube.key))}}}")
            return
        for face in cube.faces():
            face = face.canonical()
            known = self.cubes.get(face.key)
            if known is None:
                self.cubes[face.key] = face
            elif known.edges() != face.edges():
                self.defects.append(f"conflicting records for cube over {{{', '.join(sorted(face.key))}}}")

    def memoize(self, name: str, compute: Callable[[], object]):
        if name not in self._memo:
            self._memo[name] = compute()
        return self._memo[name]

    def __contains__(self, vertex) -> bool:
        return vertex in self.vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeComplex):
            return NotImplemented
        return self.vertices == other.vertices and set(self.cubes) == set(other.cubes)

    __hash__ = None

    def __repr__(self):
        return f"CubeComplex({len(self.vertices)} vertices, dimension {self.dimension})"

    def require(self, vertex: str):
        if vertex not in self.vertices:
            raise UnknownVertex(vertex)

    @property
    def dimension(self) -> int:
        return max((cube.dim for cube in self.cubes.values()), default=0)

    def cubes_of_dim(self, k: int) -> List[Cube]:
        return sorted((c for c in self.cubes.values() if c.dim == k), key=lambda c: c.corners)

    @property
    def edges(self) -> List[Edge]:
        return [cube.key for cube in self.cubes_of_dim(1)]

    @property
    def squares(self) -> List[Cube]:
        return self.cubes_of_dim(2)

    def counts(self) -> List[int]:
        counts = [0] * (self.dimension + 1)
        for cube in self.cubes.values():
            counts[cube.dim] += 1
        return counts

    def cubes_at(self, vertex: str) -> List[Cube]:
        self.require(vertex)
        return list(self._at[vertex])

    def neighbors(self, vertex: str) -> List[str]:
        self.require(vertex)
        return sorted(self.graph.neighbors(vertex))

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.cubes and u != v

    @property
    def graph(self) -> nx.Graph:
        def build():
            graph = nx.Graph()
            graph.add_nodes_from(sorted(self.vertices))
            graph.add_edges_from(tuple(sorted(edge)) for edge in self.edges)
            return graph
        return self.memoize("graph", build)

    def maximal_cubes(self) -> List[Cube]:
        def compute():
            result = []
            for cube in self.cubes.values():
                anchor = cube.corners[0]
                if not any(other.dim > cube.dim and cube.key <= other.key for other in self._at[anchor]):
                    result.append(cube)
            return sorted(result, key=lambda c: c.corners)
        return self.memoize("maximal", compute)

    def subcomplex(self, vertices: Iterable[str]) -> "CubeComplex":
        """Full subcomplex spanned by `vertices`."""
        members = frozenset(vertices)
        for vertex in members:
            self.require(vertex)
        cubes = [cube for cube in self.cubes.values() if cube.key <= members]
        return CubeComplex(cubes)

    def face_keys(self, cube: Cube) -> FrozenSet[FrozenSet[str]]:
        table = self.memoize("face_keys", dict)
        if cube.key not in table:
            table[cube.key] = frozenset(face.key for face in cube.faces())
        return table[cube.key]


def cube_corners(n: int) -> Tuple[str, ...]:
    """Corner i of the standard n-cube is the bit string of i, least significant bit first."""
    return tuple(format(i, f"0{n}b")[::-1] for i in range(1 << n))


def standard_cube(n: int) -> CubeComplex:
    return CubeComplex([Cube(cube_corners(n))])


@dataclass(frozen=True)
class LinkComplex:
    base: str
    vertices: FrozenSet[Edge]
    simplices: FrozenSet[FrozenSet[Edge]]

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def one_skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(s) for s in self.simplices if len(s) == 2)
        return graph

    def empty_simplices(self) -> List[FrozenSet[Edge]]:
        """Cliques of the 1-skeleton that span no simplex."""
        missing = []
        for clique in nx.find_cliques(self.one_skeleton()):
            if frozenset(clique) not in self.simplices:
                missing.append(frozenset(clique))
        return missing

    def is_flag(self) -> bool:
        return not self.empty_simplices()


def link(X: CubeComplex, v: str) -> LinkComplex:
    X.require(v)
    simplices = set()
    for cube in X.cubes_at(v):
        if cube.dim >= 1:
            simplices.add(cube.edges_at(v))
    vertices = frozenset(edge for simplex in simplices if len(simplex) == 1 for edge in simplex)
    return LinkComplex(base=v, vertices=vertices, simplices=frozenset(simplices))


@dataclass
class ValidationReport:
    closure_ok: bool = True
    compatibility_ok: bool = True
    links_flag_ok: bool = True
    median_ok: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.closure_ok and self.compatibility_ok and self.links_flag_ok and self.median_ok


def _fmt(keys: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(keys)) + "}"


def _check_closure(X: CubeComplex, report: ValidationReport):
    for cube in X.cubes.values():
        for face in cube.faces():
            if face.key not in X.cubes:
                report.closure_ok = False
                report.failures.append(f"closure: face {_fmt(face.key)} of {_fmt(cube.key)} missing")


def _check_compatibility(X: CubeComplex, report: ValidationReport):
    for defect in X.defects:
        report.compatibility_ok = False
        report.failures.append(f"compatibility: {defect}")
    seen = set()
    for vertex in sorted(X.vertices):
        cubes = X.cubes_at(vertex)
        for i, first in enumerate(cubes):
            for second in cubes[i + 1:]:
                pair = frozenset((first.key, second.key))
                if pair in seen:
                    continue
                seen.add(pair)
                common = first.key & second.key
                if common not in X.face_keys(first) or common not in X.face_keys(second):
                    report.compatibility_ok = False
                    report.failures.append(
                        f"compatibility: cubes {_fmt(first.key)} and {_fmt(second.key)} meet in {_fmt(common)}"
                    )


def _check_links(X: CubeComplex, report: ValidationReport):
    for vertex in sorted(X.vertices):
        for clique in link(X, vertex).empty_simplices():
            report.links_flag_ok = False
            others = sorted(next(iter(edge - {vertex})) for edge in clique)
            report.failures.append(f"flag: link of {vertex} has empty simplex on edges to {', '.join(others)}")


def medians(X: CubeComplex, u: str, v: str, w: str) -> List[str]:
    """All vertices lying on geodesics between each pair of u, v, w."""
    lengths = all_pairs_lengths(X)
    found = []
    for m in sorted(X.vertices):
        if (lengths[u][m] + lengths[m][v] == lengths[u][v]
                and lengths[v][m] + lengths[m][w] == lengths[v][w]
                and lengths[u][m] + lengths[m][w] == lengths[u][w]):
            found.append(m)
    return found


def all_pairs_lengths(X: CubeComplex) -> Dict[str, Dict[str, int]]:
    return X.memoize("all_pairs", lambda: dict(nx.all_pairs_shortest_path_length(X.graph)))


def _check_median(X: CubeComplex, report: ValidationReport):
    graph = X.graph
    if len(graph) == 0:
        return
    if not nx.is_connected(graph):
        report.median_ok = False
        report.failures.append(f"median: 1-skeleton has {nx.number_connected_components(graph)} components")
        return
    order = sorted(X.vertices)
    lengths = all_pairs_lengths(X)
    table = [[lengths[a][b] for b in order] for a in order]
    count = len(order)
    intervals = [[0] * count for _ in range(count)]
    for i in range(count):
        row_i = table[i]
        for j in range(i, count):
            row_j = table[j]
            target = row_i[j]
            mask = 0
            for k in range(count):
                if row_i[k] + row_j[k] == target:
                    mask |= 1 << k
            intervals[i][j] = intervals[j][i] = mask
    for i in range(count):
        for j in range(i + 1, count):
            first = intervals[i][j]
            for k in range(j + 1, count):
                common = first & intervals[j][k] & intervals[i][k]
                if common == 0 or common & (common - 1):
                    report.median_ok = False
                    report.failures.append(
                        f"median: triple {order[i]}, {order[j]}, {order[k]} has "
                        f"{bin(common).count('1')} medians"
                    )
                    return
    for a in order:
        around = sorted(graph.neighbors(a))
        for i, b in enumerate(around):
            for c in around[i + 1:]:
                for d in sorted(set(graph.neighbors(b)) & set(graph.neighbors(c)) - {a}):
                    square = X.cubes.get(frozenset((a, b, c, d)))
                    if square is None or square.dim != 2:
                        report.median_ok = False
                        report.failures.append(f"median: 4-cycle {a}-{b}-{d}-{c} bounds no square")
                        return


def validate(X: CubeComplex) -> ValidationReport:
    start_time = time.time()
    report = ValidationReport()
    _check_closure(X, report)
    _check_compatibility(X, report)
    _check_links(X, report)
    _check_median(X, report)
    logger.info(
        f"Validated complex with {len(X.vertices)} vertices in {time.time() - start_time:.2f} seconds: "
        f"{'accepted' if report.accepted else f'{len(report.failures)} failures'}"
    )
    for failure in report.failures:
        logger.debug(failure)
    return report


@dataclass(frozen=True)
class ImplicitComplex:
    """
    Locally finite complex known only through local enumerators.

    `neighbor_fn(v)` lists the vertices adjacent to v. `cube_fn(v, members)`
    lists cubes (as corner tuples) containing v whose corners all lie in
    `members`; every maximal such cube must appear for some corner of it.
    `wall_fn(u, v)` labels the hyperplane dual to an edge and `distance_fn`
    gives exact distances; both are optional.
    """
    seed: str
    neighbor_fn: Callable[[str], Iterable[str]]
    cube_fn: Callable[[str, Container[str]], Iterable[Tuple[str, ...]]]
    name: str
    wall_fn: Optional[Callable[[str, str], Hashable]] = None
    distance_fn: Optional[Callable[[str, str], int]] = None

    def neighbors(self, vertex: str) -> List[str]:
        return sorted(self.neighbor_fn(vertex))

    def __repr__(self):
        return f"ImplicitComplex({self.name})"


def ball_vertices(I, center: str, r: int, budget: int = DEFAULT_VERTEX_BUDGET) -> Dict[str, int]:
    """Vertices within distance r of `center`, mapped to their distance."""
    if r < 0:
        raise PreconditionError(f"radius must be non-negative, got {r}")
    if isinstance(I, CubeComplex):
        I.require(center)
        return dict(nx.single_source_shortest_path_length(I.graph, center, cutoff=r))
    depth = {center: 0}
    queue = deque([center])
    while queue:
        vertex = queue.popleft()
        if depth[vertex] == r:
            continue
        for other in I.neighbor_fn(vertex):
            if other not in depth:
                depth[other] = depth[vertex] + 1
                if len(depth) > budget:
                    raise BudgetExceeded(f"ball of radius {r} around {center} in {I.name} exceeds {budget} vertices")
                queue.append(other)
    return depth


def ball(I, center: str, r: int, budget: int = DEFAULT_VERTEX_BUDGET) -> CubeComplex:
    """Full subcomplex spanned by the vertices at distance <= r from `center`."""
    start_time = time.time()
    members = ball_vertices(I, center, r, budget)
    if isinstance(I, CubeComplex):
        return I.subcomplex(members)
    cubes = []
    keys = set()
    for vertex in sorted(members):
        for corners in I.cube_fn(vertex, members):
            cube = Cube(tuple(corners))
            if cube.key not in keys:
                keys.add(cube.key)
                cubes.append(cube)
    result = CubeComplex(cubes, vertices=members)
    logger.info(
        f"Materialized ball of radius {r} around {center} in {I.name}: "
        f"{len(result.vertices)} vertices in {time.time() - start_time:.2f} seconds"
    )
    return result
