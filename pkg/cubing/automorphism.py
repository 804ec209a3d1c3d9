# /project/cubing/automorphism.py
"""
Structure-preserving vertex bijections of finite and implicit complexes.

Finite automorphisms carry their vertex table and are validated on
construction (bijection, edges to edges, squares to squares). On a validated
cubing the higher cubes follow from the 2-skeleton through the flag
condition. Automorphisms of implicit complexes are pairs of callables and are
trusted; they may raise RegionError outside their declared region.
"""
import logging
from math import lcm
from typing import Callable, Dict, Iterable, List, Mapping, Optional

from networkx.algorithms.isomorphism import GraphMatcher

from cubing.complex import CubeComplex, ImplicitComplex
from cubing.errors import (
    CubingError,
    EdgeNotPreserved,
    NotABijection,
    SquareNotPreserved,
    UnknownVertex,
)

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_FORCE_LIMIT = 30


def validate_mapping(X: CubeComplex, mapping: Mapping[str, str]):
    """Raise unless `mapping` is an automorphism of X."""
    missing = X.vertices - set(mapping)
    if missing:
        raise NotABijection(f"map is not total: no image for {', '.join(sorted(missing))}")
    extra = set(mapping) - X.vertices
    if extra:
        raise NotABijection(f"map names unknown vertices {', '.join(sorted(extra))}")
    if set(mapping.values()) != X.vertices:
        raise NotABijection("map is not a bijection of the vertex set")
    for edge in X.edges:
        u, v = sorted(edge)
        image = frozenset((mapping[u], mapping[v]))
        cube = X.cubes.get(image)
        if cube is None or cube.dim != 1:
            raise EdgeNotPreserved(f"edge {u}-{v} maps to non-edge {mapping[u]}-{mapping[v]}")
    for square in X.squares:
        image = frozenset(mapping[c] for c in square.corners)
        cube = X.cubes.get(image)
        if cube is None or cube.dim != 2:
            raise SquareNotPreserved(f"square {' '.join(square.corners)} is not mapped onto a square")


class Automorphism:
    def __init__(self, domain, forward: Callable[[str], str], backward: Callable[[str], str],
                 name: str = "f", table: Optional[Dict[str, str]] = None):
        self.domain = domain
        self.forward = forward
        self.backward = backward
        self.name = name
        self.table = table

    @classmethod
    def from_mapping(cls, X: CubeComplex, mapping: Mapping[str, str], name: str = "f", validate: bool = True):
        table = dict(mapping)
        if validate:
            validate_mapping(X, table)
        inverse = {image: vertex for vertex, image in table.items()}

        def forward(vertex):
            try:
                return table[vertex]
            except KeyError:
                raise UnknownVertex(vertex) from None

        def backward(vertex):
            try:
                return inverse[vertex]
            except KeyError:
                raise UnknownVertex(vertex) from None

        return cls(X, forward, backward, name=name, table=table)

    @classmethod
    def from_functions(cls, domain: ImplicitComplex, forward, backward, name: str = "f"):
        return cls(domain, forward, backward, name=name)

    @classmethod
    def identity(cls, domain, name: str = "id"):
        if isinstance(domain, CubeComplex):
            return cls.from_mapping(domain, {v: v for v in domain.vertices}, name=name, validate=False)
        return cls(domain, lambda v: v, lambda v: v, name=name)

    @property
    def is_finite(self) -> bool:
        return self.table is not None

    def __call__(self, vertex: str) -> str:
        return self.forward(vertex)

    def __repr__(self):
        return f"Automorphism({self.name} on {self.domain!r})"

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        if self.is_finite and other.is_finite:
            return self.table == other.table
        return self is other

    def __hash__(self):
        if self.is_finite:
            return hash(frozenset(self.table.items()))
        return id(self)

    def inverse(self) -> "Automorphism":
        name = f"{self.name}^-1"
        if self.is_finite:
            table = {image: vertex for vertex, image in self.table.items()}
            return Automorphism.from_mapping(self.domain, table, name=name, validate=False)
        return Automorphism(self.domain, self.backward, self.forward, name=name)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        name = f"{self.name}*{other.name}"
        if self.is_finite and other.is_finite:
            table = {vertex: self.table[other.table[vertex]] for vertex in other.table}
            return Automorphism.from_mapping(self.domain, table, name=name, validate=False)
        return Automorphism(
            self.domain,
            lambda v: self.forward(other.forward(v)),
            lambda v: other.backward(self.backward(v)),
            name=name,
        )

    def power(self, k: int) -> "Automorphism":
        if k == 0:
            return Automorphism.identity(self.domain)
        base = self if k > 0 else self.inverse()
        count = abs(k)
        if base.is_finite:
            table = dict(base.table)
            for _ in range(count - 1):
                table = {vertex: base.table[image] for vertex, image in table.items()}
            return Automorphism.from_mapping(self.domain, table, name=f"{self.name}^{k}", validate=False)
        step, back = base.forward, base.backward

        def forward(vertex):
            for _ in range(count):
                vertex = step(vertex)
            return vertex

        def backward(vertex):
            for _ in range(count):
                vertex = back(vertex)
            return vertex

        return Automorphism(self.domain, forward, backward, name=f"{self.name}^{k}")

    def _require_finite(self):
        if not self.is_finite:
            raise CubingError(f"{self.name} acts on an implicit complex; operation needs a finite one")

    def order(self) -> int:
        self._require_finite()
        seen = set()
        result = 1
        for start in sorted(self.table):
            if start in seen:
                continue
            length, vertex = 0, start
            while vertex not in seen:
                seen.add(vertex)
                vertex = self.table[vertex]
                length += 1
            result = lcm(result, length)
        return result

    def fixed_vertices(self) -> List[str]:
        self._require_finite()
        return sorted(v for v, image in self.table.items() if v == image)

    def agrees_with(self, other: "Automorphism", vertices: Iterable[str]) -> bool:
        return all(self(v) == other(v) for v in vertices)


def enumerate_automorphisms(X: CubeComplex, limit: int = DEFAULT_BRUTE_FORCE_LIMIT) -> List[Automorphism]:
    """Full automorphism group of a small complex, by graph matching on the 1-skeleton."""
    if len(X.vertices) > limit:
        raise CubingError(f"brute-force enumeration is limited to {limit} vertices, complex has {len(X.vertices)}")
    squares = {square.key for square in X.squares}
    result = []
    for mapping in GraphMatcher(X.graph, X.graph).isomorphisms_iter():
        if all(frozenset(mapping[c] for c in key) in squares for key in squares):
            result.append(Automorphism.from_mapping(X, mapping, name=f"g{len(result)}", validate=False))
    order = sorted(X.vertices)
    result.sort(key=lambda g: tuple(g(v) for v in order))
    for index, g in enumerate(result):
        g.name = f"g{index}"
    logger.info(f"Enumerated {len(result)} automorphisms of a complex with {len(order)} vertices")
    return result
