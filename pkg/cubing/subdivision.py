# /project/cubing/subdivision.py
"""
Cubical barycentric subdivision.

Vertices of the subdivision are the cubes of X, named by the sorted corner
tokens joined with "+". Cubes of the subdivision correspond to pairs of
faces F <= G of X; the cube for (F, G) has the faces H with F <= H <= G as
corners.
"""
import logging
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from cubing.automorphism import Automorphism
from cubing.complex import Cube, CubeComplex
from cubing.errors import AutomorphismError, CubingError, UnknownVertex

logger = logging.getLogger(__name__)

SEPARATOR = "+"


def barycenter(corners: Iterable[str]) -> str:
    return SEPARATOR.join(sorted(corners))


@dataclass(frozen=True)
class SubdivisionMap:
    source: CubeComplex
    subdivided: CubeComplex
    cube_of: Dict[str, Cube]

    def face_pair(self, cube: Cube) -> Tuple[Cube, Cube]:
        """The pair (F, G) of cubes of the source indexing a cube of the subdivision."""
        try:
            faces = [self.cube_of[token] for token in cube.corners]
        except KeyError as e:
            raise UnknownVertex(e.args[0]) from None
        smallest = min(faces, key=lambda c: (c.dim, c.corners))
        largest = max(faces, key=lambda c: (c.dim, c.corners))
        return smallest, largest

    def face_pairs(self) -> Dict[FrozenSet[str], Tuple[Cube, Cube]]:
        return {key: self.face_pair(cube) for key, cube in self.subdivided.cubes.items()}


def subdivide(X: CubeComplex) -> SubdivisionMap:
    start_time = time.time()
    cube_of = {barycenter(cube.key): cube for cube in X.cubes.values()}
    if len(cube_of) != len(X.cubes):
        raise CubingError(f"vertex tokens containing '{SEPARATOR}' make subdivision names ambiguous")
    cubes = []
    for top in X.maximal_cubes():
        size = len(top.corners)
        for corner in range(size):
            # bit t of a subdivision corner index: coordinate t is pinned to the bit of `corner`
            corners = tuple(barycenter(top.face(mask, corner & mask).corners) for mask in range(size))
            cubes.append(Cube(corners))
    subdivided = CubeComplex(cubes)
    logger.info(
        f"Subdivided {len(X.vertices)} vertices into {len(subdivided.vertices)} "
        f"in {time.time() - start_time:.2f} seconds"
    )
    return SubdivisionMap(X, subdivided, cube_of)


def induce_automorphism(S: SubdivisionMap, f: Automorphism) -> Automorphism:
    """The automorphism of the subdivision sending the barycenter of Q to that of f(Q)."""
    if not f.is_finite or set(f.table) != S.source.vertices:
        raise AutomorphismError(f"{f.name} is not an automorphism of the subdivided complex")
    mapping = {}
    for token, cube in S.cube_of.items():
        image = frozenset(f(c) for c in cube.corners)
        if image not in S.source.cubes:
            raise AutomorphismError(f"{f.name} does not map cube {token} onto a cube")
        mapping[token] = barycenter(image)
    return Automorphism.from_mapping(S.subdivided, mapping, name=f"{f.name}'")
