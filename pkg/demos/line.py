# /project/demos/line.py
"""The standard line: vertices are the integers, edges join n and n + 1."""
from functools import lru_cache

from cubing.automorphism import Automorphism
from cubing.complex import ImplicitComplex


def _neighbors(v: str):
    n = int(v)
    return [str(n - 1), str(n + 1)]


def _cubes(v: str, members):
    yield (v,)
    for w in _neighbors(v):
        if w in members:
            yield (v, w)


def _wall(u: str, v: str) -> int:
    return min(int(u), int(v))


def _distance(u: str, v: str) -> int:
    return abs(int(u) - int(v))


@lru_cache(maxsize=None)
def standard_line() -> ImplicitComplex:
    return ImplicitComplex(
        seed="0",
        neighbor_fn=_neighbors,
        cube_fn=_cubes,
        name="line",
        wall_fn=_wall,
        distance_fn=_distance,
    )


def line_shift(k: int) -> Automorphism:
    """n -> n + k."""
    return Automorphism.from_functions(
        standard_line(), lambda v: str(int(v) + k), lambda v: str(int(v) - k), name=f"shift{k}"
    )


def line_reflection(c: int) -> Automorphism:
    """n -> c - n: fixes the vertex c/2 for even c, swaps the edge around c/2 for odd c."""
    def flip(v: str) -> str:
        return str(c - int(v))

    return Automorphism.from_functions(standard_line(), flip, flip, name=f"reflect{c}")
