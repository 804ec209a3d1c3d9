# /project/demos/subadditivity.py
"""Translation length is subadditive along any factorization into automorphisms."""
import logging
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from cubing.automorphism import Automorphism
from cubing.classify import DEFAULT_SEARCH_RADIUS, translation_length
from cubing.complex import DEFAULT_VERTEX_BUDGET, CubeComplex, ball_vertices, standard_cube
from cubing.errors import AutomorphismError, RegionError
from demos import DemoReport
from demos.line import line_shift

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubadditivityReport:
    name: str
    delta: int
    parts: Tuple[int, ...]
    exact: bool

    @property
    def holds(self) -> bool:
        return self.delta <= sum(self.parts)

    def __str__(self):
        terms = " + ".join(str(d) for d in self.parts)
        return f"{self.name}: {self.delta} <= {terms}{'' if self.exact else ' (uncertified)'}"


def _test_vertices(f: Automorphism, radius: int, budget: int) -> List[str]:
    if f.is_finite:
        return sorted(f.domain.vertices)
    return sorted(ball_vertices(f.domain, f.domain.seed, radius, budget))


def delta_subadditivity(f: Automorphism, word: Sequence[Automorphism],
                        radius: int = DEFAULT_SEARCH_RADIUS, budget: int = DEFAULT_VERTEX_BUDGET) -> SubadditivityReport:
    """
    Compare the translation length of f with the sum over a factorization.

    Args:
        f: The composed automorphism.
        word: Factors s_1, ..., s_k with f = s_1 o ... o s_k.
        radius: Ball radius for implicit complexes.
        budget: Vertex budget for searches.

    Returns:
        Both sides of the inequality.
    """
    if not word:
        raise AutomorphismError("empty factorization")
    product = reduce(lambda left, right: left.compose(right), word)
    for v in _test_vertices(f, radius, budget):
        try:
            expected, actual = f(v), product(v)
        except RegionError:
            continue
        if expected != actual:
            raise AutomorphismError(f"factorization of {f.name} disagrees at {v}: {actual} != {expected}")
    whole = translation_length(f, radius=radius, budget=budget)
    parts = [translation_length(s, radius=radius, budget=budget) for s in word]
    exact = whole.exact and all(p.exact for p in parts)
    return SubadditivityReport(f.name, whole.delta, tuple(p.delta for p in parts), exact)


def coordinate_reflection(X: CubeComplex, axis: int) -> Automorphism:
    def flip(token: str) -> str:
        bits = list(token)
        bits[axis] = "1" if bits[axis] == "0" else "0"
        return "".join(bits)
    return Automorphism.from_mapping(X, {v: flip(v) for v in X.vertices}, name=f"r{axis}")


def antipodal_map(X: CubeComplex) -> Automorphism:
    return Automorphism.from_mapping(
        X, {v: "".join("1" if c == "0" else "0" for c in v) for v in X.vertices}, name="antipodal"
    )


def shipped_decompositions() -> List[Tuple[Automorphism, List[Automorphism]]]:
    s = line_shift(1)
    twice = line_shift(2)
    identity = Automorphism.identity(s.domain, name="id")
    X = standard_cube(3)
    reflections = [coordinate_reflection(X, axis) for axis in range(3)]
    return [
        (twice, [s, s]),
        (identity, [s, s.inverse()]),
        (antipodal_map(X), reflections),
    ]


def demo_words(radius: Optional[int] = None, budget: int = DEFAULT_VERTEX_BUDGET) -> DemoReport:
    report = DemoReport("translation length subadditivity over shipped factorizations")
    for f, word in shipped_decompositions():
        result = delta_subadditivity(f, word, radius=radius or DEFAULT_SEARCH_RADIUS, budget=budget)
        report.note(f"{f.name} = {' * '.join(s.name for s in word)}")
        report.check(str(result), result.holds)
    logger.info(f"Subadditivity demo finished: {'passed' if report.passed else 'failed'}")
    return report
