# /project/demos/l2.py
"""
Finitely supported integer sequences, with an edge between u and u +- e_k.

Only coordinates k in the window [-K, K] are used, so every vertex has
finite degree. A vertex token lists its nonzero coordinates as "k:value"
pairs sorted by k, or is "0" for the zero sequence.

The map f(u) = e_0 + shift(u), shift moving coordinate k to k + 1, has no
fixed vertex and translates the staircase 0, e_0, e_0 + e_1, ... by one.
"""
import logging
from itertools import combinations
from typing import Dict, Mapping, Optional

from cubing.automorphism import Automorphism
from cubing.classify import (
    Hyperbolic,
    build_axis,
    classify,
    displacement,
    power_length_check,
)
from cubing.complex import DEFAULT_VERTEX_BUDGET, ImplicitComplex, ball, ball_vertices, validate
from cubing.errors import PreconditionError, RegionError
from cubing.metric import crossing_sequence, distance
from demos import DemoReport

logger = logging.getLogger(__name__)

ZERO = "0"


def parse_vertex(token: str) -> Dict[int, int]:
    if token == ZERO:
        return {}
    coords = {}
    for item in token.split(","):
        index, value = item.split(":")
        coords[int(index)] = int(value)
    return coords


def format_vertex(coords: Mapping[int, int]) -> str:
    items = sorted((k, v) for k, v in coords.items() if v != 0)
    if not items:
        return ZERO
    return ",".join(f"{k}:{v}" for k, v in items)


def basis_vector(k: int) -> str:
    return format_vertex({k: 1})


def l2_complex(K: int) -> ImplicitComplex:
    window = range(-K, K + 1)

    def step(coords: Dict[int, int], k: int, amount: int) -> str:
        moved = dict(coords)
        moved[k] = moved.get(k, 0) + amount
        return format_vertex(moved)

    def neighbors(v: str):
        coords = parse_vertex(v)
        return [step(coords, k, s) for k in window for s in (1, -1)]

    def cubes(v: str, members):
        """Cubes having v as least corner in every coordinate, one per set of usable directions."""
        coords = parse_vertex(v)
        directions = [k for k in window if step(coords, k, 1) in members]
        yield (v,)
        size = 1
        found = True
        while found:
            found = False
            for axes in combinations(directions, size):
                corners = []
                for index in range(1 << size):
                    moved = dict(coords)
                    for t, k in enumerate(axes):
                        if index >> t & 1:
                            moved[k] = moved.get(k, 0) + 1
                    corners.append(format_vertex(moved))
                if all(c in members for c in corners):
                    found = True
                    yield tuple(corners)
            size += 1

    def wall(u: str, v: str):
        a, b = parse_vertex(u), parse_vertex(v)
        k = next(k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0))
        return k, min(a.get(k, 0), b.get(k, 0))

    def l1(u: str, v: str) -> int:
        a, b = parse_vertex(u), parse_vertex(v)
        return sum(abs(a.get(k, 0) - b.get(k, 0)) for k in set(a) | set(b))

    return ImplicitComplex(seed=ZERO, neighbor_fn=neighbors, cube_fn=cubes, name=f"l2[-{K},{K}]",
                           wall_fn=wall, distance_fn=l1)


def _check_support(coords: Mapping[int, int], K: int, token: str):
    if any(abs(k) > K for k, v in coords.items() if v):
        raise RegionError(f"{token} leaves the coordinate window [-{K}, {K}]")


def shift_map(K: int, complex_: ImplicitComplex = None) -> Automorphism:
    """f(u) = e_0 + shift(u), defined where the image stays in the window."""
    domain = complex_ or l2_complex(K)

    def forward(v: str) -> str:
        coords = parse_vertex(v)
        moved = {k + 1: value for k, value in coords.items()}
        moved[0] = moved.get(0, 0) + 1
        _check_support(moved, K, v)
        return format_vertex(moved)

    def backward(v: str) -> str:
        coords = parse_vertex(v)
        coords[0] = coords.get(0, 0) - 1
        moved = {k - 1: value for k, value in coords.items()}
        _check_support(moved, K, v)
        return format_vertex(moved)

    return Automorphism.from_functions(domain, forward, backward, name="f")


def lattice_translation(K: int, vector: Mapping[int, int], complex_: ImplicitComplex = None,
                        name: str = "t") -> Automorphism:
    """u -> u + vector; translation length is the l1 norm of the vector."""
    domain = complex_ or l2_complex(K)

    def move(v: str, sign: int) -> str:
        coords = parse_vertex(v)
        for k, amount in vector.items():
            coords[k] = coords.get(k, 0) + sign * amount
        _check_support(coords, K, v)
        return format_vertex(coords)

    return Automorphism.from_functions(domain, lambda v: move(v, 1), lambda v: move(v, -1), name=name)


def staircase(n: int) -> str:
    """f^n(0): e_0 + ... + e_(n-1) for n > 0, -(e_n + ... + e_-1) for n < 0."""
    if n >= 0:
        return format_vertex({k: 1 for k in range(n)})
    return format_vertex({k: -1 for k in range(n, 0)})


def demo_l2(K: int = 6, N: int = 5, radius: int = 2, validation_radius: int = 1,
            max_power: Optional[int] = None, budget: int = DEFAULT_VERTEX_BUDGET) -> DemoReport:
    if K < N or N < 1:
        raise PreconditionError(f"coordinate window {K} must be at least the axis half-length {N}")
    report = DemoReport(f"l2 demo: f(u) = e0 + shift(u) on coordinates [-{K}, {K}]")
    X = l2_complex(K)
    f = shift_map(K, X)

    window = max(1, min(N, K - radius))
    classification = classify(f, max_power=max_power, radius=radius, window=window, budget=budget)
    verdict = classification.verdict
    report.note(classification.summary())
    for line in classification.certificate:
        report.note(f"  {line}")
    hyperbolic = isinstance(verdict, Hyperbolic)
    report.check("f is hyperbolic", hyperbolic)
    report.check("translation length is 1", hyperbolic and verdict.delta == 1)
    report.check("classified axis passes through 0", hyperbolic and ZERO in verdict.axis.vertices)

    members = ball_vertices(X, ZERO, radius, budget)
    moved = []
    for v in members:
        try:
            moved.append(displacement(f, v, budget=budget))
        except RegionError:
            continue
    report.check(f"no fixed vertex within radius {radius}", all(d >= 1 for d in moved))
    report.check("displacement of 0 is 1", displacement(f, ZERO) == 1)
    report.note(f"displacement(f, e1) = {displacement(f, basis_vector(1))}")

    axis = build_axis(f, ZERO, N, budget=budget)
    report.check(f"axis window through 0 with N = {N} crosses no wall twice",
                 crossing_sequence(X, axis.vertices).is_duplicate_free())
    report.check(f"d(0, f^n(0)) = n for n <= {N}",
                 all(distance(X, ZERO, f.power(n)(ZERO)) == n for n in range(1, N + 1)))
    report.check("f^n(0) is the staircase e0 + ... + e(n-1)",
                 all(f.power(n)(ZERO) == staircase(n) for n in range(-N, N + 1)))

    if hyperbolic:
        powers = power_length_check(f, min(4, 2 * window - 1), classification=classification, budget=budget)
        report.check("translation length of f^n is n", powers.holds)

    sample = ball(X, ZERO, validation_radius, budget)
    report.check(f"ball of radius {validation_radius} is a cubing", validate(sample).accepted)

    report.note("quoted: the CAT(0) translation length of f is 0, so f is parabolic for the CAT(0) metric")
    report.note("quoted: f has no fixed points, so its combinatorial translation length is positive")
    logger.info(f"l2 demo finished: {'passed' if report.passed else 'failed'}")
    return report
