# /project/demos/bass_serre.py
"""
The Bass-Serre tree of BS(m, n) = <a, b | b a^m b^-1 = a^n>.

Vertices are the cosets g<a>, written in normal form as a sequence of
steps (r, e): a^r followed by b (e = 1, 0 <= r < n) or b^-1 (e = -1,
0 <= r < m), with no step (0, -e) directly after a step with sign e. The
token of a coset spells its steps, e.g. "aab" or "B"; the base coset is
"1". Every vertex has n + m neighbours.
"""
import logging
from typing import List, Optional, Tuple

from cubing.automorphism import Automorphism
from cubing.classify import Elliptic, Hyperbolic, classify, power_length_check
from cubing.complex import DEFAULT_VERTEX_BUDGET, ImplicitComplex, ball, ball_vertices, validate
from cubing.errors import ParseError, PreconditionError
from demos import DemoReport

logger = logging.getLogger(__name__)

BASE = "1"

Step = Tuple[int, int]


def parse_word(token: str) -> List[Step]:
    if token == BASE:
        return []
    steps = []
    count = 0
    for letter in token:
        if letter == "a":
            count += 1
        elif letter in "bB":
            steps.append((count, 1 if letter == "b" else -1))
            count = 0
        else:
            raise ParseError(f"bad letter {letter!r} in coset {token!r}")
    if count:
        raise ParseError(f"coset {token!r} ends in a power of a")
    return steps


def format_word(steps: List[Step]) -> str:
    if not steps:
        return BASE
    return "".join("a" * r + ("b" if e > 0 else "B") for r, e in steps)


class BassSerreTree:
    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise PreconditionError("m and n must be positive")
        self.m = m
        self.n = n
        self.logger = logging.getLogger(__name__)

    def _modulus(self, sign: int) -> int:
        return self.n if sign > 0 else self.m

    def append(self, steps: List[Step], step: Step) -> List[Step]:
        if steps and step[0] == 0 and steps[-1][1] == -step[1]:
            return steps[:-1]
        return steps + [step]

    def neighbors(self, token: str) -> List[str]:
        steps = parse_word(token)
        result = [format_word(self.append(steps, (r, 1))) for r in range(self.n)]
        result += [format_word(self.append(steps, (r, -1))) for r in range(self.m)]
        return result

    def multiply_a(self, k: int, steps: List[Step]) -> List[Step]:
        """Normal form of a^k g for the coset with normal form `steps`."""
        result = []
        for index, (r, sign) in enumerate(steps):
            if k == 0:
                return result + steps[index:]
            carry, r = divmod(r + k, self._modulus(sign))
            result.append((r, sign))
            # a^(q n) b = b a^(q m) and a^(q m) b^-1 = b^-1 a^(q n)
            k = carry * (self.m if sign > 0 else self.n)
        return result

    def multiply_b(self, sign: int, steps: List[Step]) -> List[Step]:
        """Normal form of b^sign g."""
        if steps and steps[0] == (0, -sign):
            return steps[1:]
        return [(0, sign)] + steps

    def distance(self, u: str, v: str) -> int:
        first, second = parse_word(u), parse_word(v)
        common = 0
        for x, y in zip(first, second):
            if x != y:
                break
            common += 1
        return len(first) + len(second) - 2 * common

    def complex(self) -> ImplicitComplex:
        def cubes(v: str, members):
            yield (v,)
            for w in self.neighbors(v):
                if w in members:
                    yield (v, w)

        def wall(u: str, v: str):
            return tuple(sorted((u, v)))

        return ImplicitComplex(seed=BASE, neighbor_fn=self.neighbors, cube_fn=cubes,
                               name=f"T({self.m},{self.n})", wall_fn=wall, distance_fn=self.distance)

    def generators(self, domain: ImplicitComplex = None) -> Tuple[Automorphism, Automorphism]:
        domain = domain or self.complex()
        a = Automorphism.from_functions(
            domain,
            lambda v: format_word(self.multiply_a(1, parse_word(v))),
            lambda v: format_word(self.multiply_a(-1, parse_word(v))),
            name="a",
        )
        b = Automorphism.from_functions(
            domain,
            lambda v: format_word(self.multiply_b(1, parse_word(v))),
            lambda v: format_word(self.multiply_b(-1, parse_word(v))),
            name="b",
        )
        return a, b


def relation_residual(tree: BassSerreTree, radius: int, budget: int = DEFAULT_VERTEX_BUDGET) -> Tuple[int, int]:
    """Vertices of the ball where b a^m b^-1 and a^n disagree, and the number tested."""
    domain = tree.complex()
    a, b = tree.generators(domain)
    left = b.compose(a.power(tree.m)).compose(b.inverse())
    right = a.power(tree.n)
    members = ball_vertices(domain, BASE, radius, budget)
    tested = residual = 0
    for v in sorted(members):
        x, y = left(v), right(v)
        if x not in members or y not in members:
            continue
        tested += 1
        if x != y:
            residual += 1
    return residual, tested


def demo_bs(m: int = 1, n: int = 2, R: int = 4, validation_radius: int = 2,
            max_power: Optional[int] = None, budget: int = DEFAULT_VERTEX_BUDGET) -> DemoReport:
    if m < 1 or n < 1:
        raise PreconditionError("m and n must be positive")
    if R < 3:
        raise PreconditionError(f"radius {R} is too small to certify the axis of b; need at least 3")
    report = DemoReport(f"Bass-Serre tree of BS({m},{n}), ball of radius {R}")
    tree = BassSerreTree(m, n)
    domain = tree.complex()
    a, b = tree.generators(domain)
    report.note(f"every vertex has degree {m + n}; ball has {len(ball_vertices(domain, BASE, R, budget))} vertices")

    window = R - 1
    for g, expected in ((a, Elliptic), (b, Hyperbolic)):
        classification = classify(g, max_power=max_power, radius=R, window=window, budget=budget)
        report.note(classification.summary())
        for line in classification.certificate:
            report.note(f"  {line}")
        report.check(f"{g.name} is {expected.__name__.lower()}", isinstance(classification.verdict, expected))
        if g is a:
            report.check("a fixes the base vertex", a(BASE) == BASE)
        elif isinstance(classification.verdict, Hyperbolic):
            report.check("translation length of b is 1", classification.verdict.delta == 1)
            powers = power_length_check(b, 4, classification=classification, budget=budget)
            report.check("translation length of b^n is n for n <= 4", powers.holds)

    residual, tested = relation_residual(tree, R, budget)
    report.note(f"relation b a^{m} b^-1 = a^{n} tested on {tested} vertices, residual {residual}")
    report.check("relation holds on the ball", residual == 0 and tested > 0)

    sample = ball(domain, BASE, min(R, validation_radius), budget)
    report.check(f"ball of radius {min(R, validation_radius)} is a cubing", validate(sample).accepted)
    report.note("quoted: the action on the tree is not proper since a fixes a vertex")
    logger.info(f"Bass-Serre demo finished: {'passed' if report.passed else 'failed'}")
    return report
