# /project/cubing/classify.py
"""
Classification of automorphisms of cubings.

An automorphism without stable inversions either fixes a vertex (elliptic)
or translates a combinatorial geodesic line by its translation length
(hyperbolic). The functions here check stable inversions, minimize the
displacement, build a candidate axis window and certify the translation on
it. On implicit complexes every search is confined to a ball of a given
radius around the seed and the verdict may be Indeterminate.
"""
import logging
import time
from dataclasses import dataclass, field, replace
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from cubing.automorphism import Automorphism
from cubing.complex import DEFAULT_VERTEX_BUDGET, CubeComplex, ball_vertices
from cubing.errors import (
    CubingError,
    GeodesicFailure,
    PreconditionError,
    RegionError,
    RelocationFailure,
    SeparationFailure,
    WindowNotInvariant,
    WindowTooShort,
)
from cubing.hyperplanes import dual_neighbor, halfspaces, wall_index, walls
from cubing.metric import (
    crossing_sequence,
    distance,
    distance_within,
    edge_wall,
    geodesic_path,
)
from cubing.process import Processor
from cubing.subdivision import barycenter, induce_automorphism, subdivide

logger = logging.getLogger(__name__)

DEFAULT_AXIS_WINDOW = 5
DEFAULT_SEARCH_RADIUS = 2
DEFAULT_IMPLICIT_MAX_POWER = 4


@dataclass(frozen=True)
class AxisWindow:
    """
    Consecutive vertices of a geodesic, containing f^k applied to a geodesic
    segment from p to f(p) for k in [-N, N).

    `offset` is the list position of p and `period` is d(p, f(p)). `anchor`
    is set by relocation to the position closest to the relocation target.
    """
    vertices: Tuple[str, ...]
    period: int
    offset: int
    anchor: Optional[int] = None

    def at(self, i: int) -> str:
        """Vertex p_i, indexed from p = p_0."""
        return self.vertices[i + self.offset]

    @property
    def half_length(self) -> int:
        return self.offset // self.period

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class TranslationLength:
    delta: Optional[int]
    witness: Optional[str]
    exact: bool
    certificate: str = ""


@dataclass(frozen=True)
class InversionWitness:
    wall: Hashable
    edge: Tuple[str, str]


@dataclass(frozen=True)
class InversionReport:
    max_power: int
    power: Optional[int] = None
    wall: Optional[Hashable] = None
    edge: Optional[Tuple[str, str]] = None

    @property
    def clean(self) -> bool:
        return self.power is None


@dataclass(frozen=True)
class Elliptic:
    fixed_vertex: str


@dataclass(frozen=True)
class Hyperbolic:
    delta: int
    witness: str
    axis: AxisWindow


@dataclass(frozen=True)
class InversionFound:
    wall: Hashable
    power: int
    edge: Tuple[str, str]


@dataclass(frozen=True)
class Indeterminate:
    radius: Optional[int]
    best_displacement: Optional[int]
    reason: str


Verdict = Union[Elliptic, Hyperbolic, InversionFound, Indeterminate]


@dataclass
class Classification:
    name: str
    verdict: Verdict
    certificate: List[str] = field(default_factory=list)

    @property
    def kind(self) -> str:
        return {
            Elliptic: "elliptic",
            Hyperbolic: "hyperbolic",
            InversionFound: "inversion",
            Indeterminate: "indeterminate",
        }[type(self.verdict)]

    def summary(self) -> str:
        verdict = self.verdict
        if isinstance(verdict, Elliptic):
            return f"elliptic: fixes vertex {verdict.fixed_vertex}"
        if isinstance(verdict, Hyperbolic):
            return f"hyperbolic: translation length {verdict.delta}, witness {verdict.witness}"
        if isinstance(verdict, InversionFound):
            return f"inversion along wall {verdict.wall} at power {verdict.power}"
        return f"indeterminate: {verdict.reason}"


@dataclass(frozen=True)
class GeodesicAction:
    """How an automorphism acts on an invariant geodesic, p_i -> p_(shift + sign * i)."""
    kind: str
    sign: int
    shift: int
    vertex: Optional[str] = None
    edge: Optional[Tuple[str, str]] = None

    @property
    def delta(self) -> int:
        return abs(self.shift) if self.kind == "translation" else 0


@dataclass(frozen=True)
class PowerLengthReport:
    delta: int
    lengths: Dict[int, Optional[int]]
    displacements: Dict[int, Optional[int]]

    @property
    def holds(self) -> bool:
        return all(self.lengths[n] == n * self.delta for n in self.lengths)

    def uncertified(self) -> List[int]:
        return [n for n, length in self.lengths.items() if length is None]


def displacement(f: Automorphism, p: str, budget: int = DEFAULT_VERTEX_BUDGET) -> int:
    return distance(f.domain, p, f(p), budget=budget)


def _search_vertices(f: Automorphism, radius: Optional[int], budget: int) -> List[str]:
    if f.is_finite:
        return sorted(f.domain.vertices)
    if radius is None:
        radius = DEFAULT_SEARCH_RADIUS
    return sorted(ball_vertices(f.domain, f.domain.seed, radius, budget))


def _minimize(f: Automorphism, vertices: Sequence[str], budget: int) -> Tuple[Optional[int], Optional[str], int]:
    """Least displacement over `vertices`, its lexicographically least witness and the count of skipped vertices."""
    best, witness, skipped = None, None, 0
    for p in vertices:
        try:
            image = f(p)
        except RegionError:
            skipped += 1
            continue
        if image == p:
            return 0, p, skipped
        if best is None:
            d = distance(f.domain, p, image, budget=budget)
        else:
            d = distance_within(f.domain, p, image, best - 1, budget=budget)
        if d is not None and (best is None or d < best):
            best, witness = d, p
    return best, witness, skipped


def translation_length(f: Automorphism, radius: Optional[int] = None, window: int = DEFAULT_AXIS_WINDOW,
                       budget: int = DEFAULT_VERTEX_BUDGET) -> TranslationLength:
    """
    Least displacement of f.

    Args:
        f: Automorphism of a finite or implicit complex.
        radius: Search radius around the seed (implicit complexes only).
        window: Axis half-length used to certify an implicit result.
        budget: Vertex budget for searches.

    Returns:
        The minimum and a witness. Exact on finite complexes, and on implicit
        ones when the witness is fixed or its axis window certifies the value.
    """
    best, witness, skipped = _minimize(f, _search_vertices(f, radius, budget), budget)
    if best is None:
        return TranslationLength(None, None, False, "no vertex of the search region has an image")
    if f.is_finite:
        return TranslationLength(best, witness, True, "minimum over all vertices")
    if best == 0:
        return TranslationLength(0, witness, True, f"{witness} is fixed")
    try:
        axis = build_axis(f, witness, window, budget=budget)
        action = classify_on_invariant_geodesic(f, axis, budget=budget)
    except (CubingError, RegionError) as e:
        logger.debug(f"Translation length of {f.name} not certified: {e}")
        return TranslationLength(best, witness, False, f"minimum over radius {radius or DEFAULT_SEARCH_RADIUS} ball")
    if action.kind == "translation" and action.delta == best:
        return TranslationLength(best, witness, True, f"translates a geodesic window through {witness}")
    return TranslationLength(best, witness, False, f"minimum over radius {radius or DEFAULT_SEARCH_RADIUS} ball")


def _inverted_on_finite(f: Automorphism, scope: Optional[Iterable[int]]) -> Optional[InversionWitness]:
    X = f.domain
    index = wall_index(X)
    wanted = None if scope is None else set(scope)
    for wall in walls(X):
        if wanted is not None and wall.id not in wanted:
            continue
        u, v = wall.sorted_edges()[0]
        fu, fv = f(u), f(v)
        if index.get(frozenset((fu, fv))) != wall.id:
            continue
        try:
            pair = halfspaces(X, wall)
        except SeparationFailure as e:
            logger.warning(f"Skipping wall {wall.id} in inversion check: {e}")
            continue
        if pair.side_of(u) != pair.side_of(fu):
            return InversionWitness(wall.id, (u, v))
    return None


def _crosses(domain, wall: Hashable, u: str, v: str, budget: int) -> bool:
    path = geodesic_path(domain, u, v, budget=budget)
    return wall in crossing_sequence(domain, path).walls


def _inverted_on_implicit(f: Automorphism, radius: Optional[int], budget: int) -> Optional[InversionWitness]:
    domain = f.domain
    members = set(_search_vertices(f, radius, budget))
    for u in sorted(members):
        for v in domain.neighbors(u):
            if v <= u or v not in members:
                continue
            try:
                fu, fv = f(u), f(v)
            except RegionError:
                continue
            if domain.wall_fn is None:
                if fu == v and fv == u:
                    return InversionWitness((u, v), (u, v))
                continue
            label = domain.wall_fn(u, v)
            if domain.wall_fn(fu, fv) != label:
                continue
            if _crosses(domain, label, u, fu, budget):
                return InversionWitness(label, (u, v))
    return None


def find_inversion(f: Automorphism, scope: Optional[Iterable[int]] = None, radius: Optional[int] = None,
                   budget: int = DEFAULT_VERTEX_BUDGET) -> Optional[InversionWitness]:
    """A wall W with f(W) = W whose halfspaces f swaps, or None."""
    if f.is_finite:
        return _inverted_on_finite(f, scope)
    return _inverted_on_implicit(f, radius, budget)


def stable_inversion_check(f: Automorphism, max_power: Optional[int] = None, radius: Optional[int] = None,
                           budget: int = DEFAULT_VERTEX_BUDGET) -> InversionReport:
    """Look for an inversion of f^k for k = 1..max_power (the order of f on finite complexes)."""
    if max_power is None:
        max_power = f.order() if f.is_finite else DEFAULT_IMPLICIT_MAX_POWER
    for k in range(1, max_power + 1):
        witness = find_inversion(f.power(k), radius=radius, budget=budget)
        if witness is not None:
            logger.info(f"{f.name}^{k} inverts wall {witness.wall}")
            return InversionReport(max_power, k, witness.wall, witness.edge)
    return InversionReport(max_power)


def build_axis(f: Automorphism, p: str, N: int = DEFAULT_AXIS_WINDOW, budget: int = DEFAULT_VERTEX_BUDGET) -> AxisWindow:
    """
    Concatenate f^k of a geodesic segment from p to f(p) for k in [-N, N).

    Raises:
        PreconditionError: p is fixed by f.
        GeodesicFailure: the window crosses a wall twice; carries the number
            of concatenated segments at the first repetition.
    """
    if N < 1:
        raise PreconditionError("axis half-length must be at least 1")
    domain = f.domain
    image = f(p)
    d = distance(domain, p, image, budget=budget)
    if d == 0:
        raise PreconditionError(f"{p} is fixed by {f.name}")
    base = list(geodesic_path(domain, p, image, budget=budget).vertices[:-1])

    forward_blocks = []
    block = base
    for _ in range(N):
        forward_blocks.append(block)
        block = [f(x) for x in block]
    closing = block[0]
    backward_blocks = []
    block = base
    for _ in range(N):
        block = [f.backward(x) for x in block]
        backward_blocks.append(block)
    vertices = [x for block in reversed(backward_blocks) for x in block]
    vertices += [x for block in forward_blocks for x in block]
    vertices.append(closing)
    window = AxisWindow(tuple(vertices), d, N * d)

    if isinstance(domain, CubeComplex) or domain.wall_fn is not None:
        repeat = crossing_sequence(domain, vertices).first_repeat()
        if repeat is not None:
            _, position, wall = repeat
            raise GeodesicFailure(position // d + 1, wall)
    else:
        for n in range(1, 2 * N + 1):
            if distance(domain, vertices[0], vertices[n * d], budget=budget) != n * d:
                raise GeodesicFailure(n)
    logger.info(f"Built axis window of {len(vertices)} vertices for {f.name} through {p}, period {d}")
    return window


def classify_on_invariant_geodesic(f: Automorphism, window, budget: int = DEFAULT_VERTEX_BUDGET) -> GeodesicAction:
    """
    Determine how f acts on a geodesic window it leaves invariant.

    Images falling outside the window are ignored; at least two consecutive
    window vertices must map into the window.
    """
    vertices = list(window.vertices if isinstance(window, AxisWindow) else window)
    position = {vertex: i for i, vertex in enumerate(vertices)}
    images: Dict[int, Optional[int]] = {}
    for i, vertex in enumerate(vertices):
        try:
            images[i] = position.get(f(vertex))
        except RegionError:
            images[i] = None
    pair = next((i for i in range(len(vertices) - 1)
                 if images[i] is not None and images[i + 1] is not None), None)
    if pair is None:
        raise WindowTooShort(f"no two consecutive window vertices map into the window under {f.name}")
    sign = images[pair + 1] - images[pair]
    if sign not in (1, -1):
        raise WindowNotInvariant(f"{f.name} does not map window edge {pair} to a window edge")
    shift = images[pair] - sign * pair
    for i, j in images.items():
        expected = shift + sign * i
        if j is None:
            if 0 <= expected < len(vertices):
                raise WindowNotInvariant(f"{f.name} maps window vertex {vertices[i]} off the window")
        elif j != expected:
            raise WindowNotInvariant(f"{f.name} does not act on the window as an isometry of the line")
    if sign == -1:
        if shift % 2 == 0:
            middle = shift // 2
            vertex = vertices[middle] if 0 <= middle < len(vertices) else None
            return GeodesicAction("fixed-point", -1, shift, vertex=vertex)
        left = (shift - 1) // 2
        edge = None
        if 0 <= left and left + 1 < len(vertices):
            edge = (vertices[left], vertices[left + 1])
        return GeodesicAction("adjacent-swap", -1, shift, edge=edge)
    if shift == 0:
        return GeodesicAction("fixed-point", 1, 0, vertex=vertices[0])
    for i in range(len(vertices)):
        if 0 <= i + shift < len(vertices):
            moved = distance(f.domain, vertices[i], vertices[i + shift], budget=budget)
            if moved != abs(shift):
                raise WindowNotInvariant(f"window is not geodesic: d({vertices[i]}, f(.)) = {moved}")
            break
    return GeodesicAction("translation", 1, shift)


def _reflect(domain, wall: Hashable, vertex: str) -> str:
    if isinstance(domain, CubeComplex):
        return dual_neighbor(domain, walls(domain)[wall], vertex)
    found = [w for w in domain.neighbors(vertex) if domain.wall_fn(vertex, w) == wall]
    if len(found) != 1:
        raise RelocationFailure(f"vertex {vertex} has {len(found)} edges dual to wall {wall}")
    return found[0]


def _rebuild(f: Automorphism, period: List[str], start: int, length: int) -> List[str]:
    """Window whose positions start..start+d hold `period`, extended by powers of f."""
    d = len(period) - 1
    cache: Dict[int, Automorphism] = {}
    vertices = []
    for k in range(length):
        offset = (k - start) % d
        s = (k - start - offset) // d
        if s not in cache:
            cache[s] = f.power(s)
        vertices.append(cache[s](period[offset]))
    return vertices


def relocate_axis(f: Automorphism, axis: AxisWindow, p: str, budget: int = DEFAULT_VERTEX_BUDGET) -> AxisWindow:
    """
    Move a translated geodesic window toward p by surgery across walls.

    Each round takes the first closest window vertex q_n to p and the first
    q_m beyond it (m <= n + d) whose distance fails to grow by one per step,
    reflects q_n..q_(m-1) across the wall between q_(m-1) and q_m and
    rebuilds the window by f-translates. The returned window records as
    `anchor` the last closest position, from which distances to p increase
    by one per step.
    """
    domain = f.domain
    if not isinstance(domain, CubeComplex) and domain.wall_fn is None:
        raise PreconditionError(f"{domain.name} has no hyperplane labelling")
    d = axis.period
    vertices = list(axis.vertices)
    action = classify_on_invariant_geodesic(f, vertices, budget=budget)
    if action.kind != "translation" or action.shift != d:
        raise WindowNotInvariant(f"{f.name} does not translate the window by its period {d}")

    rounds = distance(domain, p, vertices[axis.offset], budget=budget) + len(vertices) + 1
    for _ in range(rounds):
        dists = [distance(domain, p, q, budget=budget) for q in vertices]
        D = min(dists)
        n = dists.index(D)
        if n + d >= len(vertices):
            raise RelocationFailure(f"closest window vertex {vertices[n]} is within one period of the window end")
        m = next((k for k in range(n + 1, n + d + 1) if dists[k] != D + (k - n)), None)
        if m is None:
            break
        wall = edge_wall(domain, vertices[m - 1], vertices[m])
        reflected = [_reflect(domain, wall, x) for x in vertices[n:m]]
        if reflected[-1] != vertices[m]:
            raise RelocationFailure(f"reflection across wall {wall} does not land on {vertices[m]}")
        period = [vertices[n]] + reflected + vertices[m + 1:n + d + 1]
        vertices = _rebuild(f, period, n, len(vertices))
        if not crossing_sequence(domain, vertices).is_duplicate_free():
            raise RelocationFailure("surgery produced a non-geodesic window")
        logger.debug(f"Relocation surgery across wall {wall} at positions {n}..{m}")
    else:
        raise RelocationFailure(f"no convergence after {rounds} rounds")

    dists = [distance(domain, p, q, budget=budget) for q in vertices]
    D = min(dists)
    anchor = max(i for i, value in enumerate(dists) if value == D)
    for k in range(anchor, len(vertices)):
        if dists[k] != D + (k - anchor):
            raise RelocationFailure(f"distance to {p} does not grow along the window after position {anchor}")
    return replace(axis, vertices=tuple(vertices), anchor=anchor)


def classify(f: Automorphism, max_power: Optional[int] = None, radius: Optional[int] = None,
             window: int = DEFAULT_AXIS_WINDOW, budget: int = DEFAULT_VERTEX_BUDGET) -> Classification:
    """
    Classify f as elliptic, hyperbolic, inverting, or indeterminate.

    Args:
        f: Automorphism of a finite or implicit complex.
        max_power: Highest power checked for inversions.
        radius: Search radius around the seed (implicit complexes only).
        window: Axis half-length for hyperbolic certificates.
        budget: Vertex budget for searches.

    Returns:
        A Classification carrying the verdict and its certificate lines.
    """
    start_time = time.time()
    certificate: List[str] = []
    scope = "all walls" if f.is_finite else f"edges within radius {radius or DEFAULT_SEARCH_RADIUS} of {f.domain.seed}"
    vertices = _search_vertices(f, radius, budget)
    fixed = None
    for p in vertices:
        try:
            if f(p) == p:
                fixed = p
                break
        except RegionError:
            continue

    report = stable_inversion_check(f, max_power=max_power, radius=radius, budget=budget)
    if not report.clean:
        certificate.append(f"{f.name}^{report.power} inverts wall {report.wall} (edge {report.edge[0]}-{report.edge[1]})")
        if fixed is not None:
            certificate.append(f"{f.name} also fixes vertex {fixed}")
        result = Classification(f.name, InversionFound(report.wall, report.power, report.edge), certificate)
        logger.info(f"Classified {f.name} as inversion in {time.time() - start_time:.2f} seconds")
        return result
    certificate.append(f"no inversion of {f.name}^k for k = 1..{report.max_power} ({scope})")

    if fixed is not None:
        certificate.append(f"{f.name}({fixed}) = {fixed}")
        logger.info(f"Classified {f.name} as elliptic in {time.time() - start_time:.2f} seconds")
        return Classification(f.name, Elliptic(fixed), certificate)

    best, witness, skipped = _minimize(f, vertices, budget)
    if skipped:
        certificate.append(f"{skipped} vertices skipped: image outside the declared region")
    if best is None:
        return Classification(f.name, Indeterminate(radius, None, "no vertex of the search region has an image"),
                              certificate)
    certificate.append(f"least displacement {best} at {witness}")
    try:
        axis = build_axis(f, witness, window, budget=budget)
        action = classify_on_invariant_geodesic(f, axis, budget=budget)
    except (CubingError, RegionError) as e:
        certificate.append(f"no axis certificate: {e}")
        verdict = Indeterminate(radius, best, str(e))
        logger.info(f"Classified {f.name} as indeterminate in {time.time() - start_time:.2f} seconds")
        return Classification(f.name, verdict, certificate)
    if action.kind != "translation":
        certificate.append(f"window action is {action.kind}")
        return Classification(f.name, Indeterminate(radius, best, f"window action is {action.kind}"), certificate)
    certificate.append(f"geodesic window of {len(axis)} vertices translated by {action.shift}")
    logger.info(f"Classified {f.name} as hyperbolic in {time.time() - start_time:.2f} seconds")
    return Classification(f.name, Hyperbolic(action.delta, witness, axis), certificate)


def classify_all(automorphisms: Sequence[Automorphism], processor: Optional[Processor] = None,
                 **params) -> List[Classification]:
    """Classify a batch; verdicts are listed in input order."""
    processor = processor or Processor()
    return processor.run_tasks(lambda g: classify(g, **params), list(automorphisms), label="classifications")


def power_length_check(f: Automorphism, n_max: int, classification: Optional[Classification] = None,
                       budget: int = DEFAULT_VERTEX_BUDGET, **params) -> PowerLengthReport:
    """
    Check that f^n translates the axis of f by n times its translation length.

    The lengths are read off the axis window, which f^n leaves invariant.
    A power whose action cannot be read off the window is left None.
    """
    if classification is None:
        classification = classify(f, budget=budget, **params)
    verdict = classification.verdict
    if not isinstance(verdict, Hyperbolic):
        raise PreconditionError(f"{f.name} is {classification.kind}, not hyperbolic")
    lengths: Dict[int, Optional[int]] = {}
    displacements: Dict[int, Optional[int]] = {}
    for n in range(1, n_max + 1):
        g = f.power(n)
        try:
            action = classify_on_invariant_geodesic(g, verdict.axis, budget=budget)
            lengths[n] = action.delta if action.kind == "translation" else None
        except (CubingError, RegionError) as e:
            logger.info(f"Length of {f.name}^{n} not certified: {e}")
            lengths[n] = None
        try:
            displacements[n] = displacement(g, verdict.witness, budget=budget)
        except RegionError:
            displacements[n] = None
    return PowerLengthReport(verdict.delta, lengths, displacements)


@dataclass(frozen=True)
class InversionFixedSet:
    wall: int
    fixed: Tuple[str, ...]
    dual: bool


def inversion_fixed_points_dual(f: Automorphism) -> List[InversionFixedSet]:
    """
    For every wall W inverted by f, the fixed vertices of the induced map on
    the subdivision, and whether each is the barycenter of a cube dual to W.
    """
    X = f.domain
    if not isinstance(X, CubeComplex):
        raise PreconditionError("needs an automorphism of a finite complex")
    S = subdivide(X)
    induced = induce_automorphism(S, f)
    fixed = induced.fixed_vertices()
    result = []
    inverted = []
    for wall in walls(X):
        if find_inversion(f, scope=[wall.id]) is not None:
            inverted.append(wall)
    for wall in inverted:
        dual_keys = {barycenter(cube.key) for cube in X.cubes.values()
                     if any(edge in wall.edges for edge in cube.edges())}
        result.append(InversionFixedSet(wall.id, tuple(fixed), all(token in dual_keys for token in fixed)))
    return result
