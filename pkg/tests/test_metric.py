# /project/tests/test_metric.py
import random

import pytest

import builders
from builders import complex_from, grid, path
from cubing.complex import CubeComplex, Cube, ImplicitComplex
from cubing.errors import (
    BudgetExceeded,
    DisconnectedPair,
    DisconnectedSet,
    InvalidStep,
    PreconditionError,
)
from cubing.metric import (
    CombinatorialPath,
    crossing_sequence,
    distance,
    distance_within,
    edge_wall,
    geodesic_path,
    interval,
    is_convex,
    is_geodesic,
    separating_walls,
    verify_wall_distance,
)
from cubing.process import Processor
from demos.line import standard_line


def bare_line():
    """The line without hyperplane labels or a distance oracle."""
    def neighbors(v):
        return [str(int(v) - 1), str(int(v) + 1)]

    def cubes(v, members):
        yield (v,)
        for w in neighbors(v):
            if w in members:
                yield (v, w)

    return ImplicitComplex(seed="0", neighbor_fn=neighbors, cube_fn=cubes, name="bare")


def test_distance_in_cube(cube3):
    assert distance(cube3, "000", "111") == 3
    assert distance(cube3, "000", "111", cross_check=True) == 3
    assert separating_walls(cube3, "000", "111") == [0, 1, 2]


def test_distance_disconnected():
    X = CubeComplex([Cube(("a", "b"))], vertices=["z"])
    with pytest.raises(DisconnectedPair):
        distance(X, "a", "z")


def test_interval(square):
    assert interval(square, "a", "d") == {"a", "b", "c", "d"}
    assert interval(path(3), "a", "c") == {"a", "b", "c"}


def test_convexity(strip, square):
    assert is_convex(strip, {"a", "b", "c", "d"})
    assert is_convex(grid(2), {"00", "10"})
    assert not is_convex(square, {"a", "b", "d"})
    assert is_convex(square, set())
    with pytest.raises(DisconnectedSet):
        is_convex(square, {"a", "d"})


def test_verify_wall_distance(cube3):
    assert verify_wall_distance(cube3) == 28
    assert verify_wall_distance(cube3, Processor(2)) == 28


def test_geodesic_paths(square):
    assert is_geodesic(square, ["a", "b", "d"])
    assert not is_geodesic(square, ["a", "b", "a"])
    assert is_geodesic(square, ["a", "a", "b"])
    assert is_geodesic(square, ["c"])
    assert is_geodesic(grid(2), ["00", "10", "11", "21"], cross_check=True)


def test_crossing_sequence(square):
    sequence = crossing_sequence(square, ["a", "b", "d", "c", "a"])
    assert sequence.walls == (0, 1, 0, 1)
    assert sequence.first_repeat() == (0, 2, 0)
    assert not sequence.is_duplicate_free()


def test_crossing_sequence_rejects_non_edges(square):
    with pytest.raises(InvalidStep):
        crossing_sequence(square, ["a", "d"])
    with pytest.raises(InvalidStep):
        crossing_sequence(square, [])


def test_combinatorial_path():
    p = CombinatorialPath(("a", "a", "b", "b", "c"))
    assert not p.stutter_free
    q = p.normalized()
    assert q.vertices == ("a", "b", "c")
    assert (q.start, q.end, q.length) == ("a", "c", 2)
    assert str(q) == "a b c"


def test_implicit_line_with_oracles():
    line = standard_line()
    assert distance(line, "-3", "4") == 7
    assert geodesic_path(line, "0", "3").vertices == ("0", "1", "2", "3")
    assert edge_wall(line, "2", "1") == 1
    assert is_geodesic(line, ["0", "1", "2"])
    assert not is_geodesic(line, ["0", "1", "0"])
    with pytest.raises(InvalidStep):
        edge_wall(line, "0", "2")


def test_implicit_line_by_search():
    line = bare_line()
    assert distance(line, "0", "5") == 5
    assert distance_within(line, "0", "5", limit=3) is None
    assert distance_within(line, "0", "5", limit=5) == 5
    assert geodesic_path(line, "2", "-1").vertices == ("2", "1", "0", "-1")
    assert is_geodesic(line, ["0", "1", "2"])
    assert not is_geodesic(line, ["0", "1", "0"])
    with pytest.raises(PreconditionError):
        edge_wall(line, "0", "1")
    with pytest.raises(BudgetExceeded):
        distance(line, "0", "100", budget=10)


def test_convexity_on_a_disconnected_complex():
    X = complex_from("a b", "c d")
    assert is_convex(X, {"a", "b"})
    assert is_convex(X, {"c"})
    Y = complex_from("a b c d", "x y")
    assert not is_convex(Y, {"a", "b", "d"})
    assert is_convex(Y, {"x", "y"})


def test_walk_length_and_separating_walls_share_parity():
    rng = random.Random(3)
    complexes = [builders.square(), builders.strip(), builders.grid(3), builders.cube3(), builders.tripod()]
    for X in complexes:
        for _ in range(40):
            walk = [rng.choice(sorted(X.vertices))]
            for _ in range(rng.randint(0, 9)):
                walk.append(rng.choice(X.neighbors(walk[-1])))
            walls_between = separating_walls(X, walk[0], walk[-1])
            assert (len(walk) - 1) % 2 == len(walls_between) % 2
