# /project/tests/test_wallspace.py
import itertools

import pytest

from cubing.classify import Elliptic, classify
from cubing.complex import validate
from cubing.errors import BudgetExceeded, WallspaceError
from cubing.metric import distance
from cubing.subdivision import induce_automorphism, subdivide
from cubing.wallspace import (
    Orientation,
    Partition,
    Wallspace,
    cubulate,
    extend_automorphism,
    is_consistent,
    principal_orientation,
    wall_distance,
)


def space(points, *walls):
    parts = []
    for wall in walls:
        first, second = wall.split("|")
        parts.append(Partition((frozenset(first.split()), frozenset(second.split()))))
    return Wallspace(tuple(points.split()), tuple(parts))


def test_partition():
    wall = Partition((frozenset("a"), frozenset("bc")))
    assert wall.block_of("c") == 1
    assert wall.separates("a", "b")
    assert not wall.separates("b", "c")
    assert str(wall) == "wall a | b c"


@pytest.mark.parametrize("walls", [
    ["| a b"],
    ["a b | b"],
    ["a | z"],
    ["a |"],
])
def test_malformed_walls(walls):
    with pytest.raises(WallspaceError):
        space("a b", *walls)


def test_repeated_point():
    with pytest.raises(WallspaceError):
        Wallspace(("a", "a"), ())


def test_orientation_tokens():
    assert Orientation.from_token("101").choice == (1, 0, 1)
    assert Orientation.from_token("-").choice == ()
    assert Orientation(()).token == "-"
    assert Orientation((0, 1)).flip(0, 1).token == "10"


def test_single_wall_gives_an_edge():
    result = cubulate(space("p q", "p | q"))
    assert result.complex.counts() == [2, 1]
    assert result.embedding == {"p": "0", "q": "1"}


def test_nested_walls_give_a_path():
    W = space("a b c", "a | b c", "a b | c")
    assert principal_orientation(W, "b").token == "10"
    assert not is_consistent(W, Orientation((0, 1)))
    result = cubulate(W)
    assert result.complex.vertices == {"00", "10", "11"}
    assert distance(result.complex, result.embedding["a"], result.embedding["c"]) == 2


def test_crossing_walls_give_a_square():
    W = space("a b c d", "a b | c d", "a c | b d")
    result = cubulate(W)
    assert result.complex.counts() == [4, 4, 1]
    assert validate(result.complex).accepted


def test_duplicate_walls_double_distances():
    W = space("a b", "a | b", "a | b")
    assert wall_distance(W, "a", "b") == 2
    result = cubulate(W)
    assert result.complex.vertices == {"00", "10", "11"}
    assert result.embedding == {"a": "00", "b": "11"}
    assert distance(result.complex, "00", "11") == 2


def test_complemented_duplicate_is_still_a_duplicate():
    W = space("a b", "a | b", "b | a")
    result = cubulate(W)
    assert result.embedding == {"a": "01", "b": "10"}
    assert result.complex.vertices == {"01", "11", "10"}
    assert distance(result.complex, "01", "10") == 2


def test_no_walls_gives_a_point():
    result = cubulate(space("a b"))
    assert result.complex.vertices == {"-"}
    assert wall_distance(result.space, "a", "b") == 0


def test_wall_limit():
    W = space("a b", "a | b", "a | b", "a | b")
    with pytest.raises(BudgetExceeded):
        cubulate(W, max_walls=2)


def test_extension_commutes_with_embedding():
    W = space("a b c d", "a b | c d", "a c | b d")
    g = {"a": "b", "b": "a", "c": "d", "d": "c"}
    result = cubulate(W)
    f = extend_automorphism(W, g, result, name="g")
    for point in W.points:
        assert f(result.embedding[point]) == result.embedding[g[point]]


def test_extension_of_duplicate_walls():
    W = space("a b", "a | b", "a | b")
    result = cubulate(W)
    f = extend_automorphism(W, {"a": "b", "b": "a"}, result)
    assert f("00") == "11"
    assert f("10") == "10"


def test_extension_needs_a_wall_preserving_map():
    W = space("a b c", "a | b c")
    with pytest.raises(WallspaceError):
        extend_automorphism(W, {"a": "b", "b": "a", "c": "c"})
    with pytest.raises(WallspaceError):
        extend_automorphism(W, {"a": "a", "b": "b"})


def wall_preserving_maps(W, result):
    maps = []
    for image in itertools.permutations(W.points):
        g = dict(zip(W.points, image))
        try:
            maps.append((g, extend_automorphism(W, g, result, name="".join(image))))
        except WallspaceError:
            continue
    return maps


SYMMETRIC_SPACES = [
    (("a b c d", "a b | c d", "a c | b d"), 8),
    (("a b c", "a | b c", "b | a c", "c | a b"), 6),
]


@pytest.mark.parametrize("args, size", SYMMETRIC_SPACES)
def test_extension_respects_composition(args, size):
    W = space(*args)
    result = cubulate(W)
    maps = wall_preserving_maps(W, result)
    assert len(maps) == size
    for g, f in maps:
        for h, k in maps:
            gh = {p: g[h[p]] for p in W.points}
            assert extend_automorphism(W, gh, result).table == f.compose(k).table


@pytest.mark.parametrize("args, size", SYMMETRIC_SPACES)
def test_extension_is_injective(args, size):
    W = space(*args)
    maps = wall_preserving_maps(W, cubulate(W))
    assert len({frozenset(f.table.items()) for _, f in maps}) == size


@pytest.mark.parametrize("args, size", SYMMETRIC_SPACES)
def test_bounded_point_orbits_give_elliptic_extensions(args, size):
    W = space(*args)
    result = cubulate(W)
    S = subdivide(result.complex)
    for _, f in wall_preserving_maps(W, result):
        verdict = classify(induce_automorphism(S, f)).verdict
        assert isinstance(verdict, Elliptic), f.name
