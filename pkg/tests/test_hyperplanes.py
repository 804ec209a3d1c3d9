# /project/tests/test_hyperplanes.py
import pytest

from cubing.errors import InvalidStep, SeparationFailure
from cubing.hyperplanes import (
    carrier,
    dual_neighbor,
    halfspaces,
    reflection,
    separates,
    wall_of_edge,
    wall_signatures,
    walls,
)


def test_wall_counts(edge, square, cube3, tripod):
    assert [len(w.edges) for w in walls(edge)] == [1]
    assert [len(w.edges) for w in walls(square)] == [2, 2]
    assert [len(w.edges) for w in walls(cube3)] == [4, 4, 4]
    assert [len(w.edges) for w in walls(tripod)] == [1, 1, 1]


def test_walls_are_numbered_by_least_edge(strip):
    found = [w.sorted_edges() for w in walls(strip)]
    assert found == [
        [("a", "b"), ("c", "d")],
        [("a", "c"), ("b", "d"), ("e", "f")],
        [("b", "e"), ("d", "f")],
    ]
    assert str(walls(strip)[0]) == "wall 0: a-b c-d"


def test_halfspaces_side0_holds_least_vertex(strip):
    W = walls(strip)
    middle = halfspaces(strip, W[1])
    assert middle.side0 == {"a", "b", "e"}
    assert middle.side1 == {"c", "d", "f"}
    right = halfspaces(strip, W[2])
    assert right.side0 == {"a", "b", "c", "d"}
    assert right.side1 == {"e", "f"}
    assert separates(right, "d", "f")
    assert not separates(right, "a", "d")


def test_cycle_walls_do_not_separate(four_cycle):
    W = walls(four_cycle)
    assert len(W) == 4
    with pytest.raises(SeparationFailure):
        halfspaces(four_cycle, W[0])


def test_wall_of_edge(square):
    assert wall_of_edge(square, "c", "d").id == 0
    with pytest.raises(InvalidStep):
        wall_of_edge(square, "a", "d")


def test_signatures_count_separating_walls(cube3):
    signatures = wall_signatures(cube3)
    assert signatures["000"] == 0
    assert bin(signatures["000"] ^ signatures["111"]).count("1") == 3


def test_carrier(strip):
    C = carrier(strip, walls(strip)[1])
    assert C.subcomplex.counts() == [6, 7, 2]
    assert C.dual_edge_at("b") == frozenset("bd")
    right = carrier(strip, walls(strip)[2])
    assert right.subcomplex.vertices == {"b", "d", "e", "f"}


def test_dual_neighbor(strip):
    W = walls(strip)[2]
    assert dual_neighbor(strip, W, "d") == "f"
    with pytest.raises(InvalidStep):
        dual_neighbor(strip, W, "a")


def test_reflection_swaps_dual_edges(strip):
    sigma = reflection(strip, walls(strip)[1])
    assert sigma.name == "sigma1"
    assert sigma.table == {"a": "c", "c": "a", "b": "d", "d": "b", "e": "f", "f": "e"}
    assert sigma.order() == 2
    assert sigma.fixed_vertices() == []
