# /project/tests/test_complex.py
import pytest

import builders
from builders import complex_from, flag_violation, grid
from cubing.complex import (
    Cube,
    CubeComplex,
    ball,
    ball_vertices,
    link,
    medians,
    validate,
)
from cubing.errors import BudgetExceeded, CubeShapeError, PreconditionError, UnknownVertex
from demos.bass_serre import BassSerreTree
from demos.l2 import l2_complex
from demos.line import standard_line


def test_cube_rejects_bad_corner_counts():
    with pytest.raises(CubeShapeError):
        Cube(("a", "b", "c"))
    with pytest.raises(CubeShapeError):
        Cube(("a", "a"))


def test_cube_faces():
    square = Cube(("a", "b", "c", "d"))
    assert square.dim == 2
    assert len(square.facets()) == 4
    assert len(list(square.faces())) == 9
    assert square.edges() == {frozenset("ab"), frozenset("cd"), frozenset("ac"), frozenset("bd")}
    assert square.edges_at("a") == {frozenset("ab"), frozenset("ac")}


def test_canonical_puts_least_corner_first():
    assert Cube(("d", "c", "b", "a")).canonical().corners == ("a", "b", "c", "d")
    assert Cube(("b", "a")).canonical().corners == ("a", "b")


def test_counts(square, cube3):
    assert square.counts() == [4, 4, 1]
    assert cube3.counts() == [8, 12, 6, 1]
    assert cube3.dimension == 3


def test_adjacency(square):
    assert square.neighbors("a") == ["b", "c"]
    assert square.has_edge("a", "b")
    assert not square.has_edge("a", "d")
    assert [c.corners for c in square.maximal_cubes()] == [("a", "b", "c", "d")]


def test_unknown_vertex(square):
    with pytest.raises(UnknownVertex):
        square.neighbors("z")


def test_subcomplex(cube3):
    face = cube3.subcomplex(["000", "100", "010", "110"])
    assert face.counts() == [4, 4, 1]


def test_conflicting_records_are_a_compatibility_defect():
    X = CubeComplex([Cube(("a", "b", "c", "d")), Cube(("a", "b", "d", "c"))])
    assert X.defects
    report = validate(X)
    assert not report.compatibility_ok
    assert not report.accepted


@pytest.mark.parametrize("name", ["edge", "square", "cube3", "tripod", "strip", "grid2"])
def test_cubings_validate(name, request):
    report = validate(request.getfixturevalue(name))
    assert report.accepted, report.failures


def test_four_cycle_without_square_fails_median(four_cycle):
    report = validate(four_cycle)
    assert report.links_flag_ok
    assert not report.median_ok
    assert report.failures == ["median: 4-cycle a-b-c-d bounds no square"]


def test_missing_three_cube_fails_flag_condition():
    report = validate(flag_violation())
    assert not report.links_flag_ok
    assert any(failure.startswith("flag: link of 000") for failure in report.failures)


def test_disconnected_complex_fails():
    X = CubeComplex([Cube(("a", "b"))], vertices=["z"])
    report = validate(X)
    assert not report.median_ok
    assert "2 components" in report.failures[0]


def test_link_of_cube_corner_is_a_full_simplex(cube3):
    L = link(cube3, "000")
    assert len(L.vertices) == 3
    assert L.dimension == 2
    assert L.is_flag()


def test_link_with_empty_triangle():
    L = link(flag_violation(), "000")
    assert len(L.empty_simplices()) == 1
    assert not L.is_flag()


def test_median_is_majority_vote(cube3):
    assert medians(cube3, "000", "110", "011") == ["010"]


def test_ball_in_finite_complex():
    X = grid(2)
    assert ball_vertices(X, "00", 1) == {"00": 0, "10": 1, "01": 1}
    assert ball(X, "11", 1).counts() == [5, 4]


def test_ball_in_implicit_line():
    line = standard_line()
    depth = ball_vertices(line, "0", 2)
    assert depth == {"0": 0, "-1": 1, "1": 1, "-2": 2, "2": 2}
    B = ball(line, "0", 2)
    assert B.counts() == [5, 4]
    assert validate(B).accepted


def test_ball_budget():
    with pytest.raises(BudgetExceeded):
        ball_vertices(standard_line(), "0", 10, budget=5)


def test_ball_negative_radius(square):
    with pytest.raises(PreconditionError, match="non-negative"):
        ball_vertices(square, "a", -1)


def test_equality_ignores_record_order():
    assert complex_from("a b", "b c") == complex_from("c b", "b a")


@pytest.mark.parametrize("X", [builders.cube3(), builders.grid(2), builders.strip(), builders.tripod()],
                         ids=["cube3", "grid2", "strip", "tripod"])
def test_link_simplices_are_the_cubes_at_a_vertex(X):
    for v in sorted(X.vertices):
        L = link(X, v)
        assert L.vertices == {edge for edge in X.edges if v in edge}
        cubes = [cube for cube in X.cubes_at(v) if cube.dim >= 1]
        assert L.simplices == {cube.edges_at(v) for cube in cubes}
        assert len(L.simplices) == len(cubes)
        for cube in cubes:
            assert len(cube.edges_at(v)) == cube.dim


@pytest.mark.parametrize("I", [standard_line(), l2_complex(2), BassSerreTree(1, 2).complex()],
                         ids=["line", "l2", "bs"])
def test_balls_grow_with_the_radius(I):
    previous = ball(I, I.seed, 0)
    assert previous.vertices == {I.seed}
    for r in range(1, 3):
        current = ball(I, I.seed, r)
        assert previous.vertices < current.vertices
        assert set(previous.cubes) <= set(current.cubes)
        previous = current
