# /project/tests/test_automorphism.py
import pytest

from builders import complex_from, edge_swap, grid, path, square_rotation
from cubing.automorphism import Automorphism, enumerate_automorphisms
from cubing.errors import CubingError, EdgeNotPreserved, NotABijection, SquareNotPreserved
from demos.line import line_shift


def test_mapping_must_be_a_bijection(edge):
    with pytest.raises(NotABijection):
        Automorphism.from_mapping(edge, {"a": "a", "b": "a"})
    with pytest.raises(NotABijection):
        Automorphism.from_mapping(edge, {"a": "b"})
    with pytest.raises(NotABijection):
        Automorphism.from_mapping(edge, {"a": "b", "b": "a", "z": "z"})


def test_mapping_must_preserve_edges():
    with pytest.raises(EdgeNotPreserved):
        Automorphism.from_mapping(path(2), {"a": "a", "b": "c", "c": "b"})


def test_mapping_must_preserve_squares():
    X = complex_from("a b c d", "w x", "x z", "z y", "y w")
    swap = {"a": "w", "b": "x", "c": "y", "d": "z", "w": "a", "x": "b", "y": "c", "z": "d"}
    with pytest.raises(SquareNotPreserved):
        Automorphism.from_mapping(X, swap)


def test_rotation_group_arithmetic(square):
    r = square_rotation(square)
    assert r.order() == 4
    assert r.power(2).table == {"a": "d", "b": "c", "c": "b", "d": "a"}
    assert r.power(-1) == r.inverse()
    assert r.power(4) == Automorphism.identity(square)
    product = r.compose(r.inverse())
    assert product.name == "r*r^-1"
    assert product.fixed_vertices() == ["a", "b", "c", "d"]


def test_fixed_vertices(edge):
    assert edge_swap(edge).fixed_vertices() == []
    assert Automorphism.identity(edge).fixed_vertices() == ["a", "b"]


def test_equality_and_hashing(square):
    assert square_rotation(square) == square_rotation(square)
    assert len({square_rotation(square), square_rotation(square).power(5)}) == 1


@pytest.mark.parametrize("name, size", [
    ("edge", 2), ("square", 8), ("cube3", 48), ("tripod", 6), ("grid2", 8), ("four_cycle", 8),
])
def test_group_sizes(name, size, request):
    group = enumerate_automorphisms(request.getfixturevalue(name))
    assert len(group) == size
    assert len(set(group)) == size
    assert [g.name for g in group[:2]] == ["g0", "g1"]


def test_enumeration_limit(cube3):
    with pytest.raises(CubingError):
        enumerate_automorphisms(cube3, limit=5)


def test_enumeration_of_grid_keeps_identity():
    group = enumerate_automorphisms(grid(2))
    assert any(g.fixed_vertices() == sorted(g.domain.vertices) for g in group)


def test_implicit_powers_and_composition():
    s = line_shift(2)
    assert s.power(3)("0") == "6"
    assert s.power(-1)("0") == "-2"
    assert s.compose(line_shift(1))("4") == "7"
    assert s.inverse()("4") == "2"
    assert not s.is_finite
    with pytest.raises(CubingError):
        s.order()
