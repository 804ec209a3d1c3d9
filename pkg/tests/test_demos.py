# /project/tests/test_demos.py
import pytest

from cubing.classify import Hyperbolic, build_axis, classify, power_length_check
from cubing.complex import ball, validate
from cubing.errors import AutomorphismError, ParseError, PreconditionError, RegionError
from cubing.metric import crossing_sequence
from demos import DemoReport
from demos.bass_serre import BASE, BassSerreTree, demo_bs, format_word, parse_word, relation_residual
from demos.l2 import (
    ZERO,
    basis_vector,
    demo_l2,
    format_vertex,
    l2_complex,
    parse_vertex,
    shift_map,
    staircase,
)
from demos.line import line_reflection, line_shift
from demos.subadditivity import coordinate_reflection, delta_subadditivity, demo_words


def test_report_rendering():
    report = DemoReport("title")
    report.note("detail")
    report.check("first", True)
    report.check("second", False)
    assert not report.passed
    assert report.failed() == ["second"]
    assert report.render() == "title\n  detail\n  [ok] first\n  [FAIL] second"
    assert report.render(quiet=True) == "title\n  [ok] first\n  [FAIL] second"


def test_line_maps():
    assert line_shift(2)("3") == "5"
    assert line_shift(2).inverse()("3") == "1"
    assert line_reflection(3)("1") == "2"
    assert line_reflection(3).name == "reflect3"


def test_l2_tokens():
    assert parse_vertex("0:1,2:-1") == {0: 1, 2: -1}
    assert format_vertex({2: -1, 0: 1, 1: 0}) == "0:1,2:-1"
    assert format_vertex({}) == ZERO
    assert parse_vertex(ZERO) == {}
    assert basis_vector(-1) == "-1:1"
    assert staircase(3) == "0:1,1:1,2:1"
    assert staircase(-2) == "-2:-1,-1:-1"
    assert staircase(0) == ZERO


def test_l2_shift_map():
    f = shift_map(6)
    assert f(ZERO) == "0:1"
    assert f("0:1") == "0:1,1:1"
    assert f.backward("0:1") == ZERO
    assert f.power(-1)(ZERO) == "-1:-1"
    with pytest.raises(RegionError):
        shift_map(1)("1:1")


def test_l2_small_ball():
    X = l2_complex(1)
    B = ball(X, ZERO, 1)
    assert B.counts() == [7, 6]
    assert validate(B).accepted


def test_l2_demo_passes():
    report = demo_l2()
    assert report.passed, report.failed()
    assert "displacement(f, e1) = 3" in report.lines


def test_l2_classification():
    f = shift_map(6)
    result = classify(f, radius=2, window=4)
    assert isinstance(result.verdict, Hyperbolic)
    assert result.verdict.delta == 1
    assert result.verdict.witness == "-1:-1"
    axis = build_axis(f, ZERO, 5)
    assert len(axis) == 11
    assert crossing_sequence(f.domain, axis.vertices).is_duplicate_free()
    assert power_length_check(f, 4, classification=result).holds


def test_l2_demo_window_must_fit():
    with pytest.raises(PreconditionError):
        demo_l2(K=3, N=5)


def test_bass_serre_words():
    assert parse_word(BASE) == []
    assert parse_word("abB") == [(1, 1), (0, -1)]
    assert format_word([(1, 1), (0, -1)]) == "abB"
    with pytest.raises(ParseError):
        parse_word("ac")
    with pytest.raises(ParseError):
        parse_word("ba")


def test_bass_serre_tree_neighbours():
    tree = BassSerreTree(1, 2)
    assert tree.neighbors(BASE) == ["b", "ab", "B"]
    assert tree.neighbors("b") == ["bb", "bab", BASE]
    assert all(len(set(tree.neighbors(v))) == 3 for v in ["B", "ab", "bab", "BB"])
    assert tree.distance("b", "ab") == 2


def test_bass_serre_generators():
    tree = BassSerreTree(1, 2)
    a, b = tree.generators()
    assert a(BASE) == BASE
    assert a("b") == "ab"
    assert a("ab") == "b"
    assert b(BASE) == "b"
    assert b("B") == BASE
    assert b.inverse()(BASE) == "B"


def test_bass_serre_relation():
    residual, tested = relation_residual(BassSerreTree(2, 3), 3)
    assert residual == 0
    assert tested > 0


@pytest.mark.parametrize("m, n", [(1, 2), (2, 3)])
def test_bass_serre_demo_passes(m, n):
    report = demo_bs(m, n, 4)
    assert report.passed, report.failed()


def test_bass_serre_demo_needs_room():
    with pytest.raises(PreconditionError):
        demo_bs(1, 2, 2)


def test_subadditivity_demo():
    report = demo_words()
    assert report.passed
    assert ("antipodal: 3 <= 1 + 1 + 1", True) in report.checks


def test_subadditivity_with_coordinate_reflections(cube3):
    X = cube3
    r0, r1 = coordinate_reflection(X, 0), coordinate_reflection(X, 1)
    result = delta_subadditivity(r0.compose(r1), [r0, r1])
    assert (result.delta, result.parts, result.exact) == (2, (1, 1), True)
    assert result.holds


def test_subadditivity_rejects_wrong_factorizations():
    with pytest.raises(AutomorphismError):
        delta_subadditivity(line_shift(2), [line_shift(1)])
    with pytest.raises(AutomorphismError):
        delta_subadditivity(line_shift(2), [])
