# /project/tests/test_parse.py
import pytest

from cubing.errors import DuplicateCorner, NotABijection, ParseError
from parse import (
    emit_complex,
    emit_map,
    emit_wallspace,
    load_automorphism,
    load_complex,
    load_wallspace,
    read_file,
    write_file,
)

SQUARE = "ccx 1\n# a unit square\ncube d c b a   # reversed corners\n"


def test_load_complex_with_comments():
    X = load_complex(SQUARE)
    assert X.counts() == [4, 4, 1]


def test_emit_is_canonical():
    text = emit_complex(load_complex(SQUARE))
    assert text == "ccx 1\ncube a b c d\n"
    assert emit_complex(load_complex(text)) == text


def test_emit_lists_maximal_cubes_only():
    text = "ccx 1\ncube a b c d\ncube a b\ncube e\n"
    assert emit_complex(load_complex(text)) == "ccx 1\ncube a b c d\ncube e\n"


@pytest.mark.parametrize("text, message", [
    ("", "line 1: empty document"),
    ("ccx 2\ncube a b\n", "line 1: expected header 'ccx 1'"),
    ("ccx 1\nsquare a b c d\n", "line 2: expected 'cube'"),
    ("ccx 1\ncube a b c\n", "line 2: corner count 3 is not a power of two"),
    ("ccx 1\n\ncube\n", "line 3: corner count 0"),
])
def test_complex_errors(text, message):
    with pytest.raises(ParseError) as error:
        load_complex(text)
    assert str(error.value).startswith(message)


def test_duplicate_corner():
    with pytest.raises(DuplicateCorner) as error:
        load_complex("ccx 1\ncube a b a c\n")
    assert error.value.line_no == 2
    assert str(error.value) == "line 2: repeated corner a"


def test_load_automorphism(edge):
    f = load_automorphism(edge, "aut 1\na -> b\nb -> a\n", name="swap")
    assert f.table == {"a": "b", "b": "a"}
    assert f.name == "swap"
    with pytest.raises(NotABijection):
        load_automorphism(edge, "aut 1\na -> a\nb -> a\n")


@pytest.mark.parametrize("text", [
    "aut 1\na b\n",
    "aut 1\na -> b\na -> a\n",
    "map 1\na -> b\n",
])
def test_map_errors(edge, text):
    with pytest.raises(ParseError):
        load_automorphism(edge, text)


def test_emit_map_is_sorted():
    assert emit_map({"b": "a", "a": "b"}) == "aut 1\na -> b\nb -> a\n"
    assert emit_map({"p": "0"}, kind="map") == "map 1\np -> 0\n"


def test_wallspace_round_trip():
    text = "wsp 1\npoints a b c\nwall a | b c\nwall a b | c\n"
    W = load_wallspace(text)
    assert W.points == ("a", "b", "c")
    assert len(W.walls) == 2
    assert emit_wallspace(W) == text


@pytest.mark.parametrize("text", [
    "wsp 1\nwall a | b\n",
    "wsp 1\npoints a b\npoints c\n",
    "wsp 1\npoints a b\nwall a b\n",
    "wsp 1\npoints a b\nsplit a | b\n",
    "wsp 1\n",
])
def test_wallspace_errors(text):
    with pytest.raises(ParseError):
        load_wallspace(text)


def test_file_helpers(tmp_path):
    path = str(tmp_path / "x.ccx")
    write_file(path, SQUARE)
    assert read_file(path) == SQUARE
