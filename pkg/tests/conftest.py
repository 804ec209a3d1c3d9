# /project/tests/conftest.py
import pytest

import builders


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the settings lookup at an empty location so a user config never leaks in."""
    path = tmp_path / "ccx-config" / "config.yml"
    monkeypatch.setenv("CCX_CONFIG", str(path))
    return path


@pytest.fixture
def edge():
    return builders.edge()


@pytest.fixture
def square():
    return builders.square()


@pytest.fixture
def cube3():
    return builders.cube3()


@pytest.fixture
def tripod():
    return builders.tripod()


@pytest.fixture
def strip():
    return builders.strip()


@pytest.fixture
def grid2():
    return builders.grid(2)


@pytest.fixture
def four_cycle():
    return builders.four_cycle()


@pytest.fixture
def write(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
