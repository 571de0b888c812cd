import pathlib

import pytest

import qsr

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_three_region_network_is_unsat():
    text = (DATA / "nested.qsr").read_text()
    v = qsr.check(text)
    assert v["status"] == "unsat"
    assert v["fragment"]["dir_in_dir49"] is True
    assert qsr.bipath(text) is None


def test_counterexample_is_left_open():
    text = (DATA / "corners.qsr").read_text()
    assert qsr.check(text)["status"] == "unknown"
    assert qsr.bipath(text) == qsr.normalize(text)
    v = qsr.epsilon(text, "1/1000")
    assert v["status"] == "sat" and v["approximate"]


def test_generated_instance_solves():
    text = qsr.gen(5, 4)
    assert text == qsr.gen(5, 4)
    v = qsr.epsilon(text)
    assert v["status"] == "sat"
    assert set(v["rectangles"]) == {"v1", "v2", "v3", "v4"}


def test_compose():
    assert qsr.compose("ia", "m", "m") == ["b"]
    assert qsr.compose("rcc8", "NTPP", "NTPP") == ["NTPP"]
    with pytest.raises(ValueError):
        qsr.compose("ia", "zz", "m")


def test_errors():
    with pytest.raises(ValueError, match="line 2"):
        qsr.check("vars a b\ntop a c DC\n")
    with pytest.raises(qsr.StageError):
        qsr.epsilon("vars a b\n")
