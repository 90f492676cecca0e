import json

import pytest

import rauzy2


def test_words():
    assert rauzy2.reduce("122^-11") == "11"
    assert rauzy2.reduce("1221^-1") == "1221^-1"
    assert rauzy2.apply("2", "21^-122", rauzy2.apply("2", "21^-122", "2")) == "21^-1221^-12221^-122"
    assert rauzy2.incidence_matrix("2", "21") == [[0, 1], [1, 1]]


def test_family():
    f = rauzy2.family("ii", -3)
    assert f["power"] == 2
    assert f["epsilon"] == (1, 1)
    assert rauzy2.minimal_a("iv") == -1
    with pytest.raises(rauzy2.ParameterError):
        rauzy2.family("i", 2)
    with pytest.raises(ValueError):
        rauzy2.family("v", 3)


def test_fibonacci_surface():
    segs = rauzy2.dual_iterate("iii", 1, "sigma", 1)
    assert sorted(segs) == [(-1, 1, 2, 1), (0, 1, 2, 1), (1, 0, 1, 1)]
    window = set(rauzy2.surface("iii", 1, "sigma", 3))
    inner = {s for s in rauzy2.dual_iterate("iii", 1, "sigma", 10) if max(abs(s[0]), abs(s[1])) <= 2}
    assert inner == {s for s in window if max(abs(s[0]), abs(s[1])) <= 2}


def test_fractal_lengths():
    whole = rauzy2.exact_fractal("i", 3, "tau")
    p1 = rauzy2.exact_fractal("i", 3, "tau", 1)
    p2 = rauzy2.exact_fractal("i", 3, "tau", 2)
    total = (p1["hi"] - p1["lo"]) + (p2["hi"] - p2["lo"])
    assert whole["hi"] - whole["lo"] == pytest.approx(total, abs=1e-12)
    parts = rauzy2.approx_fractal("i", 3, "tau", 1, 10)
    assert len(parts) == 1
    assert abs(parts[0]["lo"] - p1["lo"]) <= parts[0]["error"]
    with pytest.raises(rauzy2.ParameterError):
        rauzy2.exact_fractal("i", 3, "sigma", 1)


def test_run_and_verify():
    code, out, err = rauzy2.run("info", "iii", 1, format="json")
    assert code == 0 and err == ""
    assert json.loads(out)["delta_is_identity"] is True
    code, _, err = rauzy2.run("info", "i", 2)
    assert code == 2 and err
    passed, checks = rauzy2.verify("i", 3)
    assert passed
    assert all(ok for _, ok, _ in checks)
