import pytest

import swkit


def test_den_local_values():
    assert swkit.den_local("inert", 3, [1]) == [1, -1]
    assert swkit.den_local("split", 3, [2]) == [1, 1, 1]
    assert swkit.den_local("split", 3, [1, 1]) == [1, 4, 1]


def test_den_global_and_schema():
    datum = {"q": 3, "n": 1, "places": [{"deg": 1, "kind": "inert", "lambda": [1]}]}
    assert swkit.den(datum) == [1, -1]
    code, doc = swkit.run("den", datum)
    assert code == 0
    assert doc["schema"] == swkit.SCHEMA
    assert doc["coeffs"] == ["1", "-1"]
    assert swkit.den({"q": 3, "places": []}) == [1]


def test_derivative_records():
    datum = {"q": 3, "places": [{"kind": "inert", "lambda": [2]}]}
    recs = swkit.derivative(datum, r=[0, 1, 2])
    assert [(r["r"], r["analytic"], r["geometric"]) for r in recs] == [(0, 1, 1), (1, 0, 0), (2, 8, 8)]


def test_verify_qbinom():
    doc = swkit.verify("qbinom")
    assert doc["pass"] is True
    assert doc["total"] == 45


def test_weyl_helpers():
    assert swkit.verify_main_identity(3)
    assert [swkit.rho_dimension(4, i) for i in range(5)] == [1, 4, 6, 4, 1]


def test_big_integers_are_python_ints():
    assert swkit.isom_count_split(3, 2, 0, 3) == 5616
    coeffs = swkit.p_coh_place(9, 7)
    assert coeffs[-1] == -(7 ** 36)


def test_errors_map_to_exceptions():
    with pytest.raises(swkit.InputError):
        swkit.den({"q": 4, "places": []})
    with pytest.raises(swkit.InputError):
        swkit.den({"q": 3, "places": [{"kind": "inert", "lambda": [1, 2]}]})
    with pytest.raises(swkit.GuardExceeded):
        swkit.p_coh_grassmann_sum(40, 3)
    assert issubclass(swkit.GuardExceeded, swkit.Error)
