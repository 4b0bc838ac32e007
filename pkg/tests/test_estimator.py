import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from conftest import fixture_path
from mcl import LexicographicReasoner, fit_reasoner


def test_params_and_clone():
    r = LexicographicReasoner(mode="mclt", max_atoms=12)
    assert r.get_params() == {"mode": "mclt", "max_atoms": 12, "node_limit": r.node_limit}
    c = clone(r)
    assert c.get_params() == r.get_params() and c is not r
    r.set_params(mode="mcl")
    assert r.mode == "mcl"


def test_predict_birds():
    r = LexicographicReasoner().fit(fixture_path("birds"))
    got = r.predict(["T(Bird) <= Fly.", "T(Penguin) <= Fly.", "T(Penguin) <= not Fly."])
    assert got.dtype == bool and list(got) == [True, False, True]
    assert r.score(["T(Bird) <= Fly."], [True]) == 1.0
    assert r.rank("Penguin") == 1


def test_refit_on_new_signature():
    r = LexicographicReasoner().fit(fixture_path("birds"))
    before = r.n_types_
    assert r.predict(["T(Bird and Red) <= Fly."])[0]
    assert r.n_types_ == 2 * before


def test_module_mode_and_classical():
    r = fit_reasoner(fixture_path("students_core"), mode="module=m2")
    assert r.predict("T(PhDStudent) <= Young.")[0]
    r = fit_reasoner(fixture_path("birds"), mode="classical")
    assert list(r.predict(["Penguin <= Bird.", "Bird <= Penguin."])) == [True, False]


def test_validation():
    with pytest.raises(NotFittedError):
        LexicographicReasoner().predict(["T(A) <= B."])
    with pytest.raises(KeyError):
        LexicographicReasoner(mode="module=zz").fit(fixture_path("birds"))
    with pytest.raises(ValueError):
        LexicographicReasoner(mode="weird").fit(fixture_path("birds"))
    r = LexicographicReasoner().fit("module m subject Top:\n  T(A) <= B.\n")
    assert isinstance(r.predict(["T(A) <= B."]), np.ndarray)
