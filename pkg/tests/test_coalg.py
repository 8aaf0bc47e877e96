"""Coalgebra presentations: verification, spheres, tensor products, sums."""

import pytest

from loopalg.rings import ZZ
from loopalg.vectors import Vect
from loopalg.coalg import (UNIT, DGCoalgebra, sphere_model, tensor_coalgebra,
                           direct_sum)


def test_sphere_model():
    C = sphere_model(3, ZZ, 8)
    assert C.gens == {"x3": 3}
    assert C.delta_red("x3").is_zero()
    full = C.delta_full("x3")
    assert full.terms == {("t", "x3", UNIT): 1, ("t", UNIT, "x3"): 1}
    ok, _ = C.verify()
    assert ok
    with pytest.raises(ValueError):
        sphere_model(1, ZZ, 8)


def test_cutoff_truncates_generators():
    C = DGCoalgebra(ZZ, 4, {"a": 3, "b": 5})
    assert "b" not in C.gens


def test_nonpositive_degree_rejected():
    with pytest.raises(ValueError):
        DGCoalgebra(ZZ, 4, {"a": 0})


def test_verify_catches_broken_coleibniz():
    # delta(dv) != (d (x) 1 + 1 (x) d) delta(v)
    C = DGCoalgebra(ZZ, 8, {"a": 2, "b": 3, "v": 5, "w": 4},
                    d={"v": Vect(ZZ, [("w", 1)])},
                    delta={"v": Vect(ZZ, [(("t", "a", "b"), 1)]),
                           "w": Vect(ZZ, [(("t", "a", "a"), 1)])})
    ok, problems = C.verify()
    assert not ok
    assert any(kind == "co-Leibniz" for kind, _, _ in problems)


def test_verify_catches_noncoassociative():
    C = DGCoalgebra(ZZ, 8, {"a": 2, "u4": 4, "b": 2, "c": 2, "v": 6},
                    delta={"v": Vect(ZZ, [(("t", "a", "u4"), 1)]),
                           "u4": Vect(ZZ, [(("t", "b", "c"), 1)])})
    ok, problems = C.verify()
    assert not ok
    assert any(kind == "coassociativity" for kind, _, _ in problems)


def test_tensor_coalgebra():
    C = sphere_model(2, ZZ, 8)
    Cp = sphere_model(3, ZZ, 8)
    T = tensor_coalgebra(C, Cp)
    ok, problems = T.verify()
    assert ok, problems
    assert T.gens[("tp", "x2", "x3")] == 5
    assert T.gens[("tp", "x2", UNIT)] == 2
    # reduced comultiplication of the product generator has the two
    # splittings, with the Koszul shuffle sign
    dl = T.delta_red(("tp", "x2", "x3"))
    assert dl.terms == {
        ("t", ("tp", "x2", UNIT), ("tp", UNIT, "x3")): 1,
        ("t", ("tp", UNIT, "x3"), ("tp", "x2", UNIT)): 1,
    }
    # weights add across the factors
    assert T.weights[("tp", "x2", "x3")] == 2
    assert T.weights[("tp", "x2", UNIT)] == 1


def test_direct_sum():
    C = sphere_model(2, ZZ, 8)
    Cp = sphere_model(3, ZZ, 8)
    S = direct_sum(C, Cp)
    ok, _ = S.verify()
    assert ok
    assert S.gens[("inl", "x2")] == 2
    assert S.gens[("inr", "x3")] == 3
    assert S.weights[("inl", "x2")] == 1


def test_mismatched_rings_rejected():
    from loopalg.rings import F2
    with pytest.raises(ValueError):
        tensor_coalgebra(sphere_model(2, ZZ, 8), sphere_model(2, F2, 8))
    with pytest.raises(ValueError):
        direct_sum(sphere_model(2, ZZ, 8), sphere_model(2, F2, 8))
