"""Path objects, path-loop algebras, the cofixed double-loop subalgebra,
and loop homotopy fibers."""

import pytest

from loopalg.rings import ZZ, F2
from loopalg.vectors import Vect
from loopalg.coalg import DGCoalgebra, sphere_model
from loopalg.cobar import s_letter
from loopalg.shfamily import AWCoalgebra
from loopalg.pathloop import (bar, path_object, extend_psi, PathLoop,
                              CofixedSubalgebra, double_loop, loop_fiber,
                              identity_family, trivial_family)


def aw(n, ring=ZZ, cutoff=8):
    return AWCoalgebra.strict(sphere_model(n, ring, cutoff))


def test_path_object_gens_and_verify():
    C = sphere_model(3, ZZ, 8)
    PC = path_object(C)
    assert PC.gens["x3"] == 3
    assert PC.gens[bar("x3")] == 2
    ok, problems = PC.verify()
    assert ok, problems
    # d(g) = dg - bar(g); bar of a cycle is a cycle
    assert PC.d_of("x3").terms == {bar("x3"): -1}
    assert PC.d_of(bar("x3")).is_zero()


def test_path_object_degree_guard():
    C = DGCoalgebra(ZZ, 8, {"a": 1})
    with pytest.raises(ValueError):
        path_object(C)


def test_path_object_cannot_iterate():
    PC = path_object(sphere_model(3, ZZ, 8))
    with pytest.raises(ValueError):
        path_object(PC)


def test_extend_psi_coherent():
    for n in (2, 3):
        E = extend_psi(aw(n))
        ok, problems = E.verify()
        assert ok, problems


def test_pathloop_acyclic():
    pl = PathLoop(aw(3, ZZ, 6))
    cx = pl.to_chain_complex(top=6)
    ok, label, _ = cx.verify_differential()
    assert ok, label
    assert cx.betti(0, 5) == [1, 0, 0, 0, 0, 0]


def test_kappa_anti_chain_map_small():
    pl = PathLoop(aw(3, ZZ, 8))
    ob = pl.omega_base
    for deg in range(0, 5):
        for w in ob.alg.words(deg):
            v = Vect.basis(pl.ring, w)
            res = pl.kappa(ob.d_vect(v)) + pl.omega.d_vect(pl.kappa(v))
            assert res.is_zero(), w


def test_cofixed_closure_and_coordinates():
    dl, pl = double_loop(aw(3, ZZ, 6))
    ring = dl.ring
    for n in range(0, 6):
        basis = dl.basis(n)
        assert len(basis) == dl.rank(n)
        for i, label in enumerate(basis):
            v = dl.vector_of(label)
            # basis vectors are cofixed: the reduced coaction kills them
            acc = Vect(ring)
            for u, c in v.items():
                acc = acc + pl.nu_bar(u).scale(c)
            assert acc.is_zero(), label
            # coordinates round trip
            assert dl.coordinates(n, v) == [
                1 if j == i else 0 for j in range(len(basis))]
            # the differential stays inside the subalgebra
            if n:
                dl.coordinates(n - 1, pl.omega.d_vect(v))


def test_cofixed_blocked_requires_weight():
    from loopalg.formal import FormalDoubleLoop
    C2 = sphere_model(2, F2, 5)
    with pytest.raises(ValueError):
        double_loop(AWCoalgebra.strict(C2))
    dl, _ = double_loop(AWCoalgebra.strict(C2), max_weight=6)
    cx = dl.to_chain_complex(top=4)
    ok, label, _ = cx.verify_differential()
    assert ok, label
    fcx = FormalDoubleLoop(C2).to_chain_complex(max_weight=6, top=4)
    assert cx.betti(0, 3) == fcx.betti(0, 3)


def test_double_loop_s3_mod2_betti():
    dl, _ = double_loop(aw(3, F2, 8))
    cx = dl.to_chain_complex(top=8)
    ok, label, _ = cx.verify_differential()
    assert ok, label
    assert cx.betti(0, 7) == [1, 1, 1, 2, 2, 2, 3, 4]


def test_loop_fiber_identity_acyclic():
    A = aw(3, ZZ, 6)
    hf, _ = loop_fiber(A, A, identity_family(A))
    cx = hf.to_chain_complex(top=6)
    ok, label, _ = cx.verify_differential()
    assert ok, label
    assert cx.betti(0, 5) == [1, 0, 0, 0, 0, 0]


def test_loop_fiber_trivial_map():
    A5 = aw(5, ZZ, 6)
    A3 = aw(3, ZZ, 6)
    hf, _ = loop_fiber(A5, A3, trivial_family(A5, A3))
    cx = hf.to_chain_complex(top=6)
    ok, label, _ = cx.verify_differential()
    assert ok, label
    # through degree 5 this is Omega S5 (x) DL(S3)
    dl, _ = double_loop(aw(3, ZZ, 6))
    d3 = dl.to_chain_complex(top=6).betti(0, 5)
    o5 = [1, 0, 0, 0, 1, 0]
    conv = [sum(o5[p] * d3[n - p] for p in range(n + 1)) for n in range(6)]
    assert cx.betti(0, 5) == conv
