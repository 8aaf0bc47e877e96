"""Strongly homotopy coalgebra-map families, homotopy diagonals, and the
induced Hopf structure on the cobar algebra."""

import pytest

from loopalg.rings import ZZ
from loopalg.vectors import Vect
from loopalg.coalg import sphere_model, tensor_coalgebra, UNIT
from loopalg.cobar import CobarAlgebra, s_letter
from loopalg.tensoralg import UNIT_WORD
from loopalg.shfamily import (SHFamily, compose_strict, TensorSquare,
                              letterwise_split, AWCoalgebra, InducedHopf,
                              aw_sphere, aw_coproduct)
from loopalg.documents import (nonprimitive_document, noncoassoc_document,
                               coalgebra_from_document)


def test_strict_identity_family_is_coherent():
    C = sphere_model(3, ZZ, 8)
    fam = SHFamily.strict(C, C, {g: Vect.basis(ZZ, g) for g in C.gens},
                          name="id")
    ok, problems = fam.verify()
    assert ok, problems
    assert fam.max_level() == 1
    # the induced cobar map is the identity on letters
    v = fam.induced_letter_value(s_letter("x3"))
    assert v.terms == {("w", s_letter("x3")): 1}


def test_degree_problems_detected():
    C = sphere_model(3, ZZ, 8)
    Cp = sphere_model(2, ZZ, 8)
    fam = SHFamily.strict(C, Cp, {"x3": Vect.basis(ZZ, "x2")})
    assert fam.degree_problems()
    ok, problems = fam.verify()
    assert not ok
    assert any(kind == "degree" for kind, *_ in problems)


def test_nonprimitive_family_is_coherent():
    C, aw = coalgebra_from_document(nonprimitive_document())
    ok, problems = aw.verify()
    assert ok, problems


def test_incoherent_family_detected():
    # a Psi_2 value hitting a decomposable tensor generator has a nonzero
    # cobar differential that nothing else cancels
    from loopalg.coalg import DGCoalgebra
    C = DGCoalgebra(ZZ, 8, {"a2": 2, "w7": 7})
    T = tensor_coalgebra(C, C)
    bad = SHFamily(C, T, {2: {"w7": Vect.basis(
        ZZ, ("t", ("tp", "a2", "a2"), ("tp", "a2", "a2")))}})
    assert not bad.degree_problems()
    ok, problems = bad.verify()
    assert not ok
    coh = [p for p in problems if p[0] == "coherence"]
    assert coh and any(g == "w7" for _, _, g, _ in coh)


def test_noncoassoc_document_fails_coassociativity_only():
    C, aw = coalgebra_from_document(noncoassoc_document())
    ok, problems = aw.verify()
    assert ok, problems
    H = InducedHopf(aw)
    assert not H.chain_map_defects()
    assert not H.coassociative


def test_tensor_square_d2_and_sign():
    omA = CobarAlgebra(sphere_model(2, ZZ, 6))
    omB = CobarAlgebra(sphere_model(2, ZZ, 6))
    tsq = TensorSquare(omA, omB)
    cx = tsq.to_chain_complex()
    ok, label, _ = cx.verify_differential()
    assert ok, label
    # interchange sign: (1 (x) b)(a (x) 1) = (-1)^{|b||a|} a (x) b,
    # both letters in degree 1 here
    a = ("w", s_letter("x2"))
    u = Vect.basis(ZZ, ("t", UNIT_WORD, a))
    v = Vect.basis(ZZ, ("t", a, UNIT_WORD))
    assert tsq.mul(u, v).terms == {("t", a, a): -1}
    assert tsq.mul(v, u).terms == {("t", a, a): 1}


def test_letterwise_split_chain_map():
    C = sphere_model(2, ZZ, 6)
    Cp = sphere_model(3, ZZ, 6)
    omT = CobarAlgebra(tensor_coalgebra(C, Cp))
    omA, omB = CobarAlgebra(C), CobarAlgebra(Cp)
    tsq = TensorSquare(omA, omB)
    split = letterwise_split(omT, tsq)
    for n in range(1, 6):
        for w in omT.words(n):
            lhs = omT.d_word(w).map_terms(split)
            rhs = split(w).map_terms(tsq.diff)
            assert (lhs - rhs).is_zero(), w


def test_compose_strict_relabel():
    C = sphere_model(3, ZZ, 8)
    fam = AWCoalgebra.strict(C).psi
    D = sphere_model(3, ZZ, 8, label="y3")
    TD = tensor_coalgebra(D, D)

    def letter_map(p):
        (_, a, b) = p
        sw = lambda l: l if l == UNIT else "y3"
        return Vect.basis(ZZ, ("tp", sw(a), sw(b)))

    pushed = compose_strict(fam, letter_map, TD)
    ok, problems = pushed.verify()
    assert ok, problems
    labels = [l for l, _ in pushed.component(1, "x3").items()]
    assert all(set(p[1:]) <= {UNIT, "y3"} for lbl in labels for p in lbl[1:])


def test_induced_hopf_sphere():
    H = InducedHopf(aw_sphere(3, ZZ, 8))
    assert H.coassociative
    assert not H.chain_map_defects()
    w = ("w", s_letter("x3"))
    # the letter is primitive
    assert H.delta_red(w).is_zero()
    # the square of the degree-2 letter has the binomial middle term
    ww = ("w", s_letter("x3"), s_letter("x3"))
    assert H.delta_red(ww).terms == {("t", w, w): 2}
    assert H.delta_red(UNIT_WORD).is_zero()


def test_induced_hopf_nonprimitive():
    _, aw = coalgebra_from_document(nonprimitive_document())
    H = InducedHopf(aw)
    assert H.coassociative
    assert not H.chain_map_defects()
    # the degree-5 letter is not primitive for the induced structure
    assert not H.delta_red(("w", s_letter("v5"))).is_zero()


def test_aw_coproduct_verifies():
    A = aw_sphere(2, ZZ, 6)
    Ap = aw_sphere(3, ZZ, 6)
    E = aw_coproduct(A, Ap)
    ok, problems = E.verify()
    assert ok, problems
    assert ("inl", "x2") in E.C.gens and ("inr", "x3") in E.C.gens
