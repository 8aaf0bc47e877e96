"""Lifting algebra maps on the cobar algebra through the based-path model
of a Hopf algebra.

Given the path-loop algebra of (C, Psi) and a homotopy-coherent family
theta from Omega C to the induced Hopf algebra H (components theta_k on
letters, valued in k-fold tensor powers of H), the lift sends the letter
s[c] to the section 1 (x) theta(s[c]) of Omega H (x) H and the letter
s[bar c] to the section defect applied to theta(s[c]).  The lift is an
algebra map and a chain map; its higher components pair the section or
defect on the first slot with theta_{k+1} on the rest, and satisfy a
coherence equation relative to the coaction of the path-loop algebra
over Omega C.
"""

from .vectors import Vect, label_key
from .tensoralg import UNIT_WORD
from .cobar import TwistedHopfTensor, s_letter


class TwistedLift:
    """The lift of a coherent family theta through the twisted tensor
    Omega H (x) H.

    theta: dict level -> {Omega C letter -> Vect over ('t', h_1, ..., h_k)
    with h_i basis labels of H}; None means the identity of Omega C
    (theta_1(s[c]) the one-letter word, higher components zero).  theta_1
    must extend multiplicatively (the family is strict beyond letters);
    word-level higher components are not supported.
    """

    def __init__(self, pl, theta=None, tw=None, name=""):
        self.pl = pl
        self.ring = pl.ring
        self.cutoff = pl.cutoff
        self.H = pl.base_hopf
        self.tw = tw if tw is not None else TwistedHopfTensor(self.H, pl.cutoff)
        if theta is None:
            theta = {1: {l: Vect.basis(self.ring, ("t", ("w", l)))
                         for l in pl.omega_base.alg.letters}}
        self.theta = theta
        self.max_level = max(theta) if theta else 0
        self.name = name or ("lift(%s)" % pl.name)
        self._theta_tilde = self.pl.omega.alg.algebra_map(
            lambda l: self._strip(self.xi(0, l)), self.tw.mul,
            lambda: Vect.basis(self.ring, self.tw.unit_label()))

    # -- the family of lift components ----------------------------------
    def theta_component(self, k, letter):
        return self.theta.get(k, {}).get(letter, Vect.zero(self.ring))

    def xi(self, k, letter):
        """Level-k lift component on a path-loop letter, as a Vect over
        ('t', twisted-tensor label, h_1, ..., h_k)."""
        ring = self.ring
        inner = letter[1]
        barred = isinstance(inner, tuple) and inner[0] == "bar"
        base = s_letter(inner[1]) if barred else letter
        out = Vect(ring)
        for label, c in self.theta_component(k + 1, base).items():
            head = Vect.basis(ring, label[1])
            if barred:
                head = self.tw.section_defect(head)
            else:
                head = self.tw.section(head)
            for twl, c2 in head.items():
                out.iadd_term(ring.mul(c, c2), ("t", twl) + label[2:])
        return out

    def _strip(self, vect):
        """('t', twl) labels back to plain twisted-tensor labels."""
        return Vect(self.ring, [(l[1], c) for l, c in vect.items()])

    # -- the lift as an algebra map -------------------------------------
    def theta_tilde(self, vect):
        """The lift on a Vect of path-loop words, valued in the twisted
        tensor."""
        return vect.map_terms(self._theta_tilde)

    def chain_map_residue(self, word):
        """D(theta~(word)) - theta~(d word); zero when the lift is a chain
        map."""
        lhs = self.theta_tilde(Vect.basis(self.ring, word)).map_terms(
            self.tw.diff)
        rhs = self.theta_tilde(self.pl.omega.d_vect(
            Vect.basis(self.ring, word)))
        return lhs - rhs

    # -- relative coherence ---------------------------------------------
    def _degree(self, label):
        return self.tw.degree(label[1]) + sum(
            self.H.degree(h) for h in label[2:])

    def _apply_d(self, vect):
        """Slotwise differential on ('t', twl, h...) labels with Koszul
        prefix signs."""
        ring = self.ring
        out = Vect(ring)
        for label, c in vect.items():
            for twl2, c2 in self.tw.diff(label[1]).items():
                out.iadd_term(ring.mul(c, c2), ("t", twl2) + label[2:])
            pre = self.tw.degree(label[1])
            for i, h in enumerate(label[2:], start=2):
                sign = -1 if pre % 2 else 1
                for h2, c2 in self.H.d_of(h).items():
                    out.iadd_term(ring.mul(ring.mul(sign, c), c2),
                                  label[:i] + (h2,) + label[i + 1:])
                pre += self.H.degree(h)
        return out

    def _apply_coact(self, vect):
        """Splice the reduced coaction of the twisted tensor over H into
        slot 0 and the reduced comultiplication of H into each H slot."""
        ring = self.ring
        out = Vect(ring)
        for label, c in vect.items():
            (_, w, b) = label[1]
            if b != self.H.unit_label:
                out.iadd_term(c, ("t", ("t", w, self.H.unit_label), b)
                              + label[2:])
            for (_, b1, b2), c2 in self.H.delta_red(b).items():
                out.iadd_term(ring.mul(c, c2),
                              ("t", ("t", w, b1), b2) + label[2:])
            for i, h in enumerate(label[2:], start=2):
                for (_, h1, h2), c2 in self.H.delta_red(h).items():
                    out.iadd_term(ring.mul(c, c2),
                                  label[:i] + (h1, h2) + label[i + 1:])
        return out

    def _xi_word(self, k, word):
        """xi extended to path-loop words where it is forced: the unit and
        single letters."""
        if word == UNIT_WORD:
            if k == 0:
                return Vect.basis(self.ring, ("t", self.tw.unit_label()))
            return Vect.zero(self.ring)
        if len(word) == 2:
            return self.xi(k, word[1])
        raise NotImplementedError(
            "lift components on words of length %d: the coherence check "
            "needs letter-linear differentials and letter-supported "
            "reduced coactions" % (len(word) - 1))

    def _theta_word(self, j, word):
        """theta_j on an Omega C word: multiplicative at level one, zero
        above (the family is strict beyond letters)."""
        if word == UNIT_WORD:
            if j == 1:
                return Vect.basis(self.ring, self.H.unit_label)
            return Vect.zero(self.ring)
        if len(word) == 2:
            out = Vect(self.ring)
            for label, c in self.theta_component(j, word[1]).items():
                if j == 1:
                    out.iadd_term(c, label[1])
                else:
                    out.iadd_term(c, label)
            return out
        if j != 1:
            if self.max_level > 1:
                raise NotImplementedError(
                    "higher family components on words are not supported")
            return Vect.zero(self.ring)
        out = Vect.basis(self.ring, self.H.unit_label)
        for l in word[1:]:
            out = self.H_mul_vect(out, self._theta_word(1, ("w", l)))
        return out

    def H_mul_vect(self, u, v):
        from .vectors import bilinear
        return bilinear(self.ring, u, v, self.H.mul)

    def rel_coherence_residue(self, letter, k):
        """The level-k coherence of the lift family on a letter, relative
        to the coaction over Omega C; zero when coherent."""
        ring = self.ring
        lhs = self._apply_d(self.xi(k, letter))
        if k >= 1:
            lhs = lhs - self._apply_coact(self.xi(k - 1, letter))
        rhs = Vect(ring)
        for w2, c in self.pl.omega.d_word(("w", letter)).items():
            rhs = rhs + self._xi_word(k, w2).scale(c)
        for (_, u, w), c in self.pl.nu_bar(("w", letter)).items():
            du = self.pl.omega.degree(u)
            for j in range(1, k + 1):
                i = k - j
                sign = 1 if ((j - 1) * du) % 2 else -1
                xi_u = self._xi_word(i, u)
                th_w = self._theta_word(j, w)
                for lu, cu in xi_u.items():
                    for lw, cw in th_w.items():
                        tail = lw[1:] if j > 1 else (lw,)
                        rhs.iadd_term(
                            ring.mul(ring.mul(ring.mul(c, sign), cu), cw),
                            lu + tail)
        return lhs - rhs
