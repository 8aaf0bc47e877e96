"""Strongly homotopy families of comultiplicative maps.

A family {theta_k : C -> C'^{(x)k}, degree k-1} induces, by total
desuspension of each level, an algebra map ind(theta) between the cobar
constructions of C and C'.  The family is homotopy coherent exactly when
ind(theta) is a chain map; coherence is checked in that form, letter by
letter, with the level-k residue read off as the length-k word component
of the chain map defect.  This characterization is sign-convention free:
all Koszul bookkeeping lives in the cobar differential and in the
desuspension sign of ind(theta).

A homotopy diagonal is a family Psi : C -> (C (x) C)^{(x)k} with Psi_1 the
full comultiplication; pushing its induced map through the letterwise
quotient Omega(C (x) C) -> Omega C (x) Omega C equips Omega C with a
comultiplication, coassociative exactly when Psi is suitably coherent.
"""

from .vectors import Vect, label_key, bilinear
from .coalg import UNIT, DGCoalgebra, tensor_coalgebra, direct_sum
from .tensoralg import FreeAlgebra, UNIT_WORD, concat
from .cobar import CobarAlgebra, s_letter


class SHFamily:
    """A finitely supported family theta_k : C -> target^{(x)k}.

    components: dict level k >= 1 -> dict source generator -> Vect over
    ('t', t_1, ..., t_k) with t_i target generators."""

    def __init__(self, source, target, components, name=""):
        self.source = source
        self.target = target
        self.ring = source.ring
        self.name = name
        self.components = {}
        for k, table in components.items():
            kept = {g: v for g, v in table.items()
                    if g in source.gens and not v.is_zero()}
            if kept:
                self.components[int(k)] = kept

    @classmethod
    def strict(cls, source, target, letter_map, name=""):
        """The family of an ordinary coalgebra map: theta_1 only.
        letter_map: source generator -> Vect over target generators."""
        comp = {g: Vect(source.ring, [(("t", l), c) for l, c in v.items()])
                for g, v in letter_map.items()}
        return cls(source, target, {1: comp}, name=name)

    def max_level(self):
        return max(self.components) if self.components else 0

    def component(self, k, gen):
        return self.components.get(k, {}).get(gen, Vect.zero(self.ring))

    def apply_component(self, k, vect):
        """Linear extension of theta_k to a Vect over source generators."""
        return vect.map_terms(lambda g: self.component(k, g))

    def degree_problems(self):
        """theta_k must raise degree by exactly k - 1."""
        problems = []
        for k, table in self.components.items():
            for g, v in table.items():
                want = self.source.degree(g) + k - 1
                for label, _ in v.items():
                    got = sum(self.target.degree(p) for p in label[1:])
                    if len(label) - 1 != k or got != want:
                        problems.append((k, g, label))
        return problems

    def _omegas(self):
        if not hasattr(self, "_om_pair"):
            self._om_pair = (CobarAlgebra(self.source),
                             CobarAlgebra(self.target))
        return self._om_pair

    def chain_map_defect(self, gen):
        """d(ind(s[gen])) - ind(d(s[gen])) in the target cobar algebra.
        The family is coherent exactly when this vanishes on every
        generator."""
        if not hasattr(self, "_defects"):
            self._defects = {}
        if gen not in self._defects:
            ring = self.ring
            oms, omt = self._omegas()
            ind = self.induced_map(oms, omt)
            letter = ("w", s_letter(gen))
            left = Vect(ring)
            for w, c in ind(letter).items():
                left = left + omt.d_word(w).scale(c)
            self._defects[gen] = left - oms.d_word(letter).map_terms(ind)
        return self._defects[gen]

    def coherence_residue(self, gen, k):
        """Length-k word component of the chain map defect; the level-k
        coherence obstruction of the family at gen."""
        res = Vect(self.ring)
        for w, c in self.chain_map_defect(gen).items():
            if len(w) - 1 == k:
                res.iadd_term(c, w)
        return res

    def verify(self, kmax=None):
        """Check degree bookkeeping and that the induced cobar map is a
        chain map on every generator, reported level by level.  Returns
        (ok, problems)."""
        problems = [("degree", k, g, lbl) for (k, g, lbl) in self.degree_problems()]
        kmax = self.max_level() + 1 if kmax is None else kmax
        for g in sorted(self.source.gens, key=label_key):
            for k in range(1, kmax + 1):
                res = self.coherence_residue(g, k)
                if not res.is_zero():
                    problems.append(("coherence", k, g, res))
        return (not problems), problems

    def induced_letter_value(self, letter):
        """ind(theta)(s[c]) = sum_k s^{-1 (x)k} theta_k(c), a Vect of words
        of the target cobar algebra."""
        ring = self.ring
        c = letter[1]
        out = Vect(ring)
        for k in self.components:
            for label, coef in self.component(k, c).items():
                parts = label[1:]
                degs = [self.target.degree(p) for p in parts]
                exp = sum(degs[i] * (k - 1 - i) for i in range(k))
                sign = -1 if exp % 2 else 1
                out.iadd_term(ring.mul(sign, coef),
                              ("w",) + tuple(s_letter(p) for p in parts))
        return out

    def induced_map(self, omega_source, omega_target):
        """The induced algebra map Omega C -> Omega C' on words."""
        return omega_source.alg.algebra_map(self.induced_letter_value,
                                            omega_target.mul,
                                            omega_target.unit)


def compose_strict(F, letter_map, new_target, name=""):
    """Postcompose a family with a strict coalgebra map (generator ->
    Vect over generators of new_target, unit -> unit)."""
    def push(label):
        parts = label[1:]
        vs = []
        for p in parts:
            vs.append(letter_map(p))
        out = Vect(F.ring)

        def rec(j, acc, coef):
            if j == len(vs):
                out.iadd_term(coef, ("t",) + tuple(acc))
                return
            for l, c in vs[j].items():
                rec(j + 1, acc + [l], F.ring.mul(coef, c))
        rec(0, [], F.ring.norm(1))
        return out

    comps = {}
    for k, table in F.components.items():
        comps[k] = {g: v.map_terms(push) for g, v in table.items()}
    return SHFamily(F.source, new_target, comps, name=name or F.name)


class TensorSquare:
    """Omega A (x) Omega B with labels ('t', wordA, wordB), the interchange
    product, and the tensor differential."""

    def __init__(self, omA, omB, name=""):
        self.omA = omA
        self.omB = omB
        self.ring = omA.ring
        self.cutoff = min(omA.cutoff, omB.cutoff)
        self.name = name or ("%s(x)%s" % (omA.name, omB.name))

    def degree(self, label):
        return self.omA.degree(label[1]) + self.omB.degree(label[2])

    def unit(self):
        return Vect.basis(self.ring, ("t", UNIT_WORD, UNIT_WORD))

    def mul(self, u, v):
        def pair(l1, l2):
            (_, a1, a2), (_, b1, b2) = l1, l2
            sign = -1 if (self.omB.degree(a2) * self.omA.degree(b1)) % 2 else 1
            return Vect.basis(self.ring, ("t", concat(a1, b1), concat(a2, b2)),
                              sign)
        return bilinear(self.ring, u, v, pair)

    def diff(self, label):
        (_, w1, w2) = label
        out = Vect(self.ring)
        for u, c in self.omA.d_word(w1).items():
            out.iadd_term(c, ("t", u, w2))
        sign = -1 if self.omA.degree(w1) % 2 else 1
        for u, c in self.omB.d_word(w2).items():
            out.iadd_term(self.ring.mul(sign, c), ("t", w1, u))
        return out

    def basis(self, n, max_weight=None):
        out = []
        for p in range(n + 1):
            for wa in self.omA.words(p, max_weight):
                for wb in self.omB.words(n - p, max_weight):
                    out.append(("t", wa, wb))
        out.sort(key=label_key)
        return out

    def to_chain_complex(self, max_weight=None, top=None, name=""):
        from .chain import ChainComplex
        top = self.cutoff if top is None else top
        bases = {n: self.basis(n, max_weight) for n in range(top + 1)}
        return ChainComplex(self.ring, bases, self.diff, self.cutoff,
                            name=name or self.name)


def letterwise_split(omega_tensor, tsq):
    """The multiplicative quotient Omega(A (x) B) -> Omega A (x) Omega B:
    s[(a & 1)] -> s[a] (x) 1, s[(1 & b)] -> 1 (x) s[b], and letters with
    both components positive go to zero."""
    ring = omega_tensor.ring

    def letter_value(letter):
        (_, a, b) = letter[1]
        if b == UNIT:
            return Vect.basis(ring, ("t", ("w", s_letter(a)), UNIT_WORD))
        if a == UNIT:
            return Vect.basis(ring, ("t", UNIT_WORD, ("w", s_letter(b))))
        return Vect.zero(ring)

    return omega_tensor.alg.algebra_map(letter_value, tsq.mul, tsq.unit)


class AWCoalgebra:
    """A coalgebra together with a homotopy diagonal Psi: an SHFamily from
    C to C (x) C with Psi_1 the full comultiplication."""

    def __init__(self, C, psi, name=""):
        self.C = C
        self.ring = C.ring
        self.cutoff = C.cutoff
        self.psi = psi
        self.name = name or C.name
        self.tensorC = psi.target

    @classmethod
    def strict(cls, C, name=""):
        """The homotopy diagonal of a coassociative coalgebra: Psi_1 is the
        comultiplication and all higher components vanish."""
        T = tensor_coalgebra(C, C)
        comp = {}
        for g in C.gens:
            v = Vect(C.ring)
            for (_, a, b), c in C.delta_full(g).items():
                v.iadd_term(c, ("t", ("tp", a, b)))
            comp[g] = v
        fam = SHFamily(C, T, {1: comp}, name="Delta")
        return cls(C, fam, name=name or C.name)

    def verify(self):
        """Psi_1 must be the full comultiplication and the family must be
        coherent."""
        problems = []
        for g in self.C.gens:
            want = Vect(self.ring)
            for (_, a, b), c in self.C.delta_full(g).items():
                want.iadd_term(c, ("t", ("tp", a, b)))
            if self.psi.component(1, g) != want:
                problems.append(("psi1", g))
        ok, more = self.psi.verify()
        return (not problems) and ok, problems + more


class InducedHopf:
    """The cobar algebra of C with the comultiplication induced by a
    homotopy diagonal.  Serves as the Hopf algebra input of the twisted
    constructions; its element labels are cobar words."""

    def __init__(self, aw, name=""):
        self.aw = aw
        self.C = aw.C
        self.ring = aw.ring
        self.cutoff = aw.cutoff
        self.name = name or ("Omega~(%s)" % aw.name)
        self.omega = CobarAlgebra(self.C, name=self.name)
        self.omega_tensor = CobarAlgebra(aw.tensorC)
        self.tsq = TensorSquare(self.omega, self.omega)
        self._split = letterwise_split(self.omega_tensor, self.tsq)
        self._psi_letter_cache = {}
        self._psi_cache = {}
        self.unit_label = UNIT_WORD

    # -- algebra / complex interface -------------------------------------
    def basis(self, n, max_weight=None):
        return self.omega.words(n, max_weight)

    def degree(self, word):
        return self.omega.degree(word)

    def weight(self, word):
        return self.omega.weight(word)

    def d_of(self, word):
        return self.omega.d_word(word)

    def mul(self, w1, w2):
        return Vect.basis(self.ring, concat(w1, w2))

    def to_chain_complex(self, max_weight=None, top=None, name=""):
        return self.omega.to_chain_complex(max_weight, top, name or self.name)

    # -- comultiplication ------------------------------------------------
    def psi_letter(self, letter):
        if letter not in self._psi_letter_cache:
            ind = self.aw.psi.induced_letter_value(letter)
            self._psi_letter_cache[letter] = ind.map_terms(self._split)
        return self._psi_letter_cache[letter]

    def psi(self, word):
        """Full comultiplication of a word, over ('t', word, word)."""
        if word not in self._psi_cache:
            acc = self.tsq.unit()
            for l in word[1:]:
                acc = self.tsq.mul(acc, self.psi_letter(l))
            self._psi_cache[word] = acc
        return self._psi_cache[word]

    def delta_red(self, word):
        if word == UNIT_WORD:
            return Vect.zero(self.ring)
        out = Vect(self.ring, dict(self.psi(word).terms))
        out.iadd_term(-1, ("t", word, UNIT_WORD))
        out.iadd_term(-1, ("t", UNIT_WORD, word))
        return out

    def coassociativity_defects(self):
        """(psi (x) 1)psi - (1 (x) psi)psi on every letter; both sides are
        algebra maps, so letters decide.  Nonempty exactly when the
        homotopy diagonal is not balanced enough for a genuine Hopf
        structure."""
        defects = []
        for letter in sorted(self.omega.alg.letters, key=label_key):
            lhs = Vect(self.ring)
            rhs = Vect(self.ring)
            for (_, u, v), c in self.psi(("w", letter)).items():
                for (_, a, b), c2 in self.psi(u).items():
                    lhs.iadd_term(self.ring.mul(c, c2), ("t", a, b, v))
                for (_, a, b), c2 in self.psi(v).items():
                    rhs.iadd_term(self.ring.mul(c, c2), ("t", u, a, b))
            if not (lhs - rhs).is_zero():
                defects.append((letter, lhs - rhs))
        return defects

    @property
    def coassociative(self):
        return not self.coassociativity_defects()

    def chain_map_defects(self):
        """psi d - (d (x) 1 + 1 (x) d) psi on every letter."""
        defects = []
        for letter in sorted(self.omega.alg.letters, key=label_key):
            word = ("w", letter)
            lhs = self.omega.d_word(word).map_terms(self.psi)
            rhs = self.psi(word).map_terms(self.tsq.diff)
            if not (lhs - rhs).is_zero():
                defects.append((letter, lhs - rhs))
        return defects


def aw_sphere(n, ring, cutoff, label=None):
    """The strict homotopy diagonal on a sphere coalgebra."""
    from .coalg import sphere_model
    return AWCoalgebra.strict(sphere_model(n, ring, cutoff, label))


def aw_coproduct(A, Ap, name=""):
    """Homotopy diagonal on the coproduct coalgebra: each summand keeps its
    own family, pushed through the inclusions."""
    E = direct_sum(A.C, Ap.C)
    TE = tensor_coalgebra(E, E)

    def mk_push(tag):
        def wrap(l):
            return l if l == UNIT else (tag, l)

        def push(label):
            parts = []
            for p in label[1:]:
                (_, a, b) = p
                parts.append(("tp", wrap(a), wrap(b)))
            return Vect.basis(E.ring, ("t",) + tuple(parts))
        return push

    comps = {}
    for tag, src in (("inl", A), ("inr", Ap)):
        push = mk_push(tag)
        for k, table in src.psi.components.items():
            comps.setdefault(k, {})
            for g, v in table.items():
                comps[k][(tag, g)] = v.map_terms(push)
    fam = SHFamily(E, TE, comps, name="Psi-coproduct")
    return AWCoalgebra(E, fam, name=name or E.name)
