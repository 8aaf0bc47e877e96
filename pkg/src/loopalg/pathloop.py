"""Based-path objects and the loop-space tower.

P(C) adjoins an acyclibility partner bar(c) for every generator: d(c) picks
up -bar(c) and d(bar(c)) = -bar(dc); the comultiplication of bar(c) spreads
the bar across the tensor factors of Delta(c) with Koszul signs.  A homotopy
diagonal on C extends to one on P(C) the same way, slotwise.

The path-loop algebra is the cobar construction on P(C) with the induced
comultiplication; it right-coacts on itself over Omega C by erasing bars in
the second output slot.  The cofixed part of that coaction is the
double-loop model; applied to the coproduct of a source coalgebra with
P(C) along a map to C, the same construction yields the homotopy-fiber
model.
"""

from .vectors import Vect, label_key, label_str, bilinear
from .coalg import UNIT, DGCoalgebra, tensor_coalgebra, direct_sum
from .tensoralg import FreeAlgebra, UNIT_WORD, concat
from .cobar import CobarAlgebra, s_letter, TwistedHopfTensor
from .shfamily import SHFamily, AWCoalgebra, InducedHopf, TensorSquare


def bar(label):
    return ("bar", label)


def path_object(C, name=""):
    """The based-path coalgebra on X + bar(X): acyclic, with
    d(x) = dx - bar(x), d(bar x) = -bar(dx), and the comultiplication of
    bar(x) obtained by barring one tensor factor of Delta(x) at a time."""
    for g, deg in C.gens.items():
        if deg < 2:
            raise ValueError("path object needs generators in degree >= 2; "
                             "%s has degree %d" % (label_str(g), deg))
        if isinstance(g, tuple) and g and g[0] == "bar":
            raise ValueError("path object cannot be iterated: generator "
                             "%s is already barred" % (label_str(g),))
    ring = C.ring
    gens = {}
    weights = {}
    d = {}
    delta = {}
    for g, deg in C.gens.items():
        gens[g] = deg
        gens[bar(g)] = deg - 1
        weights[g] = C.weights.get(g, 1)
        weights[bar(g)] = C.weights.get(g, 1)
        dv = Vect(ring, dict(C.d_of(g).terms))
        dv.iadd_term(-1, bar(g))
        d[g] = dv
        dbar = Vect(ring, [(bar(o), ring.neg(c)) for o, c in C.d_of(g).items()])
        if not dbar.is_zero():
            d[bar(g)] = dbar
        dl = C.delta_red(g)
        if not dl.is_zero():
            delta[g] = dl
            dlbar = Vect(ring)
            for (_, a, b), c in dl.items():
                dlbar.iadd_term(c, ("t", bar(a), b))
                s = -1 if C.degree(a) % 2 else 1
                dlbar.iadd_term(ring.mul(s, c), ("t", a, bar(b)))
            delta[bar(g)] = dlbar
    return DGCoalgebra(ring, C.cutoff, gens, d, delta,
                       name=name or ("P(%s)" % C.name), weights=weights)


# Sign rule for barring a slot of a level-k homotopy-diagonal term: the
# Koszul sign of moving the degree -1 bar operator past the earlier slots,
# plus a level correction for the pair index i that was barred (the
# desuspension signs of the induced cobar map see that pair's degree drop
# by one).  The correction exponent is
# BAR_EXTRA[0]*(k - 1 - i) + BAR_EXTRA[1]*i, and (1, 1), a global
# (-1)^(k-1), is the convention pinned by requiring all at once: the
# extended family stays coherent, the induced comultiplication on the
# path cobar algebra is a coassociative chain map, and the bar-erasing
# coaction satisfies the loop-concatenation derivation identities.
BAR_EXTRA = (1, 1)


def extend_psi(A, name=""):
    """Extend a homotopy diagonal on C to one on P(C).  Unbarred
    generators keep their components; bar(g) gets every term of Psi_k(g)
    with one slot barred (the unit cannot be barred), with Koszul and
    regrading signs."""
    PC = path_object(A.C)
    T = tensor_coalgebra(PC, PC)
    ring = A.ring
    comps = {}
    for k, table in A.psi.components.items():
        comps[k] = {}
        for g, v in table.items():
            comps[k][g] = v
            out = Vect(ring)
            for label, coef in v.items():
                flat = []
                for p in label[1:]:
                    (_, a, b) = p
                    flat.append(a)
                    flat.append(b)
                pre = 0
                for t, e in enumerate(flat):
                    if e != UNIT:
                        i = t // 2
                        exp = pre + BAR_EXTRA[0] * (k - 1 - i) + BAR_EXTRA[1] * i
                        sign = -1 if exp % 2 else 1
                        parts = []
                        for j in range(0, len(flat), 2):
                            a, b = flat[j], flat[j + 1]
                            if t == j:
                                a = bar(a)
                            elif t == j + 1:
                                b = bar(b)
                            parts.append(("tp", a, b))
                        out.iadd_term(ring.mul(sign, coef), ("t",) + tuple(parts))
                    pre += A.C.degree(e) if e != UNIT else 0
            if not out.is_zero():
                comps[k][bar(g)] = out
    fam = SHFamily(PC, T, comps, name="Psi~")
    return AWCoalgebra(PC, fam, name=name or PC.name)


class PathLoop:
    """The cobar algebra on P(C) with its induced comultiplication and the
    right coaction over Omega C that erases bars."""

    def __init__(self, A, name=""):
        self.base = A
        self.ring = A.ring
        self.cutoff = A.cutoff
        self.name = name or ("PL(%s)" % A.name)
        self.pc_aw = extend_psi(A)
        self.hopf = InducedHopf(self.pc_aw, name=self.name)
        self.omega = self.hopf.omega
        self.base_hopf = InducedHopf(A)
        self.omega_base = self.base_hopf.omega
        self._nu_cache = {}

    def project_word(self, word):
        """Omega(pi): kill words containing a barred letter; unbarred
        letters are shared with Omega C."""
        for l in word[1:]:
            if l[1][0] == "bar" if isinstance(l[1], tuple) else False:
                return Vect.zero(self.ring)
        return Vect.basis(self.ring, word)

    def nu(self, word):
        """The full coaction (1 (x) Omega pi) psi~ as a Vect over
        ('t', path-loop word, base word)."""
        if word not in self._nu_cache:
            out = Vect(self.ring)
            for (_, u, v), c in self.hopf.psi(word).items():
                keep = True
                for l in v[1:]:
                    if isinstance(l[1], tuple) and l[1][0] == "bar":
                        keep = False
                        break
                if keep:
                    out.iadd_term(c, ("t", u, v))
            self._nu_cache[word] = out
        return self._nu_cache[word]

    def nu_bar(self, word):
        out = Vect(self.ring, dict(self.nu(word).terms))
        out.iadd_term(-1, ("t", word, UNIT_WORD))
        return out

    def kappa(self, vect):
        """The degree -1 derivation of Omega C into the path-loop algebra
        with kappa(s[c]) = -s[bar c]."""
        values = {}
        for letter in self.omega_base.alg.letters:
            values[letter] = Vect.basis(self.ring,
                                        ("w", s_letter(bar(letter[1]))), -1)
        fn = self.omega_base.alg.derivation(values, -1)
        return vect.map_terms(fn)

    def include_base(self, vect):
        """Omega C words are path-loop words verbatim."""
        return vect

    def to_chain_complex(self, max_weight=None, top=None, name=""):
        return self.omega.to_chain_complex(max_weight, top, name or self.name)


class CofixedSubalgebra:
    """The degreewise kernel of a reduced coaction inside a word algebra,
    as a chain complex with a product.

    ambient: an algebra with ring, words(n, max_weight), degree, weight,
    d_word/d_vect, mul; coaction_bar: word -> Vect over ('t', word, hword).
    When the ambient alphabet has degree-0 letters the computation is run
    per weight block (the coaction and differential must preserve the
    weight for the blocks to be exact; this holds in the primitive
    situations that produce degree-0 letters)."""

    def __init__(self, ambient, coaction_bar, cutoff, max_weight=None,
                 name=""):
        self.ambient = ambient
        self.ring = ambient.ring
        self.coaction_bar = coaction_bar
        self.cutoff = cutoff
        self.max_weight = max_weight
        self.blocked = not ambient.alg.finite_type if hasattr(ambient, "alg") \
            else not ambient.finite_type
        if self.blocked and max_weight is None:
            raise ValueError("degree-0 letters in the ambient algebra: a "
                             "weight bound is required")
        self.name = name or ("cofixed(%s)" % getattr(ambient, "name", ""))
        self._kernels = {}
        self._bases = {}
        self._solvers = {}

    def _words(self, n, w=None):
        if w is None:
            return self.ambient.words(n, self.max_weight)
        return [u for u in self.ambient.words(n, w)
                if self.ambient.weight(u) == w]

    def _kernel(self, n, w=None):
        """Kernel vectors of the reduced coaction on the (degree, weight)
        block, as Vects over ambient words."""
        from . import linalg
        key = (n, w)
        if key in self._kernels:
            return self._kernels[key]
        words = self._words(n, w)
        rows = {}
        cols = []
        for u in words:
            img = self.coaction_bar(u)
            cols.append(img)
            for label in img.terms:
                if label not in rows:
                    rows[label] = len(rows)
        row_order = sorted(rows, key=label_key)
        rows = {l: i for i, l in enumerate(row_order)}
        mat = [[0 if self.ring.kind == "Z" else self.ring.zero
                for _ in words] for _ in row_order]
        for j, img in enumerate(cols):
            for label, c in img.terms.items():
                mat[rows[label]][j] = c
        if self.ring.kind == "Z":
            ker = linalg.kernel_saturated(mat) if row_order else \
                [[1 if i == j else 0 for i in range(len(words))]
                 for j in range(len(words))]
        else:
            ker = linalg.kernel_field(mat, self.ring) if row_order else \
                [[self.ring.one if i == j else self.ring.zero
                  for i in range(len(words))] for j in range(len(words))]
        vecs = [Vect(self.ring, list(zip(words, col))) for col in ker]
        self._kernels[key] = (words, vecs)
        return self._kernels[key]

    def blocks(self, n):
        if not self.blocked:
            return [None]
        return list(range(0, self.max_weight + 1))

    def basis(self, n):
        """Synthetic labels ('k', n, i) or ('k', n, w, i) per block."""
        if n in self._bases:
            return self._bases[n]
        out = []
        for w in self.blocks(n):
            _, vecs = self._kernel(n, w)
            for i in range(len(vecs)):
                out.append(("k", n, i) if w is None else ("k", n, w, i))
        self._bases[n] = out
        return out

    def vector_of(self, label):
        if len(label) == 3:
            (_, n, i) = label
            w = None
        else:
            (_, n, w, i) = label
        return self._kernel(n, w)[1][i]

    def rank(self, n):
        return len(self.basis(n))

    def _solver(self, n, w):
        """Cached row reduction of [K | I] for the block's kernel matrix K;
        solving K x = v then costs one sparse matrix-vector product."""
        from . import linalg
        from .rings import QQ
        key = (n, w)
        if key in self._solvers:
            return self._solvers[key]
        words, vecs = self._kernel(n, w)
        fld = QQ if self.ring.kind == "Z" else self.ring
        k = len(vecs)
        nw = len(words)
        aug = []
        for i, u in enumerate(words):
            row = [fld.norm(v.terms.get(u, 0)) for v in vecs]
            row += [fld.one if j == i else fld.zero for j in range(nw)]
            aug.append(row)
        r, pivots = linalg.rref(aug, fld)
        index = {u: i for i, u in enumerate(words)}
        self._solvers[key] = (index, fld, k, r, pivots)
        return self._solvers[key]

    def coordinates(self, n, vect):
        """Express a Vect over ambient words (lying in the cofixed part of
        degree n) in the synthetic basis."""
        from fractions import Fraction
        out = []
        for w in self.blocks(n):
            index, fld, k, r, pivots = self._solver(n, w)
            part = [(u, c) for u, c in vect.items()
                    if w is None or self.ambient.weight(u) == w]
            if not k:
                if part:
                    raise ValueError("vector outside the cofixed block")
                continue
            dense = [fld.zero] * len(index)
            for u, c in part:
                if u not in index:
                    raise ValueError("vector leaves the stored block")
                dense[index[u]] = fld.norm(c)
            sol = [fld.zero] * k
            for i, pc in enumerate(pivots):
                acc = fld.zero
                row = r[i]
                for j, x in enumerate(dense):
                    if not fld.is_zero(x):
                        acc = fld.add(acc, fld.mul(row[k + j], x))
                if pc < k:
                    sol[pc] = acc
                elif not fld.is_zero(acc):
                    raise ValueError("vector outside the cofixed block")
            if self.ring.kind == "Z":
                if any(Fraction(x).denominator != 1 for x in sol):
                    raise ValueError("coordinates are not integral")
                sol = [int(x) for x in sol]
            out.extend(sol)
        return out

    def diff(self, label):
        """Differential in synthetic coordinates."""
        n = label[1]
        dv = self.ambient.d_vect(self.vector_of(label))
        coords = self.coordinates(n - 1, dv)
        basis = self.basis(n - 1)
        return Vect(self.ring, list(zip(basis, coords)))

    def mul_labels(self, l1, l2):
        n = l1[1] + l2[1]
        prod = self.ambient.mul(self.vector_of(l1), self.vector_of(l2))
        coords = self.coordinates(n, prod)
        return Vect(self.ring, list(zip(self.basis(n), coords)))

    def mul(self, u, v):
        return bilinear(self.ring, u, v, self.mul_labels)

    def expand(self, vect):
        """Synthetic coordinates back to ambient words."""
        out = Vect(self.ring)
        for label, c in vect.items():
            out = out + self.vector_of(label).scale(c)
        return out

    def to_chain_complex(self, top=None, name=""):
        from .chain import ChainComplex
        top = self.cutoff if top is None else top
        bases = {n: self.basis(n) for n in range(top + 1)}
        return ChainComplex(self.ring, bases, self.diff, self.cutoff,
                            name=name or self.name)


def double_loop(A, max_weight=None, name=""):
    """The cofixed part of the path-loop algebra under its coaction over
    Omega C."""
    pl = PathLoop(A)
    return CofixedSubalgebra(pl.omega, pl.nu_bar, A.cutoff,
                             max_weight=max_weight,
                             name=name or ("DL(%s)" % A.name)), pl


class FiberCoaction:
    """Coaction for the homotopy-fiber model: on the cobar algebra of
    C' (+) P(C), push the second comultiplication slot through the map
    induced by (omega + pi) : C' (+) P(C) -> C."""

    def __init__(self, Aprime, A, omega_family, name=""):
        self.ring = A.ring
        self.cutoff = min(A.cutoff, Aprime.cutoff)
        self.Aprime = Aprime
        self.A = A
        self.family = omega_family
        self.E = None
        self.name = name
        self.aw_sum = _coproduct_with_path(Aprime, A)
        self.hopf = InducedHopf(self.aw_sum, name=name or "E")
        self.omega = self.hopf.omega
        self.omega_base = CobarAlgebra(A.C)
        self._letter_cache = {}
        self._push = self.omega.alg.algebra_map(
            self._push_letter, self.omega_base.mul, self.omega_base.unit)
        self._nu_cache = {}

    def _push_letter(self, letter):
        if letter not in self._letter_cache:
            g = letter[1]
            tag, inner = g
            if tag == "inl":
                val = self.family.induced_letter_value(s_letter(inner))
            else:
                if isinstance(inner, tuple) and inner[0] == "bar":
                    val = Vect.zero(self.ring)
                else:
                    val = Vect.basis(self.ring, ("w", s_letter(inner)))
            self._letter_cache[letter] = val
        return self._letter_cache[letter]

    def nu(self, word):
        if word not in self._nu_cache:
            out = Vect(self.ring)
            for (_, u, v), c in self.hopf.psi(word).items():
                img = self._push(v)
                for w2, c2 in img.items():
                    out.iadd_term(self.ring.mul(c, c2), ("t", u, w2))
            self._nu_cache[word] = out
        return self._nu_cache[word]

    def nu_bar(self, word):
        out = Vect(self.ring, dict(self.nu(word).terms))
        out.iadd_term(-1, ("t", word, UNIT_WORD))
        return out


def _coproduct_with_path(Aprime, A):
    from .shfamily import aw_coproduct
    return aw_coproduct(Aprime, extend_psi(A))


def loop_fiber(Aprime, A, omega_family, max_weight=None, name=""):
    """Homotopy-fiber model of a map (C', Psi') -> (C, Psi) given by a
    homotopy-coherent family: the cofixed part of Omega(C' (+) P(C))
    under the pushed coaction."""
    fc = FiberCoaction(Aprime, A, omega_family, name=name)
    return CofixedSubalgebra(fc.omega, fc.nu_bar, fc.cutoff,
                             max_weight=max_weight,
                             name=name or "hofiber"), fc


def identity_family(A):
    """The strict homotopy family of the identity map of C."""
    letter_map = {g: Vect.basis(A.ring, g) for g in A.C.gens}
    return SHFamily.strict(A.C, A.C, letter_map, name="id")


def trivial_family(Aprime, A):
    """The strict family of the trivial (basepoint) map C' -> C: zero on
    positive degrees."""
    return SHFamily(Aprime.C, A.C, {}, name="trivial")
