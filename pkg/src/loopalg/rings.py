"""Exact coefficient rings: integers, rationals, and prime fields.

Coefficients are plain Python values (int for Z and F_p, Fraction for Q);
a Ring object supplies normalization and arithmetic so that sparse vectors
can stay ring-agnostic.
"""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Ring:
    """An exact coefficient ring: 'Z', 'Q', or 'Fp' with a prime p."""

    def __init__(self, kind, p=None):
        if kind not in ("Z", "Q", "Fp"):
            raise ValueError("unknown ring kind %r" % (kind,))
        if kind == "Fp":
            if p is None or not _is_prime(p):
                raise ValueError("Fp requires a prime p, got %r" % (p,))
        elif p is not None:
            raise ValueError("p only makes sense for Fp")
        self.kind = kind
        self.p = p

    @property
    def is_field(self):
        return self.kind in ("Q", "Fp")

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def norm(self, c):
        """Coerce an int/Fraction into normal form for this ring."""
        if self.kind == "Z":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError("non-integral coefficient over Z: %s" % c)
                return int(c)
            return int(c)
        if self.kind == "Q":
            return Fraction(c)
        if isinstance(c, Fraction):
            num, den = c.numerator, c.denominator
            return (num * pow(den, -1, self.p)) % self.p
        return int(c) % self.p

    def is_zero(self, c):
        return c == 0 if self.kind != "Fp" else c % self.p == 0

    def add(self, a, b):
        c = a + b
        return c % self.p if self.kind == "Fp" else c

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def mul(self, a, b):
        c = a * b
        return c % self.p if self.kind == "Fp" else c

    def inv(self, a):
        if self.kind == "Q":
            return 1 / Fraction(a)
        if self.kind == "Fp":
            return pow(int(a), -1, self.p)
        if a in (1, -1):
            return a
        raise ValueError("nonunit %r over Z" % (a,))

    @property
    def name(self):
        if self.kind == "Z":
            return "Z"
        if self.kind == "Q":
            return "Q"
        return "F2" if self.p == 2 else "Fp:%d" % self.p

    def __eq__(self, other):
        return isinstance(other, Ring) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Ring(%s)" % self.name


ZZ = Ring("Z")
QQ = Ring("Q")
F2 = Ring("Fp", 2)


def ring_from_name(name):
    """Parse a ring name: 'Z', 'Q', 'F2', or 'Fp:<p>'."""
    name = name.strip()
    if name == "Z":
        return ZZ
    if name == "Q":
        return QQ
    if name == "F2":
        return F2
    if name.startswith("Fp:"):
        return Ring("Fp", int(name[3:]))
    raise ValueError("cannot parse ring name %r" % (name,))
