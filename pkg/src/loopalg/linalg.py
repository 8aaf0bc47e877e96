"""Exact dense linear algebra: Smith normal form over Z (via sympy's
DomainMatrix) and Gaussian elimination over Q / F_p.

Matrices are plain lists of rows.  Everything is arbitrary precision.
"""

from fractions import Fraction

from sympy import ZZ as _SYMPY_ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp as _snf_decomp


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    m, k = len(a), len(b)
    n = len(b[0]) if k else 0
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(n):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def smith_normal_form(mat):
    """Return (D, U, V) with D = U * mat * V, U and V unimodular, and the
    nonzero diagonal of D a divisibility chain.  mat is a list of rows of
    exact integers; shapes may be degenerate (zero rows or columns).
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0 or n == 0:
        return zeros(m, n), identity(m), identity(n)
    dm = DomainMatrix([[_SYMPY_ZZ(int(x)) for x in row] for row in mat], (m, n), _SYMPY_ZZ)
    smf, s, t = _snf_decomp(dm)
    d = [[int(x) for x in row] for row in smf.to_Matrix().tolist()]
    u = [[int(x) for x in row] for row in s.to_Matrix().tolist()]
    v = [[int(x) for x in row] for row in t.to_Matrix().tolist()]
    return d, u, v


def invariant_factors(mat):
    d, _, _ = smith_normal_form(mat)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i]:
            out.append(abs(d[i][i]))
    return out


def kernel_saturated(mat):
    """Columns spanning ker(mat) over Z as a direct summand of the lattice.

    Row-reduces the augmented transpose [mat^T | I] with unimodular row
    operations (Bezout pivots); the identity-block halves of the rows whose
    mat^T half vanished form a basis, saturated because the accumulated
    transform is unimodular.
    """
    from math import gcd
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    aug = [[mat[i][j] for i in range(m)] +
           [1 if t == j else 0 for t in range(n)] for j in range(n)]
    width = m + n
    r = 0
    for col in range(m):
        piv = None
        for i in range(r, n):
            x = aug[i][col]
            if x and (piv is None or abs(x) < abs(aug[piv][col])):
                piv = i
                if abs(x) == 1:
                    break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(r + 1, n):
            b = aug[i][col]
            if not b:
                continue
            a = aug[r][col]
            if b % a == 0:
                q = b // a
                ri, rr = aug[i], aug[r]
                aug[i] = [ri[t] - q * rr[t] for t in range(width)]
            else:
                g = gcd(a, b)
                # Bezout coefficients for a unimodular 2x2 block
                x0, x1 = 1, 0
                y0, y1 = 0, 1
                aa, bb = a, b
                while bb:
                    q, aa, bb = aa // bb, bb, aa % bb
                    x0, x1 = x1, x0 - q * x1
                    y0, y1 = y1, y0 - q * y1
                u, v = -(b // g), a // g
                rr, ri = aug[r], aug[i]
                new_r = [x0 * rr[t] + y0 * ri[t] for t in range(width)]
                new_i = [u * rr[t] + v * ri[t] for t in range(width)]
                aug[r], aug[i] = new_r, new_i
        r += 1
        if r == n:
            break
    return [aug[i][m:] for i in range(r, n)]


def integer_inverse(mat):
    """Inverse of a unimodular integer matrix, exactly."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    _gauss(aug, n)
    out = []
    for i in range(n):
        row = aug[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def _gauss(aug, ncols):
    """Full Gauss-Jordan on the first ncols columns of an augmented
    Fraction matrix; requires those columns to be nonsingular."""
    m = len(aug)
    for col in range(ncols):
        piv = next(i for i in range(col, m) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]


def rref(mat, ring):
    """Reduced row echelon form over a field ring.  Returns (R, pivots)."""
    rows = [[ring.norm(x) for x in row] for row in mat]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if not ring.is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.inv(rows[r][col])
        rows[r] = [ring.mul(inv, x) for x in rows[r]]
        for i in range(m):
            if i != r and not ring.is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [ring.add(a, ring.neg(ring.mul(f, b)))
                           for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank_field(mat, ring):
    _, pivots = rref(mat, ring)
    return len(pivots)


def kernel_field(mat, ring):
    """Columns spanning ker(mat) over a field, in deterministic echelon form."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[ring.one if i == j else ring.zero for i in range(n)] for j in range(n)]
    r, pivots = rref(mat, ring)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    cols = []
    for j in free:
        col = [ring.zero] * n
        col[j] = ring.one
        for i, pc in enumerate(pivots):
            col[pc] = ring.neg(r[i][j])
        cols.append(col)
    return cols


def solve_field(mat, rhs_cols, ring):
    """Solve mat * X = rhs for each rhs column over a field.
    Returns list of solution columns; raises if any system is inconsistent."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    k = len(rhs_cols)
    aug = [[ring.norm(mat[i][j]) for j in range(n)] + [ring.norm(rhs_cols[t][i]) for t in range(k)]
           for i in range(m)]
    r, pivots = rref(aug, ring)
    for i in range(len(pivots)):
        if pivots[i] >= n:
            raise ValueError("inconsistent linear system")
    sols = []
    for t in range(k):
        col = [ring.zero] * n
        for i, pc in enumerate(pivots):
            col[pc] = r[i][n + t]
        sols.append(col)
    # rows of rank beyond pivots are zero by rref; consistency is guaranteed
    # unless a pivot landed in the rhs block, checked above
    return sols


def solve_integer(mat, rhs_cols):
    """Solve mat * X = rhs over Q and verify integrality of the solutions."""
    from .rings import QQ
    sols = solve_field(mat, rhs_cols, QQ)
    out = []
    for col in sols:
        if any(Fraction(x).denominator != 1 for x in col):
            raise ValueError("solution is not integral")
        out.append([int(x) for x in col])
    return out
