"""
Exact rational linear algebra on lists of Fractions.

Matrices are plain lists of rows. Nothing here touches floating point.
"""

from fractions import Fraction
from math import gcd


def to_fraction(x):
    """Coerce ints, Fractions and "p/q" strings to Fraction.

    Floats are rejected: a float in a certificate path is a bug.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        # numpy integers, gmpy2 mpq and friends
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError("cannot use %r as an exact scalar" % (x,))


def vec(xs):
    return tuple(to_fraction(x) for x in xs)


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def matvec(A, x):
    return tuple(dot(row, x) for row in A)


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns (R, pivots) where R holds only the nonzero rows.
    """
    M = [list(vec(r)) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv != 1:
            M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                Mr = M[r]
                M[i] = [a - f * b for a, b in zip(M[i], Mr)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in M[:r]], pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} as a list of vectors of length ncols."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(A, b):
    """One solution of A x = b, or None if inconsistent."""
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(A):
    n = len(A)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(A)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("singular matrix")
    return [list(row[n:]) for row in R]


def ldl_pivots(Q):
    """Pivots of the symmetric elimination Q = L D L^T (no pivoting).

    All pivots positive <=> Q positive definite.
    """
    M = [list(vec(r)) for r in Q]
    n = len(M)
    pivots = []
    for k in range(n):
        d = M[k][k]
        pivots.append(d)
        if d == 0:
            break
        for i in range(k + 1, n):
            f = M[i][k] / d
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
    return pivots


def is_positive_definite(Q):
    piv = ldl_pivots(Q)
    return len(piv) == len(Q) and all(p > 0 for p in piv)


def primitive_integer(v):
    """Scale a nonzero rational vector to coprime integers, first nonzero > 0."""
    v = vec(v)
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [a // g for a in ints]
    first = next(a for a in ints if a)
    if first < 0:
        ints = [-a for a in ints]
    return tuple(ints)


def sign(x):
    return (x > 0) - (x < 0)
