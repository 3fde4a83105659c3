"""
Independent reference computations. None of these import the package;
they use plain integers, floats and the standard library so that their
agreement with the library means something.
"""

import math
from fractions import Fraction
from itertools import combinations

import numpy as np


# -- Tukey depth by angular sweep (floats on exact differences) -------------

def tukey_depth_sweep(c, pts):
    """Closed half-plane depth of c among planar points."""
    vs = [(float(Fraction(x) - Fraction(c[0])), float(Fraction(y) - Fraction(c[1])))
          for x, y in pts]
    at_c = sum(1 for vx, vy in vs if vx == 0 and vy == 0)
    vs = [v for v in vs if v != (0.0, 0.0)]
    if not vs:
        return at_c
    crit = []
    for vx, vy in vs:
        a = math.atan2(vy, vx)
        crit += [(a + math.pi / 2) % (2 * math.pi), (a - math.pi / 2) % (2 * math.pi)]
    crit = sorted(crit)
    mids = [(crit[i] + crit[i + 1]) / 2 for i in range(len(crit) - 1)]
    mids.append((crit[-1] + crit[0] + 2 * math.pi) / 2 % (2 * math.pi))
    best = len(vs)
    for t in mids:
        ux, uy = math.cos(t), math.sin(t)
        best = min(best, sum(1 for vx, vy in vs if ux * vx + uy * vy >= 0))
    return best + at_c


def random_rational_point(rng, lo=-10, hi=10, den=3):
    q = int(rng.integers(1, den + 1))
    return (Fraction(int(rng.integers(lo * q, hi * q + 1)), q),
            Fraction(int(rng.integers(lo * q, hi * q + 1)), q))


# -- Radon partitions of four planar points via orientation tests -----------

def orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def general_position4(pts):
    return all(orient(*t) != 0 for t in combinations(pts, 3)) and len(set(pts)) == 4


def segments_cross(a, b, c, d):
    return (orient(a, b, c) * orient(a, b, d) < 0) and (orient(c, d, a) * orient(c, d, b) < 0)


def in_triangle(p, a, b, c):
    s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)]
    return all(x > 0 for x in s) or all(x < 0 for x in s)


def radon4(pts):
    """The unique Radon partition of 4 planar points in general position."""
    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        if segments_cross(pts[i], pts[j], pts[k], pts[l]):
            return sorted([[i, j], [k, l]])
    for i in range(4):
        rest = [j for j in range(4) if j != i]
        if in_triangle(pts[i], *[pts[j] for j in rest]):
            return sorted([[i], rest])
    raise AssertionError("no Radon partition found")


# -- Gaussian binomials at q = -1 by subset sums ----------------------------

def gaussian_binomial_at_minus1(n, k):
    """sum over k-subsets S of {1..n} of (-1)^(sum S - k(k+1)/2)."""
    base = k * (k + 1) // 2
    return sum((-1) ** (sum(S) - base) for S in combinations(range(1, n + 1), k))


# -- Hilbert series of the coinvariant algebra ------------------------------

def coinvariant_hilbert(n):
    """Coefficients of prod_{i=1}^{n} (1 + q + ... + q^{i-1})."""
    poly = [1]
    for i in range(1, n + 1):
        poly = list(np.convolve(poly, [1] * i))
    return [int(x) for x in poly]


# -- mod 2 ideal membership by linear algebra --------------------------------

def _monomials(n, k):
    if n == 1:
        return [(k,)]
    out = []
    for a in range(k, -1, -1):
        out += [(a,) + rest for rest in _monomials(n - 1, k - a)]
    return out


def _mul(P, Q):
    out = {}
    for a in P:
        for b in Q:
            m = tuple(x + y for x, y in zip(a, b))
            out[m] = out.get(m, 0) ^ 1
    return {m for m, c in out.items() if c}


def _elementary(n, j):
    return {tuple(int(i in S) for i in range(n)) for S in combinations(range(n), j)}


def flag_class_oracle(d, v, w, m):
    """Is prod_{i <= d-v < j <= 2d-v-w} (x_i + x_j), to the power m-1,
    outside the ideal of symmetric polynomials without constant term over F2?"""
    n = d + 1
    a, b = d - v, d - w
    P = {tuple([0] * n)}
    for i in range(a):
        for j in range(a, a + b):
            P = _mul(P, {tuple(int(t == i) for t in range(n)), tuple(int(t == j) for t in range(n))})
    T = {tuple([0] * n)}
    for _ in range(m - 1):
        T = _mul(T, P)
    if not T:
        return False
    k = sum(next(iter(T)))
    if k == 0:
        return True
    mons = _monomials(n, k)
    index = {mm: i for i, mm in enumerate(mons)}
    # the degree-k part of the ideal: e_j times all monomials of degree k-j
    rows = []
    for j in range(1, min(n, k) + 1):
        E = _elementary(n, j)
        for mm in _monomials(n, k - j):
            prod = _mul(E, {mm})
            rows.append(sum(1 << index[t] for t in prod))
    target = sum(1 << index[t] for t in T)
    basis = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in basis:
                r ^= basis[h]
            else:
                basis[h] = r
                break
    while target:
        h = target.bit_length() - 1
        if h not in basis:
            return True
        target ^= basis[h]
    return False
