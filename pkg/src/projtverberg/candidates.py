"""
Deterministic streams of candidate flats for the combinatorial search
strategies.

Piece counts only change when a candidate passes through special
positions relative to the data, so flats spanned by data points and
intersections of such flats are the natural first guesses.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np

from . import linalg
from .geometry import LinSubspace, canonicalize, meet, span


def _point_flats(coords, k):
    """Flats of rank k spanned by k of the given vectors."""
    seen = set()
    for S in combinations(range(len(coords)), k):
        F = canonicalize([coords[i] for i in S], len(coords[0]))
        if F.rank == k and F not in seen:
            seen.add(F)
            yield F


def spanned_flats(coords, target):
    """Flats of rank `target` spanned by data points."""
    yield from _point_flats(coords, target)


def meet_flats(coords, target):
    """Intersections of two point-spanned flats with rank exactly `target`."""
    N = len(coords[0])
    seen = set()
    for a in range(max(target + 1, 2), N):
        b = N + target - a
        if b < a or b >= N:
            continue
        Fa = list(_point_flats(coords, a))
        Fb = Fa if a == b else list(_point_flats(coords, b))
        pairs = combinations(Fa, 2) if a == b else ((x, y) for x in Fa for y in Fb)
        for F, G in pairs:
            M = meet(F, G)
            if M.rank == target and M not in seen:
                seen.add(M)
                yield M


def random_flat(rng, N, target, scale=12):
    rows = rng.integers(-scale, scale + 1, size=(target, N))
    F = canonicalize([[int(x) for x in row] for row in rows], N)
    return F if F.rank == target else None


def perturbations(base, rng, count, scale=4, den=64):
    """Small rational perturbations of a flat's basis."""
    for _ in range(count):
        rows = []
        for row in base.basis:
            rows.append([x + Fraction(int(rng.integers(-scale, scale + 1)), den) for x in row])
        F = canonicalize(rows, base.ambient)
        if F.rank == base.rank:
            yield F


def subspace_candidates(coords, target, rng=None, limit=5000, extra=()):
    """Stream of distinct candidate flats of the given rank.

    Order: the extra flats given by the caller, point-spanned flats,
    meets of point-spanned flats, then random flats. At most `limit`.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    N = len(coords[0])
    # dedupe projectively identical points first
    uniq = []
    seen_pts = set()
    for c in coords:
        key = linalg.primitive_integer(c)
        if key not in seen_pts:
            seen_pts.add(key)
            uniq.append(key)

    seen = set()
    count = 0

    def emit(F):
        nonlocal count
        if F is None or F in seen or F.rank != target:
            return False
        seen.add(F)
        count += 1
        return True

    streams = [iter(extra), spanned_flats(uniq, target), meet_flats(uniq, target)]
    for stream in streams:
        for F in stream:
            if emit(F):
                yield F
            if count >= limit:
                return
    # pad with coordinate flats and random flats
    if target <= N:
        for S in combinations(range(N), target):
            F = span([[int(i == j) for j in range(N)] for i in S], N)
            if emit(F):
                yield F
            if count >= limit:
                return
    tries = 0
    while count < limit and tries < 4 * limit:
        tries += 1
        F = random_flat(rng, N, target)
        if emit(F):
            yield F


def flat_from_float(M, target, den_bound):
    """Rationalize the row space of a float matrix via its echelon form."""
    M = np.asarray(M, dtype=float)
    # orthonormal basis, then echelon form numerically
    q, _ = np.linalg.qr(M.T)
    B = q[:, :target].T
    rows = []
    Bw = B.copy()
    piv_cols = []
    for r in range(target):
        c = int(np.argmax(np.abs(Bw[r])))
        piv_cols.append(c)
        Bw[r] = Bw[r] / Bw[r, c]
        for i in range(target):
            if i != r:
                Bw[i] = Bw[i] - Bw[i, c] * Bw[r]
    for row in Bw:
        rows.append([Fraction(float(x)).limit_denominator(den_bound) for x in row])
    F = canonicalize(rows, M.shape[1])
    return F if F.rank == target else None
