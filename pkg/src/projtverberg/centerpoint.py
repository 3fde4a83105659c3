"""
Center points: affine Tukey depth and classical center points, the
"dual" ray-crossing version for hyperplane families, and the search for
projective center subspaces W for a fixed V.

The projective search mirrors the weighted quadratic form construction:
for weights p on the points and eps > 0 the form

    q(f) = sum_i p_i f(x_i)^2 + eps <f, f>

on linear forms is positive definite; the q-orthogonal complement of the
forms vanishing on V is the set of forms vanishing on a candidate W.
Everything the search proposes is re-verified exactly.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import linalg
from .candidates import subspace_candidates
from .geometry import (LinSubspace, PointConfig, ProjPoint, annihilator,
                       canonicalize, enumerate_open_cells, meet)
from .linalg import dot, sign, vec
from .pieces import Side, count_matrix, verify_center_subspace
from .topology import tverberg_r

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    weights: tuple

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("negative weight")
        if not self.weights:
            raise ValueError("empty weight vector")

    @classmethod
    def uniform(cls, n):
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    @classmethod
    def from_float(cls, p, den_bound=10**6):
        """Round to rationals with bounded denominators, renormalized exactly."""
        q = [Fraction(float(x)).limit_denominator(den_bound) for x in p]
        q = [max(x, Fraction(0)) for x in q]
        s = sum(q)
        if s == 0:
            q = [Fraction(1)] * len(q)
            s = Fraction(len(q))
        return cls(tuple(x / s for x in q))

    @property
    def support(self):
        return frozenset(i for i, w in enumerate(self.weights) if w > 0)


@dataclass
class SearchConfig:
    eps_schedule: tuple = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
    multistart: int = 2
    max_iter: int = 25
    descent_den: int = 1000
    den_bound: int = 10**6
    seed: int = 0
    max_candidates: int = 4000
    strategies: tuple = ("a", "b")
    max_partition_n: int = 12
    threads: int = field(default_factory=lambda: default_threads())

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be positive")
        eps = list(self.eps_schedule)
        if not eps or any(e <= 0 for e in eps):
            raise ValueError("epsilon values must be positive")
        if any(b >= a for a, b in zip(eps, eps[1:])):
            raise ValueError("epsilon schedule must be strictly decreasing")

    def rng(self, salt=0):
        return np.random.default_rng([self.seed, salt])


def default_threads():
    """Worker count from PROJTVERBERG_THREADS, default 1."""
    raw = os.environ.get("PROJTVERBERG_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# -- affine center points ---------------------------------------------------

def _affine_points(X):
    if isinstance(X, PointConfig):
        pts = [p.to_affine() for p in X.points]
        if any(p is None for p in pts):
            raise ValueError("points at infinity have no affine coordinates")
        return pts
    return [vec(x) for x in X]


def tukey_depth(c, X):
    """Minimum number of points of X in a closed half-space containing c."""
    pts = _affine_points(X)
    if not pts:
        return 0
    c = vec(c)
    diffs = [tuple(a - b for a, b in zip(x, c)) for x in pts]
    cells = enumerate_open_cells(diffs)
    best = len(pts)
    for cell in cells:
        k = sum(1 for s in cell.signs if s >= 0)
        best = min(best, k)
    return best


def _affine_hyperplane(points):
    """(a, b) with a.x = b through the given d affine points, or None."""
    rows = [tuple(p) + (Fraction(-1),) for p in points]
    ns = linalg.nullspace(rows, len(rows[0]))
    if len(ns) != 1:
        return None
    v = ns[0]
    a, b = v[:-1], v[-1]
    if not any(a):
        return None
    return tuple(a), b


def _intersection(planes, d):
    A = [list(a) for a, _ in planes]
    b = [bb for _, bb in planes]
    if linalg.rank(A) < d:
        return None
    return linalg.solve(A, b)


def classical_center_point(X):
    """A point of Tukey depth >= ceil(n/(d+1)), maximizing depth over candidates."""
    pts = _affine_points(X)
    n = len(pts)
    if n == 0:
        raise ValueError("empty configuration")
    d = len(pts[0])
    cands = set(pts)
    for a, b in combinations(pts, 2):
        cands.add(tuple((x + y) / 2 for x, y in zip(a, b)))
    planes = set()
    for S in combinations(pts, d):
        h = _affine_hyperplane(S)
        if h is not None:
            a, b = h
            prim = linalg.primitive_integer(tuple(a) + (b,))
            planes.add((prim[:-1], prim[-1]))
    planes = sorted(planes)
    for S in combinations(planes, d):
        x = _intersection(S, d)
        if x is not None:
            cands.add(x)
    bound = -(-n // (d + 1))
    best, best_depth = None, -1
    for c in sorted(cands):
        k = tukey_depth(c, pts)
        if k > best_depth:
            best, best_depth = c, k
    if best_depth < bound:
        raise AssertionError("center point bound violated: depth %d < %d" % (best_depth, bound))
    return best, best_depth


# -- the ray-crossing ("dual") center point ---------------------------------

def _hyperplanes(H):
    out = []
    for a, b in H:
        a = vec(a)
        if not any(a):
            raise ValueError("hyperplane with zero normal")
        out.append((a, linalg.to_fraction(b)))
    return out


def min_ray_crossings(c, H):
    """Minimum over rays from c of the number of hyperplanes a.x = b they meet."""
    H = _hyperplanes(H)
    if not H:
        return 0
    c = vec(c)
    gaps = [b - dot(a, c) for a, b in H]
    cells = enumerate_open_cells([a for a, _ in H])
    best = len(H)
    for cell in cells:
        k = 0
        for g, s in zip(gaps, cell.signs):
            if g == 0 or sign(g) == s:
                k += 1
        best = min(best, k)
    return best


def dual_center_point_search(H, d=None):
    """A point maximizing min_ray_crossings over arrangement vertices and samples."""
    H = _hyperplanes(H)
    if not H:
        raise ValueError("no hyperplanes")
    d = d or len(H[0][0])
    cands = set()
    verts = []
    for S in combinations(H, d):
        x = _intersection(S, d)
        if x is not None:
            verts.append(x)
    verts = sorted(set(verts))
    cands.update(verts)
    for a, b in H:
        s = dot(a, a)
        cands.add(tuple(b * x / s for x in a))
    for x, y in combinations(verts, 2):
        cands.add(tuple((p + q) / 2 for p, q in zip(x, y)))
    if verts:
        cands.add(tuple(sum(col) / len(verts) for col in zip(*verts)))
    cands.add(tuple(Fraction(0) for _ in range(d)))
    best, best_val = None, -1
    for c in sorted(cands):
        k = min_ray_crossings(c, H)
        if k > best_val:
            best, best_val = c, k
    return best, best_val


# -- the weighted quadratic form construction -------------------------------

def gram_matrix(p, lambdas, eps):
    """Q = sum_i p_i l_i l_i^T + eps I, checked positive definite exactly."""
    eps = linalg.to_fraction(eps) if not isinstance(eps, float) else Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    weights = p.weights if isinstance(p, WeightVector) else vec(p)
    lambdas = [vec(l) for l in lambdas]
    if len(weights) != len(lambdas):
        raise ValueError("need one weight per form")
    N = len(lambdas[0])
    Q = [[eps if i == j else Fraction(0) for j in range(N)] for i in range(N)]
    for t, l in zip(weights, lambdas):
        if not any(l):
            raise ValueError("zero linear form")
        if t:
            for i in range(N):
                if l[i]:
                    ti = t * l[i]
                    row = Q[i]
                    for j in range(N):
                        if l[j]:
                            row[j] += ti * l[j]
    if not linalg.is_positive_definite(Q):
        raise ArithmeticError("Gram matrix not positive definite")
    return Q


def w_from_weights(V, Q):
    """The Q-orthogonal complement {x : x^T Q v = 0 for all v in V}."""
    if not linalg.is_positive_definite(Q):
        raise ValueError("Q must be positive definite")
    rows = [tuple(dot(Qrow, v) for Qrow in Q) for v in V.basis]
    W = annihilator(canonicalize(rows, V.ambient)) if rows else canonicalize([], V.ambient)
    if rows:
        assert W.rank == V.ambient - V.rank
        # trivial intersection <=> the stacked bases have full rank
        assert linalg.rank(list(V.basis) + list(W.basis)) == V.ambient
    return W


def subspace_from_weights(V, X, p, eps):
    """Candidate W for V from weights on the points of X.

    Works on the dual side: the forms vanishing on V form A, the q-orthogonal
    complement B of A is the set of forms vanishing on W, so W = ann(B).
    """
    A = annihilator(V)
    Q = gram_matrix(p, X.coords(), eps)
    return annihilator(w_from_weights(A, Q))


def _float_subspace(A_basis, coords, p, eps):
    Xm = np.asarray(coords, dtype=float)
    Q = (Xm.T * p) @ Xm + eps * np.eye(Xm.shape[1])
    return (Q @ A_basis.T).T


# -- projective center subspace search --------------------------------------

def _score(vside, W, X, r):
    wside = Side(W, X)
    C = count_matrix(vside, wside)
    m = int(C.min())
    return (max(0, r - m), int((C < r).sum())), m


def _descend(vside, V, X, r, cfg, rng, p0):
    """Derivative-free descent of (deficiency, #bad cell pairs) over the simplex.

    Weights are rounded coarsely (cfg.descent_den) while descending; the
    resulting W is exact either way.
    """
    n = len(X)
    p = np.asarray(p0, dtype=float)
    best = None
    den = cfg.descent_den
    for eps in cfg.eps_schedule:
        eps_q = Fraction(eps).limit_denominator(cfg.den_bound)
        wv = WeightVector.from_float(p, den)
        W = subspace_from_weights(V, X, wv, eps_q)
        score, _ = _score(vside, W, X, r)
        if best is None or score < best[0]:
            best = (score, W)
        if score[0] == 0:
            return best
        for _ in range(cfg.max_iter):
            move = rng.integers(3)
            if move == 0:
                q = p * np.exp(0.5 * rng.standard_normal(n))
            elif move == 1:
                q = p.copy()
                q[rng.integers(n)] += rng.uniform(0.1, 1.0)
            else:
                q = p.copy()
                q[rng.integers(n)] = 0.0
            if q.sum() <= 0:
                continue
            q = q / q.sum()
            wv = WeightVector.from_float(q, den)
            W = subspace_from_weights(V, X, wv, eps_q)
            s, _ = _score(vside, W, X, r)
            if s <= score:
                p, score = q, s
                if s < best[0]:
                    best = (s, W)
                if s[0] == 0:
                    return best
    return best


def search_center_subspace(V, X, r=None, cfg=None, strict=False):
    """Find W of projective dimension d-v-1 with every piece holding >= r points.

    Returns (W, Certificate). The certificate is always an exact
    re-verification; a failing certificate means the search gave up.
    """
    cfg = cfg or SearchConfig()
    d = X.d
    if V.ambient != d + 1:
        raise ValueError("V and X live in different spaces")
    v = V.proj_dim
    if not 0 <= v < d:
        raise ValueError("V must be a proper nonempty flat")
    if r is None:
        r = tverberg_r(len(X), d, v)
    target = d - v
    vside = Side(V, X)
    best = None  # (score, W)

    def consider(W):
        nonlocal best
        if strict and meet(V, W).rank:
            return False
        score, _ = _score(vside, W, X, r)
        if best is None or score < best[0] or (score == best[0] and W.basis < best[1].basis):
            best = (score, W)
        return score[0] == 0

    done = False
    for strategy in cfg.strategies:
        if done:
            break
        if strategy == "a":
            def run(start):
                rng = cfg.rng(start)
                p0 = np.full(len(X), 1.0 / len(X)) if start == 0 else rng.dirichlet(np.ones(len(X)))
                res = _descend(vside, V, X, r, cfg, rng, p0)
                # the eps -> 0 limit of the same weights, when it exists
                return [res[1] if res is not None else None, _limit_subspace(V, X, p0)]

            starts = range(cfg.multistart)
            if cfg.threads > 1:
                with ThreadPoolExecutor(cfg.threads) as pool:
                    results = pool.map(run, starts)
            else:
                results = map(run, starts)
            # merged in start order, so the outcome does not depend on threads
            for found in results:
                if any(W is not None and consider(W) for W in found):
                    done = True
                    break
        elif strategy == "b":
            rng = cfg.rng(10**6)
            for W in subspace_candidates(X.coords(), target, rng=rng, limit=cfg.max_candidates):
                if consider(W):
                    done = True
                    break
        else:
            raise ValueError("unknown strategy %r" % (strategy,))

    W = best[1]
    cert = verify_center_subspace(V, W, X, r, strict=strict, vside=vside)
    cert.details["strategy_done"] = done
    return W, cert


def _limit_subspace(V, X, p):
    """span(Q0 A) for Q0 = sum p_i x_i x_i^T when it has the right rank."""
    A = annihilator(V)
    wv = WeightVector.from_float(p)
    coords = X.coords()
    N = V.ambient
    Q0 = [[sum((t * x[i] * x[j] for t, x in zip(wv.weights, coords)), Fraction(0))
           for j in range(N)] for i in range(N)]
    rows = [tuple(dot(row, a) for row in Q0) for a in A.basis]
    W = canonicalize(rows, N)
    return W if W.rank == A.rank else None
