"""
Projective Tverberg partitions: search and counting for a fixed V,
the transversal version with several point sets and one W, the version
where V is free as well, and the classical Radon oracle.

For fixed (V, W) a partition is valid iff every part meets every closed
piece, so with the minimal pieces as bitmasks the question becomes a
polychromatic colouring problem, solved here by backtracking.
"""

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize

from . import linalg
from .candidates import flat_from_float, subspace_candidates
from .centerpoint import (SearchConfig, WeightVector, _float_subspace,
                          search_center_subspace, subspace_from_weights)
from .geometry import PointConfig, annihilator, canonicalize, meet
from .lp import feasible_point
from .pieces import (Certificate, PartitionWitness, Side, piece_sets,
                     verify_transversal_witness, verify_tverberg_witness)
from .topology import (cell_dimension, prime_power, required_points,
                       thm4_condition, thm6_condition, flag_condition)

log = logging.getLogger(__name__)


@dataclass
class TransversalInstance:
    configs: list          # list of (PointConfig, r_j)
    d: int
    v: int
    w: int
    p: int = 2

    def __post_init__(self):
        for X, _ in self.configs:
            if X.d != self.d:
                raise ValueError("configuration in RP^%d, expected RP^%d" % (X.d, self.d))

    @property
    def D(self):
        return (self.d - self.v) * (self.d - self.w)

    def size_warnings(self):
        out = []
        for j, (X, r) in enumerate(self.configs):
            need = required_points(self.D, r) if self.D >= 1 else None
            if need is not None and len(X) != need:
                out.append("|X^%d| = %d, the tight size is (D+1)(r-1)+1 = %d"
                           % (j + 1, len(X), need))
            if r > 1 and (prime_power(r) is None or prime_power(r)[0] != self.p):
                out.append("r_%d = %d is not a power of p = %d" % (j + 1, r, self.p))
        return out


# -- partition solver ------------------------------------------------------

def solve_partition(sets, n, r, colors=None, prefer=None, count=False, limit=None):
    """Partition range(n) into r nonempty parts each meeting every set.

    sets are bitmasks. With count=True return the number of such
    unordered partitions instead of the first one found.
    """
    if r < 1 or r > n:
        return 0 if count else None
    sets = list(sets)
    if any(bin(s).count("1") < r for s in sets):
        return 0 if count else None
    # branch on points that occur in many small sets first
    weight = [0.0] * n
    for s in sets:
        k = bin(s).count("1")
        for i in range(n):
            if s >> i & 1:
                weight[i] += 1.0 / k
    order = sorted(range(n), key=lambda i: (-weight[i], i))
    pos = {i: t for t, i in enumerate(order)}
    # for each set: its members by branching position
    members = [sorted(pos[i] for i in range(n) if s >> i & 1) for s in sets]
    touching = [[] for _ in range(n)]
    for k, mem in enumerate(members):
        for t in mem:
            touching[t].append(k)
    remaining = [len(m) for m in members]
    hit = [0] * len(sets)     # bitmask of parts already meeting set k
    full = (1 << r) - 1
    label = [None] * n
    used_colors = [set() for _ in range(r)]
    sizes = [0] * r
    found = []
    total = 0

    def feasible_after(t):
        for k in touching[t]:
            missing = r - bin(hit[k]).count("1")
            if missing > remaining[k]:
                return False
        return True

    def rec(t, nparts):
        nonlocal total
        if t == n:
            if nparts == r and all(h == full for h in hit):
                if count:
                    total += 1
                    return limit is not None and total >= limit
                found.append(list(label))
                return True
            return False
        if n - t < r - nparts:
            return False
        i = order[t]
        options = list(range(min(nparts + 1, r)))
        if prefer is not None and prefer[i] < len(options):
            options.remove(prefer[i])
            options.insert(0, prefer[i])
        for j in options:
            if colors is not None and colors[i] in used_colors[j]:
                continue
            saved = [hit[k] for k in touching[t]]
            for k in touching[t]:
                hit[k] |= 1 << j
                remaining[k] -= 1
            label[i] = j
            sizes[j] += 1
            if colors is not None:
                used_colors[j].add(colors[i])
            ok = feasible_after(t)
            if ok and rec(t + 1, max(nparts, j + 1)):
                return True
            sizes[j] -= 1
            if colors is not None:
                used_colors[j].discard(colors[i])
            label[i] = None
            for k, h in zip(touching[t], saved):
                hit[k] = h
                remaining[k] += 1
        return False

    rec(0, 0)
    if count:
        return total
    if not found:
        return None
    lab = found[0]
    return PartitionWitness([[i for i in range(n) if lab[i] == j] for j in range(r)], n)


# -- Radon oracle ----------------------------------------------------------

def radon_partition(X):
    """Radon partition of n >= d+2 affine points and an exact common point.

    With more than one affine dependence, the first null-space vector is used.
    """
    pts = [p.to_affine() for p in X.points] if isinstance(X, PointConfig) else \
        [linalg.vec(p) for p in X]
    n = len(pts)
    d = len(pts[0])
    if n < d + 2:
        raise ValueError("need at least d+2 = %d points, got %d" % (d + 2, n))
    rows = [[p[k] for p in pts] for k in range(d)] + [[Fraction(1)] * n]
    lam = linalg.nullspace(rows, n)[0]
    I = [i for i in range(n) if lam[i] > 0]
    J = [i for i in range(n) if lam[i] <= 0]
    s = sum(lam[i] for i in I)
    point = tuple(sum(lam[i] * pts[i][k] for i in I) / s for k in range(d))
    return PartitionWitness([I, J], n), point


def hulls_intersect(A, B):
    """Exact LP: a point in conv(A) and conv(B), or None."""
    A = [linalg.vec(a) for a in A]
    B = [linalg.vec(b) for b in B]
    d = len(A[0])
    rows = [[a[k] for a in A] + [-b[k] for b in B] for k in range(d)]
    rows.append([Fraction(1)] * len(A) + [Fraction(0)] * len(B))
    rows.append([Fraction(0)] * len(A) + [Fraction(1)] * len(B))
    x = feasible_point(rows, [Fraction(0)] * d + [Fraction(1), Fraction(1)])
    if x is None:
        return None
    return tuple(sum(x[i] * A[i][k] for i in range(len(A))) for k in range(d))


# -- searches ----------------------------------------------------------------

def _check_size(n, D, r, warn_list):
    need = required_points(D, r)
    if n != need:
        msg = "|X| = %d differs from (D+1)(r-1)+1 = %d" % (n, need)
        warnings.warn(msg)
        warn_list.append(msg)


def _projector(M):
    q, _ = np.linalg.qr(np.asarray(M, dtype=float).T)
    return q @ q.T


def _numeric_supports(V, X, r, cfg, rng):
    """Weight vectors with disjoint supports whose subspaces nearly coincide."""
    n = len(X)
    A = np.asarray([[float(x) for x in row] for row in annihilator(V).basis])
    coords = np.asarray(X.coords(), dtype=float)
    coords = coords / np.linalg.norm(coords, axis=1, keepdims=True)
    labels = rng.permutation(np.arange(n) % r)
    eps = cfg.eps_schedule[len(cfg.eps_schedule) // 2]

    def unpack(z):
        ps = []
        for j in range(r):
            idx = labels == j
            w = np.zeros(n)
            e = np.exp(z[idx] - z[idx].max())
            w[idx] = e / e.sum()
            ps.append(w)
        return ps

    def objective(z):
        Ps = [_projector(_float_subspace(A, coords, p, eps)) for p in unpack(z)]
        return sum(np.sum((Ps[a] - Ps[b]) ** 2) for a in range(r) for b in range(a + 1, r))

    res = minimize(objective, rng.standard_normal(n) * 0.1, method="Nelder-Mead",
                   options={"maxiter": 100 * n, "xatol": 1e-8, "fatol": 1e-12})
    return unpack(res.x), labels, eps


def search_projective_tverberg(V, X, r, cfg=None, rainbow=False, strict=False):
    """W of dimension d-v-1 plus a partition into r parts, exactly verified.

    Returns (W, PartitionWitness or None, Certificate or None).
    """
    cfg = cfg or SearchConfig()
    d, v = X.d, V.proj_dim
    if V.ambient != d + 1:
        raise ValueError("V and X live in different spaces")
    if not 0 <= v < d:
        raise ValueError("V must be a proper nonempty flat")
    notes = []
    D = cell_dimension(d, v)
    _check_size(len(X), D, r, notes)
    if r > 1 and prime_power(r) is None:
        notes.append("r = %d is not a prime power; existence is not guaranteed" % r)
    colors = X.colors if rainbow else None
    if rainbow and colors is None:
        raise ValueError("rainbow requested but configuration has no colors")

    if r == 1 and not rainbow:
        W, cert = search_center_subspace(V, X, 1, cfg, strict=strict)
        part = PartitionWitness([range(len(X))], len(X))
        cert = verify_tverberg_witness(V, W, X, part, strict=strict)
        cert.details["notes"] = notes
        return W, part, cert

    target = d - v
    vside = Side(V, X)
    n = len(X)

    def attempt(W, prefer=None):
        if strict and meet(V, W).rank:
            return None
        sets = piece_sets(V, W, X, vside=vside)
        return solve_partition(sets, n, r, colors=colors, prefer=prefer)

    for strategy in cfg.strategies:
        if strategy == "a":
            for start in range(cfg.multistart):
                rng = cfg.rng(100 + start)
                ps, labels, eps = _numeric_supports(V, X, r, cfg, rng)
                tried = []
                for p in ps:
                    wv = WeightVector.from_float(p, cfg.den_bound)
                    tried.append(subspace_from_weights(V, X, wv, Fraction(eps)))
                Pm = sum(_projector(np.asarray([[float(x) for x in row] for row in W.basis]))
                         for W in tried) / len(tried)
                vals, vecs = np.linalg.eigh(Pm)
                avg = flat_from_float(vecs[:, -target:].T, target, cfg.den_bound)
                if avg is not None:
                    tried.insert(0, avg)
                for W in tried:
                    part = attempt(W, prefer=list(labels))
                    if part is not None:
                        return _finish(V, W, X, part, rainbow, strict, notes, "a")
        elif strategy == "b":
            rng = cfg.rng(2 * 10**6)
            for W in subspace_candidates(X.coords(), target, rng=rng, limit=cfg.max_candidates):
                part = attempt(W)
                if part is not None:
                    return _finish(V, W, X, part, rainbow, strict, notes, "b")
        else:
            raise ValueError("unknown strategy %r" % (strategy,))
    notes.append("no partition found")
    return None, None, None


def _finish(V, W, X, part, rainbow, strict, notes, strategy):
    cert = verify_tverberg_witness(V, W, X, part, rainbow=rainbow, strict=strict)
    assert cert.verdict, "solver and verifier disagree"
    cert.details["notes"] = notes
    cert.details["strategy"] = strategy
    return W, part, cert


def search_transversal(instance, cfg=None, V=None, rainbow=False, strict=False):
    """One W of dimension w with valid partitions of every X^j.

    Returns (W, [PartitionWitness], Certificate) or (None, None, None).
    """
    cfg = cfg or SearchConfig()
    d, v, w = instance.d, instance.v, instance.w
    m = len(instance.configs)
    if V is None:
        raise ValueError("V is required")
    if V.proj_dim != v or V.ambient != d + 1:
        raise ValueError("V has the wrong dimension")
    notes = instance.size_warnings()
    for msg in notes:
        warnings.warn(msg)
    if w != m * (d - v) - 1:
        notes.append("w = %d is outside the regime w = m(d-v)-1 = %d" % (w, m * (d - v) - 1))
    gate = thm4_condition(d, v, w, m, instance.p)

    if m == 1 and w == d - v - 1:
        X, r = instance.configs[0]
        W, part, cert = search_projective_tverberg(V, X, r, cfg, rainbow=rainbow, strict=strict)
        if cert is not None:
            cert.details["gate"] = gate
            cert.details["notes"] = notes + cert.details.get("notes", [])
        return W, ([part] if part is not None else None), cert

    vsides = [Side(V, X) for X, _ in instance.configs]
    allcoords = [c for X, _ in instance.configs for c in X.coords()]
    rng = cfg.rng(3 * 10**6)
    for W in subspace_candidates(allcoords, w + 1, rng=rng, limit=cfg.max_candidates):
        if strict and meet(V, W).rank:
            continue
        parts = []
        for (X, r), vs in zip(instance.configs, vsides):
            sets = piece_sets(V, W, X, vside=vs)
            colors = X.colors if rainbow else None
            part = solve_partition(sets, len(X), r, colors=colors)
            if part is None:
                break
            parts.append(part)
        else:
            cert = verify_transversal_witness(
                V, W, [(X, p) for (X, _), p in zip(instance.configs, parts)],
                rainbow=rainbow, strict=strict)
            assert cert.verdict
            cert.details["gate"] = gate
            cert.details["notes"] = notes
            return W, parts, cert
    return None, None, None


def search_both_subspaces(configs, d, v, rs, p=2, cfg=None, w=None, rainbow=False):
    """Choose V and W together (V of dimension v, W of dimension w).

    With w omitted, w = d - v - 1 and the gate is the Euler characteristic
    criterion; otherwise the mod 2 flag manifold condition is used.
    Returns (V, W, partitions, Certificate) or (None, None, None, None).
    """
    cfg = cfg or SearchConfig()
    configs = [X if isinstance(X, PointConfig) else PointConfig(d, X) for X in configs]
    m = len(configs)
    if len(rs) != m:
        raise ValueError("need one r per configuration")
    if w is None:
        w = d - v - 1
        gate = thm6_condition(d, v, p)
    else:
        gate = flag_condition(d, v, w, m)
    if not gate:
        warnings.warn("hypothesis gate fails (%s); existence is not promised" % gate.explanation)
    D = (d - v) * (d - w)
    notes = []
    for j, (X, r) in enumerate(zip(configs, rs)):
        if len(X) != required_points(D, r):
            notes.append("|X^%d| = %d differs from (D+1)(r-1)+1 = %d"
                         % (j + 1, len(X), required_points(D, r)))

    allcoords = [c for X in configs for c in X.coords()]
    rng = cfg.rng(4 * 10**6)
    inner = SearchConfig(**{**cfg.__dict__, "max_candidates": max(50, cfg.max_candidates // 20)})
    budget = cfg.max_candidates
    for V in subspace_candidates(allcoords, v + 1, rng=rng, limit=cfg.max_candidates):
        vsides = [Side(V, X) for X in configs]
        for W in subspace_candidates(allcoords, w + 1, rng=inner.rng(7), limit=inner.max_candidates):
            budget -= 1
            if budget < 0:
                return None, None, None, None
            parts = []
            for X, r, vs in zip(configs, rs, vsides):
                sets = piece_sets(V, W, X, vside=vs)
                part = solve_partition(sets, len(X), r, colors=X.colors if rainbow else None)
                if part is None:
                    break
                parts.append(part)
            else:
                cert = verify_transversal_witness(V, W, list(zip(configs, parts)), rainbow=rainbow)
                assert cert.verdict
                cert.details["gate"] = gate
                cert.details["notes"] = notes
                return V, W, parts, cert
    return None, None, None, None


def count_valid_partitions(V, W, X, r, max_n=12):
    """Number of r-part partitions valid for this particular (V, W).

    This is a per-W count; lower bounds in the literature count
    partitions over all admissible W, so it is only a conservative check.
    """
    n = len(X)
    if n > max_n:
        raise ValueError("n = %d exceeds the enumeration cap %d" % (n, max_n))
    sets = piece_sets(V, W, X)
    return solve_partition(sets, n, r, count=True)
