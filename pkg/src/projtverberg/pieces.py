"""
The closed pieces cut out of RP^d by a hyperplane pair and the exact
min-count engine built on them.

Hyperplanes H1 containing V are the forms f = u . A with A a basis of
annihilator(V); likewise H2 containing W is g = s . B. A point x lies in
the "plus" piece when f(x) g(x) >= 0 and in the "minus" piece when
f(x) g(x) <= 0, so points on H1 or H2 belong to both. Counts are upper
semicontinuous in (u, s), hence the minimum over all pairs is attained
on pairs of open cells of the two central arrangements {A x_i}, {B x_i}.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .geometry import (LinSubspace, PointConfig, ProjPoint, SignVector,
                       annihilator, enumerate_open_cells, meet)
from .linalg import dot, matvec, sign


@dataclass(frozen=True)
class HyperplanePair:
    f: tuple
    g: tuple

    def __post_init__(self):
        if not any(self.f) or not any(self.g):
            raise ValueError("hyperplane forms must be nonzero")


def piece_sign(pair, x):
    """Sign of f(x) g(x): +1 plus piece only, -1 minus piece only, 0 both."""
    if isinstance(pair, tuple):
        pair = HyperplanePair(*pair)
    x = x.coords if isinstance(x, ProjPoint) else x
    return sign(dot(pair.f, x)) * sign(dot(pair.g, x))


@dataclass(frozen=True)
class CellCertificate:
    sigma: SignVector
    tau: SignVector
    witness_u: tuple
    witness_s: tuple
    f: tuple
    g: tuple
    count_plus: int
    count_minus: int

    @property
    def products(self):
        return tuple(a * b for a, b in zip(self.sigma.signs, self.tau.signs))

    @property
    def count(self):
        return min(self.count_plus, self.count_minus)


@dataclass
class Certificate:
    verdict: bool
    min_count: int
    witness: CellCertificate
    V: LinSubspace
    W: LinSubspace
    r: int
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict


def side_forms(S):
    """Basis of the forms vanishing on S; errors if S is all of RP^d."""
    A = annihilator(S)
    if A.rank == 0:
        raise ValueError("subspace is the whole space; no hyperplane contains it")
    return A


class Side:
    """One side (V or W) of the engine: the arrangement {A x_i} and its cells."""

    def __init__(self, S, X):
        self.S = S
        self.forms = side_forms(S)
        basis = list(self.forms.basis)
        self.vectors = [matvec(basis, p.coords) for p in X.points]
        self.cells = enumerate_open_cells(self.vectors)
        self.signs = np.array([c.signs for c in self.cells], dtype=np.int8)

    def form(self, cell):
        """The linear form u . A realizing an open cell."""
        u = cell.witness
        basis = self.forms.basis
        return tuple(sum((ui * row[j] for ui, row in zip(u, basis)), 0 * u[0])
                     for j in range(self.forms.ambient))


def _products(vside, wside):
    return vside.signs[:, None, :] * wside.signs[None, :, :]


def _cell_certificate(vside, wside, i, j):
    sig = vside.cells[i].sign_vector
    tau = wside.cells[j].sign_vector
    prod = [a * b for a, b in zip(sig.signs, tau.signs)]
    return CellCertificate(
        sigma=sig, tau=tau,
        witness_u=vside.cells[i].witness, witness_s=wside.cells[j].witness,
        f=vside.form(vside.cells[i]), g=wside.form(wside.cells[j]),
        count_plus=sum(1 for p in prod if p >= 0),
        count_minus=sum(1 for p in prod if p <= 0),
    )


def _check_inputs(V, W, X):
    if V.ambient != X.d + 1 or W.ambient != X.d + 1:
        raise ValueError("V, W and X must share the ambient RP^%d" % X.d)


def min_piece_counts(V, W, X, vside=None):
    """Minimum over hyperplane pairs H1 >= V, H2 >= W of the smaller closed piece count."""
    _check_inputs(V, W, X)
    if len(X) == 0:
        raise ValueError("empty configuration")
    vside = vside or Side(V, X)
    wside = Side(W, X)
    P = _products(vside, wside)
    plus = (P >= 0).sum(axis=2)
    minus = (P <= 0).sum(axis=2)
    counts = np.minimum(plus, minus)
    flat = int(np.argmin(counts))
    i, j = divmod(flat, counts.shape[1])
    return int(counts[i, j]), _cell_certificate(vside, wside, i, j)


def disjoint(V, W):
    return meet(V, W).rank == 0


def verify_center_subspace(V, W, X, r, strict=False, vside=None):
    if r < 0:
        raise ValueError("r must be nonnegative")
    m, cert = min_piece_counts(V, W, X, vside=vside)
    details = {}
    verdict = m >= r
    if strict:
        details["disjoint"] = disjoint(V, W)
        verdict = verdict and details["disjoint"]
    return Certificate(verdict, m, cert, V, W, r, details)


@dataclass(frozen=True)
class PartitionWitness:
    parts: tuple

    def __init__(self, parts, n=None):
        parts = tuple(tuple(sorted(p)) for p in parts)
        parts = tuple(sorted(parts))
        object.__setattr__(self, "parts", parts)
        if n is not None:
            self.check(n)

    @property
    def r(self):
        return len(self.parts)

    def check(self, n):
        seen = [i for p in self.parts for i in p]
        if any(len(p) == 0 for p in self.parts):
            raise ValueError("empty part in partition")
        if len(seen) != len(set(seen)):
            raise ValueError("overlapping parts in partition")
        if sorted(seen) != list(range(n)):
            raise ValueError("partition does not cover indices 0..%d" % (n - 1))

    def label(self, n):
        lab = [0] * n
        for j, p in enumerate(self.parts):
            for i in p:
                lab[i] = j
        return lab


def rainbow_ok(partition, colors):
    for part in partition.parts:
        cs = [colors[i] for i in part]
        if len(cs) != len(set(cs)):
            return False
    return True


def verify_tverberg_witness(V, W, X, partition, rainbow=False, strict=False, vside=None):
    """Every closed piece of every admissible pair meets every part."""
    _check_inputs(V, W, X)
    if not isinstance(partition, PartitionWitness):
        partition = PartitionWitness(partition)
    partition.check(len(X))
    details = {}
    if rainbow:
        if X.colors is None:
            raise ValueError("rainbow requested but configuration has no colors")
        details["rainbow"] = rainbow_ok(partition, X.colors)

    vside = vside or Side(V, X)
    wside = Side(W, X)
    P = _products(vside, wside)
    verdict = True
    worst = None
    for j, part in enumerate(partition.parts):
        sub = P[:, :, list(part)]
        has_plus = (sub >= 0).any(axis=2)
        has_minus = (sub <= 0).any(axis=2)
        bad = ~(has_plus & has_minus)
        if bad.any():
            flat = int(np.argmax(bad))
            a, b = divmod(flat, bad.shape[1])
            verdict = False
            worst = (a, b)
            details["failing_part"] = j
            break
    plus = (P >= 0).sum(axis=2)
    minus = (P <= 0).sum(axis=2)
    counts = np.minimum(plus, minus)
    if worst is None:
        flat = int(np.argmin(counts))
        worst = divmod(flat, counts.shape[1])
    cert = _cell_certificate(vside, wside, *worst)
    if rainbow and not details["rainbow"]:
        verdict = False
    if strict:
        details["disjoint"] = disjoint(V, W)
        verdict = verdict and details["disjoint"]
    details["partition"] = partition
    return Certificate(verdict, int(counts.min()), cert, V, W, partition.r, details)


def verify_transversal_witness(V, W, configs, rainbow=False, strict=False):
    """Conjunction of Tverberg checks for every (X^j, partition_j) with one (V, W)."""
    if not configs:
        raise ValueError("no configurations")
    d = configs[0][0].d
    if any(X.d != d for X, _ in configs):
        raise ValueError("configurations live in different ambient spaces")
    certs = []
    for j, (X, part) in enumerate(configs):
        c = verify_tverberg_witness(V, W, X, part, rainbow=rainbow, strict=strict)
        certs.append(c)
        if not c.verdict:
            c.details["failing_config"] = j
            return Certificate(False, c.min_count, c.witness, V, W, c.r,
                               {"failing_config": j, "per_config": certs})
    best = min(certs, key=lambda c: c.min_count)
    return Certificate(True, best.min_count, best.witness, V, W, best.r,
                       {"per_config": certs})


def piece_sets(V, W, X, vside=None):
    """Minimal closed pieces as bitmasks over the indices of X.

    A partition is a valid Tverberg witness for (V, W) iff every part
    meets every returned set.
    """
    vside = vside or Side(V, X)
    wside = Side(W, X)
    P = _products(vside, wside)
    n = P.shape[2]
    weights = (1 << np.arange(n, dtype=object))
    sets = set()
    for mask in ((P >= 0), (P <= 0)):
        flat = mask.reshape(-1, n)
        for row in np.unique(flat, axis=0):
            sets.add(int(sum(int(w) for w, b in zip(weights, row) if b)))
    return _minimal_sets(sets)


def _minimal_sets(sets):
    ordered = sorted(sets, key=lambda s: (bin(s).count("1"), s))
    keep = []
    for s in ordered:
        if not any((k & s) == k for k in keep):
            keep.append(s)
    return keep


def count_matrix(vside, wside):
    """Smaller closed piece count for every (V-cell, W-cell) pair."""
    P = _products(vside, wside)
    return np.minimum((P >= 0).sum(axis=2), (P <= 0).sum(axis=2))
