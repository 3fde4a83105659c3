"""
Sampled-measure demonstration. Densities are sampled, rounded to exact
rationals, and the finite search is run on the sample. The resulting
certificate speaks about the sample only, never about the density.
"""

from fractions import Fraction
from math import ceil

import numpy as np

from .candidates import subspace_candidates
from .centerpoint import SearchConfig, search_center_subspace
from .geometry import PointConfig, canonicalize, span
from .pieces import Side, min_piece_counts, verify_center_subspace

DEFAULT_CAP = 5000


def _sample(spec, d, n, rng):
    kind = spec.get("kind")
    if kind == "uniform":
        low = np.asarray(spec.get("low", [0.0] * d), dtype=float)
        high = np.asarray(spec.get("high", [1.0] * d), dtype=float)
        return rng.uniform(low, high, size=(n, d))
    if kind == "gaussian":
        mean = np.asarray(spec.get("mean", [0.0] * d), dtype=float)
        cov = np.asarray(spec.get("cov", np.eye(d)), dtype=float)
        return rng.multivariate_normal(mean, cov, size=n)
    if kind == "point":
        return np.tile(np.asarray(spec["at"], dtype=float), (n, 1))
    if kind == "mixture":
        comps = spec["components"]
        w = np.asarray([c.get("weight", 1.0) for c in comps], dtype=float)
        pick = rng.choice(len(comps), size=n, p=w / w.sum())
        out = np.empty((n, d))
        for k, c in enumerate(comps):
            idx = np.flatnonzero(pick == k)
            if idx.size:
                out[idx] = _sample(c["density"], d, idx.size, rng)
        return out
    raise ValueError("unknown density kind %r" % (kind,))


def sample_config(spec, d, n, seed, den=1000, cap=DEFAULT_CAP):
    """n points from the density, rounded to denominators at most `den`."""
    if n > cap:
        raise ValueError("sample count %d exceeds the cap %d" % (n, cap))
    if n < 1:
        raise ValueError("need at least one sample")
    pts = _sample(spec, d, n, np.random.default_rng(seed))
    rows = [[Fraction(float(x)).limit_denominator(den) for x in row] for row in pts]
    return PointConfig.affine(rows)


def flat_at_infinity(d, v):
    """span(e_1, ..., e_{v+1}); for v = d-1 the hyperplane at infinity."""
    return span([[int(i == j) for j in range(d + 1)] for i in range(v + 1)], d + 1)


def demo_measure(densities, d, v, n, seed=0, cfg=None, cap=DEFAULT_CAP, den=1000):
    """Run the finite search on samples of one or several densities.

    One density: the center subspace search with r = ceil(n/(D+1)),
    D = (d-v)(v+1). Several (m) densities: a common W of dimension
    w = m(d-v)-1 scored by the worst sample, target ceil(n/(D+1)) with
    D = (d-v)(d-w). Returns a dict with the samples, (V, W), fractions
    and one exact certificate per sample.
    """
    cfg = cfg or SearchConfig(seed=seed)
    if isinstance(densities, dict):
        densities = [densities]
    m = len(densities)
    samples = [sample_config(s, d, n, [seed, j], den, cap) for j, s in enumerate(densities)]
    V = flat_at_infinity(d, v)
    if m == 1:
        D = (d - v) * (v + 1)
        w = d - v - 1
        r = ceil(n / (D + 1))
        W, cert = search_center_subspace(V, samples[0], r, cfg)
        certs = [cert]
    else:
        w = m * (d - v) - 1
        if w >= d:
            raise ValueError("w = m(d-v)-1 = %d must be below d = %d" % (w, d))
        D = (d - v) * (d - w)
        r = ceil(n / (D + 1))
        W = _common_subspace(V, samples, w, r, cfg)
        certs = [verify_center_subspace(V, W, X, r) for X in samples]
    bound = Fraction(1, D + 1)
    fractions = [Fraction(c.min_count, n) for c in certs]
    return {
        "d": d, "v": v, "w": w, "m": m, "n": n, "D": D, "r": r,
        "V": V, "W": W, "samples": samples, "certificates": certs,
        "fractions": fractions, "bound": bound,
        "gaps": [f - bound for f in fractions],
    }


def _common_subspace(V, samples, w, r, cfg):
    """Best W over a candidate stream, scored by the worst sample."""
    sides = [Side(V, X) for X in samples]
    N = V.ambient
    centroids = []
    for X in samples:
        cs = [sum(col, Fraction(0)) / len(X) for col in zip(*X.coords())]
        centroids.append(cs)
    extra = []
    C = canonicalize(centroids, N)
    if C.rank == w + 1:
        extra.append(C)
    allcoords = [c for X in samples for c in X.coords()]
    best = None
    stream = subspace_candidates(allcoords, w + 1, rng=cfg.rng(5 * 10**6),
                                 limit=min(cfg.max_candidates, 400), extra=extra)
    for W in stream:
        score = min(min_piece_counts(V, W, X, vside=s)[0] for X, s in zip(samples, sides))
        if best is None or score > best[0]:
            best = (score, W)
        if score >= r:
            break
    return best[1]
