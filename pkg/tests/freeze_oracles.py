"""
Regenerate tests/data/oracles.json from the reference computations in
oracles.py. Run once; the acceptance tests read the frozen file.

    python tests/freeze_oracles.py
"""

import json
import os
import sys
from math import comb

import numpy as np

sys.path.insert(0, os.path.dirname(__file__))
import oracles  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "data", "oracles.json")


def tukey_cases(rng, count=100, cands=20):
    cases = []
    for _ in range(count):
        n = int(rng.integers(4, 11))
        pts = [(int(x), int(y)) for x, y in rng.integers(-10, 11, size=(n, 2))]
        cs = set()
        # data points, midpoints and random rational points
        for i in rng.permutation(n)[:5]:
            cs.add((pts[i][0], pts[i][1]))
        while len(cs) < 10:
            i, j = rng.choice(n, 2, replace=False)
            cs.add(((pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2))
        cs = [tuple(map(oracles.Fraction, c)) for c in cs]
        while len(cs) < cands:
            c = oracles.random_rational_point(rng)
            if c not in cs:
                cs.append(c)
        cases.append({
            "points": [list(p) for p in pts],
            "candidates": [[str(x), str(y)] for x, y in cs],
            "depths": [oracles.tukey_depth_sweep(c, pts) for c in cs],
        })
    return cases


def radon_cases(rng, count=200):
    cases = []
    while len(cases) < count:
        pts = [tuple(int(t) for t in p) for p in rng.integers(-10, 11, size=(4, 2))]
        if oracles.general_position4(pts):
            cases.append({"points": [list(p) for p in pts], "partition": oracles.radon4(pts)})
    return cases


def center_cases(rng):
    cases = []
    for _ in range(50):
        n = int(rng.integers(4, 13))
        pts = rng.integers(-10, 11, size=(n, 2)).tolist()
        V = [rng.integers(-5, 6, size=3).tolist()]
        while not any(V[0]):
            V = [rng.integers(-5, 6, size=3).tolist()]
        cases.append({"d": 2, "points": pts, "V": V})
    while len(cases) < 70:
        n = int(rng.integers(4, 11))
        pts = rng.integers(-10, 11, size=(n, 3)).tolist()
        V = rng.integers(-5, 6, size=(2, 4)).tolist()
        if np.linalg.matrix_rank(np.asarray(V)) == 2:
            cases.append({"d": 3, "points": pts, "V": V})
    return cases


def flag_cases():
    out = []
    for d in range(1, 6):
        for v in range(d):
            for m in (1, 2, 3):
                w = m * (d - v) - 1
                if 0 <= w < d:
                    out.append({"d": d, "v": v, "w": w, "m": m,
                                "nonzero": oracles.flag_class_oracle(d, v, w, m)})
    return out


def main():
    rng = np.random.default_rng(20240611)
    data = {
        "tukey": tukey_cases(rng),
        "radon": radon_cases(rng),
        "center": center_cases(rng),
        "qbinom": {"%d,%d" % (n, k): oracles.gaussian_binomial_at_minus1(n, k)
                   for n in range(13) for k in range(n + 1)},
        "kummer": {str(p): ["".join("1" if comb(n, k) % p else "0" for k in range(n + 1))
                            for n in range(201)] for p in (2, 3, 5, 7, 11, 13)},
        "hilbert": {str(n): oracles.coinvariant_hilbert(n) for n in range(1, 7)},
        "flag": flag_cases(),
        "flag_d1": oracles.flag_class_oracle(1, 0, 0, 2),
    }
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as fh:
        json.dump(data, fh, sort_keys=True)
        fh.write("\n")
    print("wrote", OUT)


if __name__ == "__main__":
    main()
