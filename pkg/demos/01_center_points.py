"""Center points, affine and projective.

Run with ``python demos/01_center_points.py``. Each ``# %%`` block is a cell.
"""
# %%
# Classical warm-up: Tukey depth on a small grid. The middle point of a 3x3
# grid has depth 5, since every closed half-plane through it holds the center
# plus at least four of the eight others.
import numpy as np

from projtverberg import (PointConfig, hyperplane_at_infinity, search_center_subspace,
                          span, tukey_depth, verify_center_subspace)
from projtverberg.centerpoint import classical_center_point

grid = [(i, j) for i in range(3) for j in range(3)]
print("depth of (1, 1):", tukey_depth((1, 1), grid))

rng = np.random.default_rng(0)
cloud = [tuple(int(v) for v in p) for p in rng.integers(-20, 21, size=(15, 2))]
c, depth = classical_center_point(cloud)
print("a deepest point of 15 random points:", c, "depth", depth, ">= ceil(15/3) = 5")

# %%
# Putting V at infinity recovers the affine picture. A W that is the single
# point (0:0:1) works for the square with r = 2: every pair of lines through
# the origin (one of them may be at infinity) leaves two corners in each piece.
square = PointConfig.affine([(1, 1), (-1, 1), (1, -1), (-1, -1)])
V = hyperplane_at_infinity(2)
cert = verify_center_subspace(V, span([(0, 0, 1)]), square, 2)
print("square, r = 2:", cert.verdict, "min count", cert.min_count)
print("square, r = 3:", verify_center_subspace(V, span([(0, 0, 1)]), square, 3).verdict)

# %%
# Now a genuinely projective instance: V is a single finite point and we ask
# for a point W so that both pieces cut out by any V-hyperplane and any
# W-hyperplane carry many points. The search returns an exact W together
# with its certificate.
X = PointConfig.affine(rng.integers(-9, 10, size=(9, 2)).tolist())
V = span([(1, 2, 3)])
W, cert = search_center_subspace(V, X)
print("W =", W.basis, "min piece count", cert.min_count, "of", len(X))
print("witness pair", cert.witness.f, cert.witness.g)
