"""Sampled measures and an SVG picture.

Run with ``python demos/03_measures_and_plots.py``. Writes ``square.svg``
next to the current directory.
"""
# %%
# A measure version only samples: draw n points, certify a W exactly for
# the sample, and look at the fraction of the sample in the worst piece.
# This is a demonstration, not a proof about the underlying density.
from projtverberg import hyperplane_at_infinity, span
from projtverberg.geometry import PointConfig
from projtverberg.measure import demo_measure
from projtverberg.pieces import min_piece_counts
from projtverberg.plot import render_svg

res = demo_measure({"kind": "uniform", "low": [0, 0], "high": [1, 1]}, d=2, v=1, n=60, seed=0)
print("worst-piece fraction", float(res["fractions"][0]), "bound", res["bound"])

# %%
# Two Gaussians with different centers need a common W. With m = 2, d = 2
# and V the line at infinity, W = m(d-v)-1 = 1 is a line, so the search
# scans candidate lines and keeps the one whose worst sample is best.
mix = [{"kind": "gaussian", "mean": [0, 0], "cov": [[1, 0], [0, 1]]},
       {"kind": "gaussian", "mean": [3, 1], "cov": [[1, 0], [0, 2]]}]
res = demo_measure(mix, d=2, v=1, n=24, seed=2)
print("m =", res["m"], "W =", res["W"].basis, "fractions", [float(f) for f in res["fractions"]])

# %%
# The picture: the affine chart is squeezed into a disc whose boundary is the
# line at infinity. Dashed lines show the worst pair of hyperplanes.
square = PointConfig.affine([(1, 1), (-1, 1), (1, -1), (-1, -1)])
V, W = hyperplane_at_infinity(2), span([(0, 0, 1)])
_, cert = min_piece_counts(V, W, square)
with open("square.svg", "w") as fh:
    fh.write(render_svg(square, V, W, [(cert.f, cert.g)], "square"))
print("wrote square.svg")
