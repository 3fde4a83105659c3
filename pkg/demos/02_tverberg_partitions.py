"""Radon and Tverberg partitions with a piece-hitting condition.

Run with ``python demos/02_tverberg_partitions.py``.
"""
# %%
# Radon first: any d+2 points in R^d split into two parts whose hulls meet.
from projtverberg import (PointConfig, TransversalInstance, hyperplane_at_infinity,
                          radon_partition, search_projective_tverberg, search_transversal,
                          verify_tverberg_witness)
from projtverberg.topology import flag_condition, required_points, thm6_condition

tri = PointConfig.affine([(0, 0), (6, 0), (0, 6), (1, 1)])
part, point = radon_partition(tri)
print("Radon parts", part.parts, "meeting at", point)

# %%
# The projective version asks for W so that every part meets every piece.
# For the square and V at infinity the search lands on the diagonals again.
V = hyperplane_at_infinity(2)
square = PointConfig.affine([(1, 1), (-1, 1), (1, -1), (-1, -1)])
W, part, cert = search_projective_tverberg(V, square, 2)
print("W =", W.basis, "parts", part.parts, "verified", cert.verdict)
print("re-verified independently:", verify_tverberg_witness(V, W, square, part).verdict)

# %%
# How many points are needed in general: (D+1)(r-1)+1, where D = (d-v)(v+1).
for d, v, r in [(2, 0, 2), (2, 1, 3), (3, 1, 2)]:
    D = (d - v) * (v + 1)
    print(f"d={d} v={v} r={r}: D={D}, need {required_points(D, r)} points")

# %%
# A transversal: one line W in RP^3 serving two point sets at once.
X1 = PointConfig.affine([(0, 0, 0), (4, 0, 0), (0, 4, 0), (1, 1, 3)])
X2 = PointConfig.affine([(0, 0, 1), (3, 1, 0), (1, 3, 2), (1, 1, -2)])
inst = TransversalInstance([(X1, 2), (X2, 2)], 3, 2, 1)
W, parts, cert = search_transversal(inst, V=hyperplane_at_infinity(3))
print("common W =", W.basis)
print("partitions", [p.parts for p in parts])

# %%
# The existence side is topological. Two of the available gates:
print("both-free gate, d=2 v=0 p=2:", thm6_condition(2, 0, 2).verdict)
g = flag_condition(2, 1, 1, 2)
print("flag gate, d=2 v=1 w=1 m=2:", g.verdict, g.data)
