"""
Exact projective geometry over the rationals.

Points of RP^d are stored as primitive integer vectors in R^{d+1};
flats as row spaces in reduced echelon form, so equality is syntactic.
Hyperplane arrangements are always central (through the origin).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

from . import linalg
from .linalg import vec, dot, sign
from .lp import strict_cell_witness


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: tuple

    def __init__(self, coords):
        object.__setattr__(self, "coords", linalg.primitive_integer(coords))

    @property
    def d(self):
        return len(self.coords) - 1

    @classmethod
    def affine(cls, xs):
        return cls(tuple(vec(xs)) + (Fraction(1),))

    def to_affine(self):
        """Affine coordinates in the chart x_{d+1} = 1, or None at infinity."""
        z = self.coords[-1]
        if z == 0:
            return None
        return tuple(Fraction(c, z) for c in self.coords[:-1])

    def __repr__(self):
        return "ProjPoint(%s)" % ":".join(str(c) for c in self.coords)


@dataclass(frozen=True, order=True)
class LinSubspace:
    """A linear subspace of R^{d+1}, i.e. a projective flat of dimension rank-1."""
    ambient: int
    basis: tuple

    @property
    def rank(self):
        return len(self.basis)

    @property
    def proj_dim(self):
        return self.rank - 1

    def contains(self, x):
        return linalg.rank(list(self.basis) + [vec(x)]) == self.rank

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in r) + ")" for r in self.basis)
        return "LinSubspace(%d; %s)" % (self.ambient, rows)


def canonicalize(vectors, ambient=None):
    """Row space of the given spanning vectors in canonical echelon form."""
    vectors = [vec(v) for v in vectors]
    if ambient is None:
        if not vectors:
            raise ValueError("need vectors or an explicit ambient dimension")
        ambient = len(vectors[0])
    if ambient < 1:
        raise ValueError("empty ambient dimension")
    for v in vectors:
        if len(v) != ambient:
            raise ValueError("vectors of unequal length")
    if not vectors:
        return LinSubspace(ambient, ())
    R, _ = linalg.rref(vectors, ambient)
    return LinSubspace(ambient, tuple(R))


def span(points, ambient=None):
    """Flat spanned by ProjPoints (or raw coordinate vectors)."""
    vs = [p.coords if isinstance(p, ProjPoint) else p for p in points]
    return canonicalize(vs, ambient)


def full_space(ambient):
    return canonicalize([[int(i == j) for j in range(ambient)] for i in range(ambient)])


def annihilator(S):
    """Linear forms vanishing on S, identified with vectors via the dot product."""
    if S.rank == 0:
        return full_space(S.ambient)
    return canonicalize(linalg.nullspace(list(S.basis), S.ambient), S.ambient)


def _check_ambient(S1, S2):
    if S1.ambient != S2.ambient:
        raise ValueError("mismatched ambient dimension: %d vs %d" % (S1.ambient, S2.ambient))


def join(S1, S2):
    _check_ambient(S1, S2)
    return canonicalize(list(S1.basis) + list(S2.basis), S1.ambient)


def meet(S1, S2):
    _check_ambient(S1, S2)
    return annihilator(join(annihilator(S1), annihilator(S2)))


def hyperplane_at_infinity(d):
    """The flat {x_{d+1} = 0} of RP^d."""
    return annihilator(canonicalize([[0] * d + [1]]))


@dataclass(frozen=True)
class PointConfig:
    d: int
    points: tuple
    colors: tuple = None

    def __init__(self, d, points, colors=None):
        pts = tuple(p if isinstance(p, ProjPoint) else ProjPoint(p) for p in points)
        for p in pts:
            if len(p.coords) != d + 1:
                raise ValueError("point %r does not live in RP^%d" % (p, d))
        if colors is not None:
            colors = tuple(colors)
            if len(colors) != len(pts):
                raise ValueError("need one color per point")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def affine(cls, xs, colors=None):
        xs = [vec(x) for x in xs]
        d = len(xs[0])
        return cls(d, [ProjPoint.affine(x) for x in xs], colors)

    def __len__(self):
        return len(self.points)

    def coords(self):
        return [p.coords for p in self.points]


def general_position(X, V, r):
    """Check that no r points of X together with V lie in a hyperplane.

    Returns (True, None) or (False, violating index tuple).
    """
    n = len(X)
    if r < 1:
        raise ValueError("r must be at least 1")
    if r > n:
        raise ValueError("r = %d exceeds |X| = %d" % (r, n))
    amb = X.d + 1
    for S in combinations(range(n), r):
        rows = list(V.basis) + [X.points[i].coords for i in S]
        if linalg.rank(rows) < amb:
            return False, S
    return True, None


@dataclass(frozen=True)
class SignVector:
    signs: tuple
    zero_support: frozenset = field(default_factory=frozenset)

    def __neg__(self):
        return SignVector(tuple(-s for s in self.signs), self.zero_support)

    def __len__(self):
        return len(self.signs)


@dataclass(frozen=True)
class Cell:
    """An open cell of a central arrangement with an exact interior witness."""
    sign_vector: SignVector
    witness: tuple

    @property
    def signs(self):
        return self.sign_vector.signs


def _half(v):
    # 0 for directions with angle in [0, pi), 1 for [pi, 2pi)
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    cr = a[0] * b[1] - a[1] * b[0]
    return -sign(cr)


def _cells_planar(vectors, nz):
    # boundary rays of the cells are the directions orthogonal to each a_i
    rays = []
    for i in nz:
        a = vectors[i]
        p = (-a[1], a[0])
        rays.append(p)
        rays.append((-p[0], -p[1]))
    rays.sort(key=cmp_to_key(_angle_cmp))
    uniq = []
    for r in rays:
        if not uniq or _angle_cmp(uniq[-1], r) != 0:
            uniq.append(r)
    if len(uniq) == 2:
        # a single line: the two half-planes
        a = vectors[nz[0]]
        return [tuple(a), (-a[0], -a[1])]
    wit = []
    for j in range(len(uniq)):
        r1, r2 = uniq[j], uniq[(j + 1) % len(uniq)]
        wit.append((r1[0] + r2[0], r1[1] + r2[1]))
    return wit


def _cells_generic(vectors, nz, k):
    # incremental insertion; each cell carries an exact interior witness
    cells = [((), None)]
    inserted = []
    for i in nz:
        a = vectors[i]
        new = []
        for sig, u in cells:
            if u is None:
                # first hyperplane: both half-spaces
                new.append(((1,), a))
                new.append(((-1,), tuple(-x for x in a)))
                continue
            val = sign(dot(a, u))
            vs = [vectors[j] for j in inserted] + [a]
            if val != 0:
                new.append((sig + (val,), u))
                other = strict_cell_witness(vs, sig + (-val,))
                if other is not None:
                    new.append((sig + (-val,), other))
            else:
                for s in (1, -1):
                    w = strict_cell_witness(vs, sig + (s,))
                    if w is not None:
                        new.append((sig + (s,), w))
        cells = new
        inserted.append(i)
    return [u for _, u in cells]


def enumerate_open_cells(vectors, method="auto"):
    """All open cells of the central arrangement {a_i . u = 0}.

    Identically zero vectors are recorded in zero_support and skipped.
    Returns a list of Cell sorted by sign vector (descending, so the
    all-plus-first convention is deterministic).
    """
    vectors = [vec(a) for a in vectors]
    if not vectors:
        return []
    k = len(vectors[0])
    if k < 1:
        raise ValueError("arrangement needs k >= 1")
    zero = frozenset(i for i, a in enumerate(vectors) if not any(a))
    nz = [i for i in range(len(vectors)) if i not in zero]

    if not nz:
        u = tuple(Fraction(int(j == 0)) for j in range(k))
        return [Cell(SignVector(tuple(0 for _ in vectors), zero), u)]

    if method == "auto":
        method = "planar" if k == 2 else ("line" if k == 1 else "lp")
    if method == "line":
        witnesses = [(Fraction(1),), (Fraction(-1),)]
    elif method == "planar":
        witnesses = _cells_planar(vectors, nz)
    elif method == "lp":
        witnesses = _cells_generic(vectors, nz, k)
    else:
        raise ValueError("unknown method %r" % method)

    cells = {}
    for u in witnesses:
        sig = tuple(sign(dot(a, u)) for a in vectors)
        assert all(sig[i] != 0 for i in nz), "witness on a hyperplane"
        cells[sig] = tuple(u)
    return [Cell(SignVector(s, zero), cells[s]) for s in sorted(cells, reverse=True)]
