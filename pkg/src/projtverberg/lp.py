"""
Exact feasibility LPs by phase-one simplex over the rationals.

Bland's rule is used throughout, so the method terminates without
any cycling safeguards beyond the pivoting rule itself.
"""

from fractions import Fraction

from .linalg import vec

ZERO = Fraction(0)
ONE = Fraction(1)


def feasible_point(A, b):
    """Find x >= 0 with A x = b, or return None.

    A is a list of m rows of length N, b has length m. The returned
    point is a basic feasible solution with exact rational entries.
    """
    m = len(A)
    if m == 0:
        return ()
    N = len(A[0])
    rows = []
    rhs = []
    for row, bi in zip(A, b):
        row = list(vec(row))
        bi = Fraction(bi)
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)

    # tableau columns: N structural, m artificial
    T = [rows[i] + [ONE if j == i else ZERO for j in range(m)] + [rhs[i]]
         for i in range(m)]
    basis = [N + i for i in range(m)]
    ncol = N + m
    # reduced costs of the phase-one objective (minimise sum of artificials)
    cost = [ZERO] * (ncol + 1)
    for i in range(m):
        for j in range(ncol + 1):
            if j < N or j == ncol:
                cost[j] -= T[i][j]

    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncol] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # cannot happen in phase one: the objective is bounded below by 0
            raise ArithmeticError("unbounded phase-one problem")
        _pivot(T, cost, leave, enter)
        basis[leave] = enter

    if cost[ncol] != 0:
        return None
    x = [ZERO] * N
    for i, bv in enumerate(basis):
        if bv < N:
            x[bv] = T[i][ncol]
    return tuple(x)


def _pivot(T, cost, r, c):
    piv = T[r][c]
    if piv != 1:
        T[r] = [x / piv for x in T[r]]
    Tr = T[r]
    for i in range(len(T)):
        if i != r:
            f = T[i][c]
            if f:
                T[i] = [a - f * b for a, b in zip(T[i], Tr)]
    f = cost[c]
    if f:
        cost[:] = [a - f * b for a, b in zip(cost, Tr)]


def strict_cell_witness(vectors, signs):
    """Exact u with signs[i] * <vectors[i], u> >= 1 for all i, else None.

    By scaling this is the same as asking for the strict system to be
    feasible. u is free, so it is split as u = u_plus - u_minus.
    """
    if not vectors:
        return None
    k = len(vectors[0])
    m = len(vectors)
    A = []
    for i, (a, s) in enumerate(zip(vectors, signs)):
        a = [s * x for x in vec(a)]
        slack = [ZERO] * m
        slack[i] = -ONE
        A.append(a + [-x for x in a] + slack)
    x = feasible_point(A, [ONE] * m)
    if x is None:
        return None
    return tuple(x[j] - x[k + j] for j in range(k))


def in_convex_hull(c, points):
    """Convex weights lam >= 0 with sum lam = 1 and sum lam_i p_i = c, else None."""
    points = [vec(p) for p in points]
    if not points:
        return None
    dim = len(points[0])
    A = [[p[j] for p in points] for j in range(dim)]
    A.append([ONE] * len(points))
    return feasible_point(A, list(vec(c)) + [ONE])
