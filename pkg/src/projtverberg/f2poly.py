"""
Sparse polynomials over GF(2) and the coinvariant quotient

    GF(2)[e_1, ..., e_n] / (positive-degree symmetric polynomials),

which is the mod 2 cohomology ring of the complete flag manifold of R^n.
"""

from functools import reduce
from itertools import combinations, combinations_with_replacement, product
from math import factorial


class F2Poly:
    """A set of exponent tuples; a monomial is present iff its coefficient is 1."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        self.nvars = nvars
        acc = set()
        for t in terms:
            t = tuple(t)
            if len(t) != nvars:
                raise ValueError("exponent vector of wrong length")
            acc ^= {t}
        self.terms = frozenset(acc)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, [(0,) * nvars])

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def var(cls, nvars, i):
        """The variable e_{i+1} (0-based index i)."""
        return cls(nvars, [tuple(int(j == i) for j in range(nvars))])

    @classmethod
    def monomial(cls, exps):
        return cls(len(exps), [exps])

    def _same(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        self._same(other)
        p = F2Poly(self.nvars)
        p.terms = self.terms ^ other.terms
        return p

    __sub__ = __add__

    def __mul__(self, other):
        self._same(other)
        acc = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        p = F2Poly(self.nvars)
        p.terms = frozenset(acc)
        return p

    def __pow__(self, k):
        result = F2Poly.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, F2Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(t) for t in self.terms), default=-1)

    def sorted_terms(self):
        """Terms by degree, then exponent tuple, largest first."""
        return sorted(self.terms, key=lambda t: (sum(t), t), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(_mono_str(t) for t in self.sorted_terms())


def _mono_str(t):
    parts = []
    for i, e in enumerate(t):
        if e == 1:
            parts.append("e%d" % (i + 1))
        elif e > 1:
            parts.append("e%d^%d" % (i + 1, e))
    return "*".join(parts) or "1"


def elementary(nvars, k, variables=None):
    variables = range(nvars) if variables is None else variables
    terms = []
    for S in combinations(variables, k):
        terms.append(tuple(int(j in S) for j in range(nvars)))
    return F2Poly(nvars, terms)


def complete_homogeneous(nvars, k, variables):
    """h_k in the given variables (all monomials of degree k in them)."""
    terms = []
    for combo in combinations_with_replacement(variables, k):
        e = [0] * nvars
        for j in combo:
            e[j] += 1
        terms.append(tuple(e))
    return F2Poly(nvars, terms)


class CoinvariantRing:
    """Normal forms modulo the symmetric ideal in n variables.

    Division basis g_i = h_{n-i+1}(e_1, ..., e_i), i = 1..n, is a Groebner
    basis in lex order e_n > ... > e_1 with leading terms e_i^{n-i+1}.
    Standard monomials therefore have exp(e_i) <= n - i.
    """

    def __init__(self, n):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.basis = [complete_homogeneous(n, n - i, range(i + 1)) for i in range(n)]
        # tails: g_i minus its leading term e_i^{n-i}
        self._tails = []
        for i, g in enumerate(self.basis):
            lead = tuple((n - i) if j == i else 0 for j in range(n))
            assert lead in g.terms
            self._tails.append(g.terms - {lead})
        self._cache = {}

    def bound(self, i):
        return self.n - 1 - i

    def is_standard(self, t):
        return all(t[i] <= self.bound(i) for i in range(self.n))

    def _reduce_monomial(self, t):
        if t in self._cache:
            return self._cache[t]
        i = next((i for i in range(self.n) if t[i] > self.bound(i)), None)
        if i is None:
            result = frozenset([t])
        else:
            lead = self.n - i
            rest = list(t)
            rest[i] -= lead
            acc = set()
            for tail in self._tails[i]:
                m = tuple(a + b for a, b in zip(rest, tail))
                acc ^= self._reduce_monomial(m)
            result = frozenset(acc)
        self._cache[t] = result
        return result

    def reduce(self, poly):
        if poly.nvars != self.n:
            raise ValueError("variable-count mismatch: %d vs %d" % (poly.nvars, self.n))
        acc = set()
        for t in poly.terms:
            acc ^= self._reduce_monomial(t)
        p = F2Poly(self.n)
        p.terms = frozenset(acc)
        return p

    def mul(self, a, b):
        return self.reduce(a * b)

    def power(self, a, k):
        result = F2Poly.one(self.n)
        base = self.reduce(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def standard_monomials(self):
        return [t for t in product(*(range(self.bound(i) + 1) for i in range(self.n)))]

    def dimension(self):
        return factorial(self.n)

    def top_degree(self):
        return self.n * (self.n - 1) // 2


def coinvariant_reduce(poly, ring=None):
    ring = ring or CoinvariantRing(poly.nvars)
    return ring.reduce(poly)


def product_of(polys, nvars):
    return reduce(lambda a, b: a * b, polys, F2Poly.one(nvars))
