"""
Arithmetic and mod-2 cohomological hypothesis gates for the projective
center point and Tverberg type theorems.

Every gate returns a Gate: a truthy verdict plus a short explanation of
which clause decided it, suitable for reports.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .f2poly import CoinvariantRing, F2Poly, coinvariant_reduce  # noqa: F401


@dataclass
class Gate:
    verdict: bool
    method: str
    explanation: str
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict


def is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_power(r):
    """(p, l) with r = p**l, or None."""
    if r < 2:
        return None
    for p in range(2, r + 1):
        if r % p == 0:
            l = 0
            while r % p == 0:
                r //= p
                l += 1
            return (p, l) if r == 1 else None
    return None


def cell_dimension(d, v):
    """D = (d - v)(v + 1), the dimension of the Schubert cell of complements of V."""
    return (d - v) * (v + 1)


def tverberg_r(n, d, v):
    """ceil(n / ((d-v)(v+1) + 1))."""
    if not 0 <= v < d:
        raise ValueError("need 0 <= v < d, got v=%d, d=%d" % (v, d))
    if n < 1:
        raise ValueError("need n >= 1")
    q = cell_dimension(d, v) + 1
    return -(-n // q)


def required_points(D, r):
    if D < 1 or r < 1:
        raise ValueError("need D >= 1 and r >= 1")
    return (D + 1) * (r - 1) + 1


def partition_count_lower_bound(p, l, d):
    """1/(r-1)! * (r/(l+1))^ceil((r-1)(d+1)/2) with r = p^l."""
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    if l < 1 or d < 1:
        raise ValueError("need l >= 1 and d >= 1")
    r = p ** l
    e = -(-(r - 1) * (d + 1) // 2)
    return Fraction(1, factorial(r - 1)) * Fraction(r, l + 1) ** e


@lru_cache(maxsize=None)
def q_binomial_minus1(n, k):
    """Gaussian binomial [n choose k]_q evaluated at q = -1, by recursion."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0 or k == n:
        return 1
    return q_binomial_minus1(n - 1, k - 1) + (-1) ** k * q_binomial_minus1(n - 1, k)


def q_binomial_minus1_closed(n, k):
    if k * (n - k) % 2:
        return 0
    return comb(n // 2, k // 2)


def euler_char_grassmannian(nplus1, kplus1):
    """Euler characteristic of the real Grassmannian G(nplus1, kplus1)."""
    return q_binomial_minus1(nplus1, kplus1)


def _digits(n, p):
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


def kummer_nonzero_mod_p(n, k, p):
    """C(n, k) != 0 mod p iff every base-p digit of k is at most that of n."""
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    dn, dk = _digits(n, p), _digits(k, p)
    dn += [0] * (len(dk) - len(dn))
    return all(a >= b for a, b in zip(dn, dk))


def thm6_condition(d, v, p):
    """Gate for choosing both V and W: D even and C(floor((d+1)/2), floor((v+1)/2)) != 0 mod p."""
    D = cell_dimension(d, v)
    a, b = (d + 1) // 2, (v + 1) // 2
    if D % 2:
        return Gate(False, "closed-form gate",
                    "D = %d is odd, so the Euler characteristic vanishes" % D, {"D": D})
    ok = kummer_nonzero_mod_p(a, b, p)
    return Gate(ok, "closed-form gate",
                "D = %d even; C(%d,%d) = %d is %s mod %d"
                % (D, a, b, comb(a, b), "nonzero" if ok else "zero", p),
                {"D": D, "binomial": comb(a, b),
                 "euler_characteristic": euler_char_grassmannian(d + 1, v + 1)})


def _linear(n, *idx):
    return F2Poly(n, [tuple(int(j == i) for j in range(n)) for i in idx])


def flag_class(d, v, w):
    """prod (e_i + e_j) over i <= d-v < j <= (d-v) + (d-w), in d+1 variables."""
    n = d + 1
    vh, wh = d - v, d - w
    if vh + wh > n:
        raise ValueError("(d-v) + (d-w) = %d exceeds d+1 = %d" % (vh + wh, n))
    ring = CoinvariantRing(n)
    P = F2Poly.one(n)
    for i in range(vh):
        for j in range(vh, vh + wh):
            P = ring.mul(P, _linear(n, i, j))
    return P, ring


def flag_condition(d, v, w, m):
    """Is w_D(eta)^(m-1) nonzero in the mod 2 cohomology of the flag manifold?"""
    if not (0 <= v < d and 0 <= w < d and m >= 1):
        raise ValueError("need 0 <= v, w < d and m >= 1")
    n = d + 1
    D = (d - v) * (d - w)
    if m == 1:
        return Gate(True, "cohomology computation", "m = 1: empty power is 1",
                    {"reduced": F2Poly.one(n), "D": D})
    top = n * (n - 1) // 2
    if D * (m - 1) > top:
        return Gate(False, "cohomology computation",
                    "degree %d exceeds top degree %d" % (D * (m - 1), top),
                    {"reduced": F2Poly.zero(n), "D": D})
    P, ring = flag_class(d, v, w)
    red = ring.power(P, m - 1)
    return Gate(bool(red), "cohomology computation",
                "reduced class %r" % (red,), {"reduced": red, "D": D})


def grassmann_top_power(N, k, e):
    """(e_1 ... e_k)^e in the coinvariant ring on N variables.

    w_k of the tautological k-bundle over G_k(R^N) pulls back to e_1...e_k
    on the flag manifold, and the pullback is injective mod 2.
    """
    ring = CoinvariantRing(N)
    mono = F2Poly.monomial(tuple(int(j < k) for j in range(N)))
    return ring.power(mono, e)


def thm4_condition(d, v, w, m, p):
    """Hypothesis gate for the transversal projective Tverberg theorem."""
    data = {"d": d, "v": v, "w": w, "m": m, "p": p}
    if not (0 <= v < d and m >= 1):
        raise ValueError("need 0 <= v < d and m >= 1")
    regime = (w == m * (d - v) - 1) and w < d
    data["regime"] = regime
    if m == 1:
        return Gate(True, "closed-form gate", "m = 1: the base is a point", data)

    closed = p == 2 or (d - w) % 2 == 0
    if p == 2 and regime:
        # e(Delta)^(m-1) = w_{d-w}(gamma)^{(d-v)(m-1)} over G_{d-w}(R^{v+1})
        N, k, e = v + 1, d - w, (d - v) * (m - 1)
        red = grassmann_top_power(N, k, e)
        data["reduced"] = red
        data["exponent"] = e
        data["cohomology_concurs"] = bool(red)
        return Gate(bool(red), "cohomology computation",
                    "p = 2; w_%d(gamma)^%d over G_%d(R^%d) reduces to %r"
                    % (k, e, k, N, red), data)
    if closed:
        why = "p = 2" if p == 2 else "d - w = %d is even" % (d - w)
        if not regime:
            why += " (outside the tight regime w = m(d-v)-1)"
        return Gate(regime, "closed-form gate", why, data)
    return Gate(False, "unverified",
                "p = %d odd, m = %d > 1 and d - w = %d odd: not covered" % (p, m, d - w), data)
