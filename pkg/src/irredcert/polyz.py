"""Exact arithmetic on univariate integer polynomials.

A polynomial is stored densely in ascending degree order: ``coeffs[j]`` is
the coefficient of x^j.  The zero polynomial is the empty tuple; a nonzero
polynomial always has a nonzero last coefficient.  All arithmetic is exact
(Python ints and fractions.Fraction), and every value here is immutable, so
everything in this module is safe to share between threads.

Besides ring operations the module provides the certificate-facing
primitives: content / primitive part, squarefree test, the Graeffe
root-squaring transform, the companion polynomial f* used to verify root
bounds, computation and verification of rational root bounds, and the fixed
divisor gcd{f(n) : n in Z}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# Exact rational scalar used throughout (lowest terms, positive denominator).
Rat = Fraction

DEFAULT_MAX_GRAEFFE = 6
DEFAULT_DYADIC_BITS = 10


class PolyZ:
    """Dense polynomial over Z; immutable and hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyZ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PolyZ is immutable")

    def __repr__(self) -> str:
        return f"PolyZ({list(self.coeffs)!r})"

    def __neg__(self) -> "PolyZ":
        return PolyZ(-c for c in self.coeffs)

    def __add__(self, other) -> "PolyZ":
        if isinstance(other, int):
            other = PolyZ((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyZ(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyZ":
        if isinstance(other, int):
            other = PolyZ((other,))
        return self + (-other)

    def __rsub__(self, other) -> "PolyZ":
        return (-self) + other

    def __mul__(self, other) -> "PolyZ":
        if isinstance(other, int):
            return PolyZ(other * c for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyZ()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyZ":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = PolyZ((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, t):
        """Evaluate by Horner's rule; exact for int and Fraction arguments."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * t + c
        return v

    def shift(self, k: int) -> "PolyZ":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return PolyZ((0,) * k + self.coeffs)


X = PolyZ((0, 1))
ONE = PolyZ((1,))


def content(f: PolyZ) -> int:
    """gcd of all coefficients (>= 1); rejects the zero polynomial."""
    if not f:
        raise ValueError("content of the zero polynomial is undefined")
    g = 0
    for c in f.coeffs:
        g = gcd(g, c)
    return g


def primitive_part(f: PolyZ) -> PolyZ:
    """f divided by its content, sign-normalized to a positive leading coefficient."""
    c = content(f)
    if f.lc < 0:
        c = -c
    return PolyZ(v // c for v in f.coeffs)


def eval_rat(f: PolyZ, t) -> Fraction:
    """Exact value of f at a rational point."""
    return Fraction(f(Fraction(t)))


def derivative(f: PolyZ) -> PolyZ:
    return PolyZ(j * c for j, c in enumerate(f.coeffs) if j > 0)


def _pseudo_rem(a: PolyZ, b: PolyZ) -> PolyZ:
    # prem(a, b): lc(b)^(deg a - deg b + 1) * a reduced mod b, all over Z.
    da, db = a.degree, b.degree
    lb = b.lc
    r = list(a.coeffs)
    for k in range(da - db, -1, -1):
        lead = r[db + k]
        r = [lb * ri for ri in r]
        if lead:
            for i, c in enumerate(b.coeffs):
                r[i + k] -= lead * c
        r.pop()  # coefficient at degree db+k is now zero
    return PolyZ(r)


def poly_gcd(f: PolyZ, g: PolyZ) -> PolyZ:
    """gcd in Q[x], returned primitive in Z[x] with positive leading coefficient.

    Primitive polynomial remainder sequence; exact by construction.
    """
    a, b = f, g
    if a.degree < b.degree:
        a, b = b, a
    if not b:
        return primitive_part(a) if a else a
    a, b = primitive_part(a), primitive_part(b)
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, (primitive_part(r) if r else r)
    return primitive_part(a)


def is_squarefree(f: PolyZ) -> bool:
    """True iff gcd(f, f') over Q is constant."""
    if f.degree < 1:
        raise ValueError("squarefree test needs degree >= 1")
    return poly_gcd(f, derivative(f)).degree == 0


def graeffe(f: PolyZ) -> PolyZ:
    """Root-squaring transform: the g with g(x^2) = +-f(x)f(-x), deg g = deg f, lc g > 0."""
    if f.degree < 1:
        raise ValueError("graeffe needs degree >= 1")
    h = f * PolyZ((-1) ** j * c for j, c in enumerate(f.coeffs))
    if f.degree % 2 == 1:
        h = -h
    return PolyZ(h.coeffs[0::2])


def fstar(f: PolyZ) -> PolyZ:
    """Companion polynomial |a_d| x^d - sum_{j<d} |a_j| x^j."""
    if f.degree < 1:
        raise ValueError("fstar needs degree >= 1")
    cs = [-abs(c) for c in f.coeffs]
    cs[-1] = abs(f.lc)
    return PolyZ(cs)


@dataclass(frozen=True)
class RootBoundCert:
    """A claimed root bound rho together with the Graeffe depth that verifies it."""

    rho: Fraction
    graeffe_iters: int


def verify_root_bound(f: PolyZ, cert: RootBoundCert,
                      max_graeffe: int = DEFAULT_MAX_GRAEFFE) -> bool:
    """Check fstar(graeffe^k(f))(rho^(2^k)) > 0 in exact rational arithmetic.

    A True result guarantees |alpha| <= rho for every complex root alpha of f.
    The test is conservative: it may return False for a genuine root bound.
    """
    if f.degree < 1:
        raise ValueError("root bound verification needs degree >= 1")
    k = cert.graeffe_iters
    if not (0 <= k <= max_graeffe):
        return False
    rho = Fraction(cert.rho)
    if rho <= 0:
        return False
    fk = f
    for _ in range(k):
        fk = graeffe(fk)
    return fstar(fk)(rho ** (1 << k)) > 0


def _ceil_nth_root(x: int, n: int) -> int:
    # Smallest r >= 1 with r^n >= x, for x >= 1.
    if x <= 1:
        return 1
    hi = 1 << ((x.bit_length() + n - 1) // n)
    lo = 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def compute_root_bound(f: PolyZ, max_iters: int = DEFAULT_MAX_GRAEFFE,
                       dyadic_bits: int = DEFAULT_DYADIC_BITS) -> RootBoundCert:
    """Smallest verifiable dyadic root bound over Graeffe depths 0..max_iters.

    For each depth k the smallest rho = N / 2^dyadic_bits accepted by
    verify_root_bound is located by binary search, starting from the Cauchy
    bound 1 + max|a_j|/|a_d| of the k-fold Graeffe iterate (at which fstar is
    provably positive).  Returns the smallest rho found, ties to smaller k.
    """
    if f.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    den = 1 << dyadic_bits
    best = None
    fk = f
    for k in range(max_iters + 1):
        if k:
            fk = graeffe(fk)
        e = 1 << k
        star = fstar(fk)

        def accepts(num: int) -> bool:
            return star(Fraction(num, den) ** e) > 0

        m = max(abs(c) for c in fk.coeffs[:-1]) if fk.degree > 0 else 0
        cauchy = 1 + Fraction(m, abs(fk.lc))
        # smallest num with (num/den)^e >= cauchy
        hi = _ceil_nth_root(-(-cauchy.numerator * den ** e // cauchy.denominator), e)
        while not accepts(hi):  # hi = Cauchy bound is positive unless m == 0 edge cases
            hi *= 2
        lo = 1
        while lo < hi:
            mid = (lo + hi) // 2
            if accepts(mid):
                hi = mid
            else:
                lo = mid + 1
        rho = Fraction(hi, den)
        if best is None or rho < best.rho:
            best = RootBoundCert(rho, k)
    return best


def fixed_divisor(f: PolyZ) -> int:
    """gcd(f(0), f(1), ..., f(deg f)) = gcd{f(n) : n in Z}.

    deg(f)+1 consecutive values are needed: in the binomial basis
    f(x) = sum b_k C(x,k) there are deg(f)+1 integer coordinates b_k, and the
    finite differences recovering them use f(0..deg f).
    """
    if not f:
        raise ValueError("fixed divisor of the zero polynomial is undefined")
    g = 0
    for n in range(f.degree + 1):
        g = gcd(g, f(n))
        if g == 1:
            break
    return g
