"""Arithmetic and factorization in F_p[x] for word-sized primes p.

A PolyModP holds its modulus and a tuple of residues in [0, p), ascending
degree, with a nonzero leading residue (the zero polynomial is the empty
tuple).  Moduli are restricted to p < 2^31: degree analysis prefers small
primes, and the verifier's costs stay bounded.

The verifier-facing irreducibility test follows the Berlekamp matrix route:
g is irreducible iff gcd(g, g') is constant and rank(B - I) = deg(g) - 1,
where row i of B is x^(i*p) mod g.  Nullity 1 alone would also admit powers
h^e of an irreducible h, hence the squarefree pre-check.

Factorization (generation side only) is distinct-degree splitting followed
by Cantor-Zassenhaus equal-degree splitting; its internal randomness is
seeded from (p, coefficients) so results are reproducible.  Factors are
returned monic and canonically sorted by (degree, coefficient tuple).
"""

from __future__ import annotations

import random

MAX_MODULUS = 1 << 31


class PolyModP:
    """Dense polynomial over F_p; immutable."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        if not (2 <= p < MAX_MODULUS):
            raise ValueError(f"modulus {p} out of range")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyModP)
                and self.p == other.p and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyModP is immutable")

    def __repr__(self) -> str:
        return f"PolyModP({self.p}, {list(self.coeffs)!r})"

    def _new(self, coeffs) -> "PolyModP":
        return PolyModP(self.p, coeffs)

    def __add__(self, other: "PolyModP") -> "PolyModP":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return self._new(out)

    def __sub__(self, other: "PolyModP") -> "PolyModP":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % self.p
        return self._new(out)

    def __mul__(self, other: "PolyModP") -> "PolyModP":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return self._new(out)

    def scale(self, c: int) -> "PolyModP":
        return self._new(c * v for v in self.coeffs)

    def monic(self) -> "PolyModP":
        if not self or self.is_monic:
            return self
        inv = pow(self.lc, -1, self.p)
        return self.scale(inv)

    def __divmod__(self, other: "PolyModP"):
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        inv = pow(other.lc, -1, p)
        r = list(self.coeffs)
        db = other.degree
        q = [0] * max(len(r) - db, 1)
        for k in range(len(r) - 1 - db, -1, -1):
            t = (r[db + k] * inv) % p
            if t:
                q[k] = t
                for i, c in enumerate(other.coeffs):
                    r[i + k] = (r[i + k] - t * c) % p
        return self._new(q), self._new(r[:db])

    def __floordiv__(self, other: "PolyModP") -> "PolyModP":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyModP") -> "PolyModP":
        return divmod(self, other)[1]

    def mulmod(self, other: "PolyModP", modulus: "PolyModP") -> "PolyModP":
        return (self * other) % modulus

    def powmod(self, e: int, modulus: "PolyModP") -> "PolyModP":
        result = self._new((1,))
        base = self % modulus
        while e:
            if e & 1:
                result = result.mulmod(base, modulus)
            e >>= 1
            if e:
                base = base.mulmod(base, modulus)
        return result

    def gcd(self, other: "PolyModP") -> "PolyModP":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "PolyModP":
        return self._new(j * c for j, c in enumerate(self.coeffs) if j > 0)

    def __call__(self, t: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = (v * t + c) % self.p
        return v


def reduce(f, p: int) -> PolyModP:
    """Coefficientwise reduction of a PolyZ mod p; the degree may drop."""
    return PolyModP(p, f.coeffs)


def _is_squarefree(g: PolyModP) -> bool:
    d = g.derivative()
    if not d:
        return g.degree == 0
    return g.gcd(d).degree == 0


def _x(p: int) -> PolyModP:
    return PolyModP(p, (0, 1))


def _edf(u: PolyModP, k: int, rng: random.Random) -> list:
    # Cantor-Zassenhaus equal-degree splitting: u is squarefree, monic,
    # a product of irreducibles all of degree k.
    if u.degree == k:
        return [u]
    p = u.p
    while True:
        t = PolyModP(p, [rng.randrange(p) for _ in range(u.degree)] + [1])
        if p == 2:
            # trace map sum t^(2^i), i < k
            e = t % u
            acc = e
            for _ in range(k - 1):
                e = e.mulmod(e, u)
                acc = acc + e
            w = u.gcd(acc)
        else:
            e = t.powmod((p ** k - 1) // 2, u)
            w = u.gcd(e - PolyModP(p, (1,)))
        if 0 < w.degree < u.degree:
            return _edf(w, k, rng) + _edf(u // w, k, rng)


def factor_mod_p(g: PolyModP) -> list:
    """Monic irreducible factors of a squarefree g, canonically sorted.

    The product of the factors times lc(g) equals g.  Non-squarefree input
    is a domain error.
    """
    if g.degree < 1:
        raise ValueError("factorization needs degree >= 1")
    if not _is_squarefree(g):
        raise ValueError("factor_mod_p requires squarefree input")
    p = g.p
    seed = p
    for c in g.coeffs:
        seed = seed * 0x10001 + c + 1
    rng = random.Random(seed)

    m = g.monic()
    factors = []
    h = _x(p)
    v = m
    k = 0
    while v.degree >= 2 * (k + 1):
        k += 1
        h = h.powmod(p, v)
        w = v.gcd(h - _x(p))
        if w.degree > 0:
            factors.extend(_edf(w, k, rng))
            v = v // w
            h = h % v
    if v.degree > 0:
        factors.append(v)
    factors.sort(key=lambda q: (q.degree, q.coeffs))
    return factors


def berlekamp_matrix(g: PolyModP):
    """Rows are the coefficient vectors of x^(i*p) mod g, i = 0..deg(g)-1."""
    if not g.is_monic or g.degree < 1:
        raise ValueError("Berlekamp matrix needs a monic polynomial of degree >= 1")
    d = g.degree
    xp = _x(g.p).powmod(g.p, g)
    row = PolyModP(g.p, (1,))
    rows = []
    for _ in range(d):
        vec = list(row.coeffs) + [0] * (d - len(row.coeffs))
        rows.append(vec)
        row = row.mulmod(xp, g)
    return rows


def _rank_mod_p(rows, p: int) -> int:
    m = [r[:] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def is_irreducible_mod_p(g: PolyModP) -> bool:
    """True iff monic g is irreducible over F_p.

    gcd(g, g') must be constant (excludes powers h^e, which share the
    nullity-1 signature) and rank(B - I) must be deg(g) - 1.
    """
    if not g.is_monic or g.degree < 1:
        raise ValueError("irreducibility test needs a monic polynomial of degree >= 1")
    if g.degree == 1:
        return True
    if not _is_squarefree(g):
        return False
    d = g.degree
    b = berlekamp_matrix(g)
    for i in range(d):
        b[i][i] = (b[i][i] - 1) % g.p
    return _rank_mod_p(b, g.p) == d - 1
