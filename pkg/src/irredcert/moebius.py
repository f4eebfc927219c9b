"""Moebius transforms of integer polynomials.

For a 2x2 integer matrix M = (a b; c d) the transform of f = sum c_j x^j is

    mu_M(f) = sum_j c_j (ax+b)^j (cx+d)^(deg f - j).

When det M != 0 and the degree is preserved, primitive_part(mu_M(f)) is
irreducible iff f is, which lets a certificate for a transformed polynomial
certify the original.  The transform is verified without recomputing it:
g = prim(mu_M(f)) iff g is primitive with positive leading coefficient and
g is proportional to t -> (ct+d)^d f((at+b)/(ct+d)) at deg(f)+1 rational
points (two degree-d polynomials whose cross products agree at d+1 points
are proportional).

candidate_transforms enumerates the rewriting catalog used by the engine:
the identity, the reversal, scalings by prime powers of the fixed divisor
(both directions), scalings and reverse-scalings by simple rationals, and
combined multi-prime rescalings with their simple-rational products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List

from .errors import VerificationFailure
from .polyz import PolyZ, content, fixed_divisor, primitive_part


@dataclass(frozen=True)
class MoebiusMatrix:
    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)


IDENTITY = MoebiusMatrix(1, 0, 0, 1)
REVERSAL = MoebiusMatrix(0, 1, 1, 0)


def apply(m: MoebiusMatrix, f: PolyZ) -> PolyZ:
    """mu_M(f), computed exactly; the degree may drop when f(a/c) = 0."""
    if m.det == 0:
        raise ValueError("degenerate Moebius matrix")
    if not f:
        raise ValueError("Moebius transform of the zero polynomial")
    d = f.degree
    num = PolyZ((m.b, m.a))
    den = PolyZ((m.d, m.c))
    den_pows = [PolyZ((1,))]
    for _ in range(d):
        den_pows.append(den_pows[-1] * den)
    out = PolyZ()
    num_pow = PolyZ((1,))
    for j, cj in enumerate(f.coeffs):
        if cj:
            out = out + num_pow * den_pows[d - j] * cj
        if j < d:
            num_pow = num_pow * num
    return out


def pseudo_inverse(m: MoebiusMatrix) -> MoebiusMatrix:
    """The classical adjoint; composing gives det(M)^deg(f) * f when degrees hold."""
    return MoebiusMatrix(m.d, -m.b, -m.c, m.a)


def verify_transform(f: PolyZ, m: MoebiusMatrix, g: PolyZ) -> bool:
    """True iff g = primitive_part(mu_M(f)), checked by ratio evaluation."""
    d = f.degree
    if d < 2 or g.degree != d:
        raise VerificationFailure("transform.degree",
                                  f"deg f = {d}, deg g = {g.degree}")
    if m.det == 0:
        raise VerificationFailure("transform.degenerate", "det M = 0")
    if g.lc < 0 or content(g) != 1:
        return False

    def value_at(t: Fraction):
        den = m.c * t + m.d
        if den == 0:
            return None
        return den ** d * f(Fraction(m.a * t + m.b, den))

    points = []
    t = 0
    candidates = 0
    while len(points) < d + 1 and candidates < 10 * (d + 1):
        for tt in ((t,) if t == 0 else (t, -t)):
            candidates += 1
            ft = Fraction(tt)
            gt = g(ft)
            if gt == 0:
                continue
            vt = value_at(ft)
            if vt is None or vt == 0:
                continue
            points.append((gt, vt))
            if len(points) == d + 1:
                break
        t += 1
    if len(points) < d + 1:
        raise VerificationFailure("transform.points",
                                  f"fewer than {d + 1} usable evaluation points")
    g0, v0 = points[0]
    return all(gt * v0 == g0 * vt for gt, vt in points[1:])


def _prime_factors(n: int, bound: int) -> List[int]:
    out = []
    for q in range(2, bound + 1):
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
    return out


def _multiplicity(q: int, n: int) -> int:
    k = 0
    while n % q == 0:
        k += 1
        n //= q
    return k


def candidate_transforms(f: PolyZ, max_candidates: int) -> List[MoebiusMatrix]:
    """Ordered rewriting catalog for f (primitive, degree >= 2).

    Starts with the identity, then the reversal (when f(0) != 0), then
    per-prime scalings q^j in both directions for each prime q of the fixed
    divisor, then scalings and reverse-scalings by simple rationals u/v with
    u, v <= 5 coprime, then combined multi-prime rescalings of the fixed
    divisor and their products with the simple rationals.  Truncated to
    max_candidates after deduplication.
    """
    if f.degree < 2:
        raise ValueError("transform catalog needs degree >= 2")
    out: List[MoebiusMatrix] = [IDENTITY]
    f0 = f(0)
    if f0 != 0:
        out.append(REVERSAL)

    delta = fixed_divisor(f)
    qs = _prime_factors(delta, f.degree) if f0 != 0 else []
    mults = {q: _multiplicity(q, abs(f0)) for q in qs}
    if qs:
        for j in range(1, max(mults.values()) + 1):
            for q in qs:
                if j <= mults[q]:
                    out.append(MoebiusMatrix(q ** j, 0, 0, 1))
                    out.append(MoebiusMatrix(1, 0, 0, q ** j))

    simple = [(u, v) for u in range(1, 6) for v in range(1, 6)
              if gcd(u, v) == 1 and (u, v) != (1, 1)]
    simple.sort(key=lambda uv: (uv[0] + uv[1], uv[0]))
    for u, v in simple:
        out.append(MoebiusMatrix(u, 0, 0, v))
        if f0 != 0:
            out.append(MoebiusMatrix(0, u, v, 0))

    if len(qs) >= 2:
        combined = []
        exps = [(-1, 0, 1)] * len(qs)
        from itertools import product as iproduct
        for choice in iproduct(*exps):
            if sum(1 for e in choice if e) < 2:
                continue
            u = v = 1
            for q, e in zip(qs, choice):
                if e > 0:
                    u *= q
                elif e < 0:
                    v *= q
            combined.append((u, v))
        combined.sort(key=lambda uv: (uv[0] + uv[1], uv[0]))
        for u, v in combined:
            out.append(MoebiusMatrix(u, 0, 0, v))
        for u0, v0 in combined:
            for u, v in simple:
                uu, vv = u0 * u, v0 * v
                g = gcd(uu, vv)
                out.append(MoebiusMatrix(uu // g, 0, 0, vv // g))

    seen = set()
    unique = []
    for m in out:
        key = (m.a, m.b, m.c, m.d)
        if key not in seen:
            seen.add(key)
            unique.append(m)
        if len(unique) == max_candidates:
            break
    return unique
