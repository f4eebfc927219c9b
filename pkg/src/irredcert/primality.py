"""Probabilistic primality testing and Lucas-Pratt certificates.

A primality certificate is one of three cases: SmallPrime (below 2^20 the
verifier just trial-divides, so no body is needed), LucasPratt (a witness w
with w^(n-1) = 1 and w^((n-1)/q) != 1 mod n for every prime q | n-1, plus a
certificate for each q), or ProbablePrime (a round count; only acceptable
to a non-strict verifier).

Generation factors n-1 by trial division below 10^4 and then Brent-cycle
Pollard rho under an explicit budget of group operations; it returns None
rather than exceeding the budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .errors import VerificationFailure

SELF_CERTIFYING_BOUND = 1 << 20

# Deterministic witness set for n < 3.3 * 10^24 (Sorenson-Webster).
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class SmallPrime:
    pass


@dataclass(frozen=True)
class ProbablePrime:
    rounds: int


@dataclass(frozen=True)
class LucasPratt:
    witness: int
    factors: Tuple[Tuple[int, int, "PrimalityCert"], ...]


PrimalityCert = Union[SmallPrime, ProbablePrime, LucasPratt]


def _strong_test(n: int, base: int, r: int, d: int) -> bool:
    # n-1 = 2^r * d with d odd; True when base passes (n may still be composite)
    x = pow(base % n, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = (x * x) % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = 40, rng: Optional[random.Random] = None) -> bool:
    """Miller-Rabin; never False for a prime, wrong with probability <= 4^-rounds.

    Below the Sorenson-Webster limit the fixed deterministic base set is
    used and the answer is exact.  Above it, a base-2 strong test plus
    `rounds` further bases drawn from rng (seeded from n when omitted).
    """
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    r, d = 0, n - 1
    while d % 2 == 0:
        r += 1
        d //= 2
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        if rng is None:
            rng = random.Random(n ^ 0x9E3779B97F4A7C15)
        bases = [2] + [rng.randrange(2, n - 1) for _ in range(rounds)]
    return all(_strong_test(n, b, r, d) for b in bases)


def _trial_division_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _pollard_rho(n: int, budget: list, rng: random.Random) -> Optional[int]:
    # Brent's cycle variant; budget[0] counts remaining group operations.
    from math import gcd
    if n % 2 == 0:
        return 2
    while budget[0] > 0:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and budget[0] > 0:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                cnt = min(m, r - k)
                for _ in range(cnt):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget[0] -= cnt
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                budget[0] -= 1
        if 1 < g < n:
            return g
    return None


def _factorize(n: int, budget: list, rng: random.Random) -> Optional[dict]:
    factors: dict = {}
    for p in range(2, 10_000):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m, budget, rng)
        if d is None:
            return None
        stack.extend((d, m // d))
    return factors


def gen_pratt(n: int, budget: int = 10_000_000,
              rng: Optional[random.Random] = None) -> Optional[PrimalityCert]:
    """Build a certificate for a (probable) prime n; None if factoring n-1
    exceeds the budget."""
    if n < 2 or not is_probable_prime(n):
        raise ValueError(f"{n} is not prime")
    if n < SELF_CERTIFYING_BOUND:
        return SmallPrime()
    if rng is None:
        rng = random.Random(n)
    remaining = [budget]
    factors = _factorize(n - 1, remaining, rng)
    if factors is None:
        return None
    qs = sorted(factors)
    witness = None
    w = 2
    while witness is None:
        if pow(w, n - 1, n) == 1 and all(pow(w, (n - 1) // q, n) != 1 for q in qs):
            witness = w
        else:
            w += 1
            while not is_probable_prime(w):
                w += 1
    entries = []
    for q in qs:
        sub = gen_pratt(q, remaining[0], rng)
        if sub is None:
            return None
        entries.append((q, factors[q], sub))
    return LucasPratt(witness, tuple(entries))


def check_pratt(n: int, cert: PrimalityCert, strict: bool = False) -> None:
    """Raise VerificationFailure naming the first failed condition."""
    if isinstance(cert, SmallPrime):
        if not (2 <= n < SELF_CERTIFYING_BOUND):
            raise VerificationFailure("pratt.small-range", f"{n} not below 2^20")
        if not _trial_division_prime(n):
            raise VerificationFailure("pratt.small-prime", f"{n} is composite")
        return
    if isinstance(cert, ProbablePrime):
        if strict:
            raise VerificationFailure("pratt.strict-probable",
                                      "probable-prime certificate rejected in strict mode")
        if cert.rounds < 0 or not is_probable_prime(n, max(cert.rounds, 40)):
            raise VerificationFailure("pratt.probable", f"{n} failed the probabilistic test")
        return
    if isinstance(cert, LucasPratt):
        if n < 2:
            raise VerificationFailure("pratt.range", f"{n} < 2")
        if not cert.factors:
            raise VerificationFailure("pratt.factorization", "empty factor list")
        prod = 1
        for q, e, _sub in cert.factors:
            if q < 2 or e < 1:
                raise VerificationFailure("pratt.factorization", f"bad factor ({q}, {e})")
            prod *= q ** e
        if prod != n - 1:
            raise VerificationFailure("pratt.factorization",
                                      f"product {prod} != {n - 1}")
        w = cert.witness
        if pow(w, n - 1, n) != 1:
            raise VerificationFailure("pratt.fermat", f"{w}^(n-1) != 1 mod {n}")
        for q, _e, _sub in cert.factors:
            if pow(w, (n - 1) // q, n) == 1:
                raise VerificationFailure("pratt.witness-order",
                                          f"{w}^((n-1)/{q}) = 1 mod {n}")
        for q, _e, sub in cert.factors:
            check_pratt(q, sub, strict)
        return
    raise VerificationFailure("pratt.kind", f"unknown certificate {type(cert).__name__}")


def verify_pratt(n: int, cert: PrimalityCert, strict: bool = False) -> bool:
    try:
        check_pratt(n, cert, strict)
    except VerificationFailure:
        return False
    return True
