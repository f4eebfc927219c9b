"""Large-prime-factor witnesses.

If rho bounds every complex root of f, Delta bounds the degree of every
nontrivial factor, and some integer n with |n| > 1 + rho has
|f(n)| = s * p with p prime and s < (|n| - rho)^Delta, then f is
irreducible: any factor g would satisfy |g(n)| >= (|n| - rho)^Delta > s,
and likewise for the cofactor, contradicting f(n) = s * p.  All
inequalities are strict and checked in exact rational arithmetic.

The search walks two evaluation points (one positive, one negative) in
order of increasing |f(n)|, peels off primes below a smoothness bound, and
keeps, for every factor degree lower bound delta it might later receive,
the first witness whose cofactor is probably prime and whose smooth part
fits below (|n| - rho)^delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional

from .degan import DeltaBound, verify_degan
from .errors import VerificationFailure
from .polyz import (DEFAULT_MAX_GRAEFFE, PolyZ, RootBoundCert, verify_root_bound)
from .primality import PrimalityCert, check_pratt, is_probable_prime

DEFAULT_SMOOTH_BOUND = 10_000


@dataclass(frozen=True)
class LpfwCert:
    """A large-prime-factor witness with everything its verifier needs."""

    root_bound: RootBoundCert
    delta: DeltaBound
    n: int
    p: int
    primality: Optional[PrimalityCert] = None


@lru_cache(maxsize=8)
def _small_primes(bound: int):
    sieve = bytearray([1]) * bound
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p::p] = b"\x00" * len(range(p * p, bound, p))
    return tuple(i for i, v in enumerate(sieve) if v)


def check_lpfw(f: PolyZ, cert: LpfwCert, strict: bool = False,
               max_graeffe: int = DEFAULT_MAX_GRAEFFE) -> None:
    """Run every verification step; raise VerificationFailure on the first miss."""
    if f.degree < 2:
        raise VerificationFailure("lpfw.degree", "polynomial must have degree >= 2")
    rho = Fraction(cert.root_bound.rho)
    if not verify_root_bound(f, cert.root_bound, max_graeffe):
        raise VerificationFailure("lpfw.root-bound",
                                  f"rho={rho} not verified at k={cert.root_bound.graeffe_iters}")
    n = cert.n
    if not abs(n) > 1 + rho:
        raise VerificationFailure("lpfw.evaluation-point", f"|{n}| <= 1 + {rho}")
    p = cert.p
    if p < 2:
        raise VerificationFailure("lpfw.prime-range", f"p={p} < 2")
    value = abs(f(n))
    if value % p != 0:
        raise VerificationFailure("lpfw.divisibility", f"{p} does not divide |f({n})|")
    s = value // p
    delta = cert.delta.value
    if delta < 1:
        raise VerificationFailure("lpfw.delta-value", f"delta={delta} < 1")
    if not s < (abs(n) - rho) ** delta:
        raise VerificationFailure("lpfw.margin",
                                  f"s={s} >= (|{n}| - {rho})^{delta}")
    if delta > 1:
        ds = verify_degan(f, cert.delta.evidence)
        if ds.delta < delta:
            raise VerificationFailure("lpfw.delta-evidence",
                                      f"evidence certifies only delta={ds.delta}")
    if strict:
        if cert.primality is None:
            raise VerificationFailure("lpfw.primality-missing",
                                      "strict mode requires a primality certificate")
        check_pratt(p, cert.primality, strict=True)
    else:
        if not is_probable_prime(p, 40):
            raise VerificationFailure("lpfw.primality", f"p={p} is not prime")


def verify_lpfw(f: PolyZ, cert: LpfwCert, strict: bool = False,
                max_graeffe: int = DEFAULT_MAX_GRAEFFE) -> bool:
    try:
        check_lpfw(f, cert, strict, max_graeffe)
    except VerificationFailure:
        return False
    return True


@dataclass
class SearchState:
    """Cursor of the incremental witness search for one polynomial.

    found[delta] holds the first certificate whose smooth part fits below
    (|n| - rho)^delta; its delta field carries whatever bound the search had
    when it was recorded, so callers upgrading to a higher published bound
    swap in their own DeltaBound before emitting.
    """

    rho: Fraction
    n_pos: int
    n_neg: int
    found: Dict[int, LpfwCert] = field(default_factory=dict)

    @classmethod
    def start(cls, rho) -> "SearchState":
        rho = Fraction(rho)
        base = math.floor(1 + rho) + 1  # least integer strictly above 1 + rho
        return cls(rho=rho, n_pos=base, n_neg=-base)


def search_lpfw(f: PolyZ, rb: RootBoundCert, delta: DeltaBound,
                state: SearchState, smooth_bound: int = DEFAULT_SMOOTH_BOUND,
                iters: int = 1) -> SearchState:
    """Advance the witness search by `iters` evaluation points.

    Witnesses found are recorded in state.found under every factor degree
    lower bound they support (eligibility is upward-closed: a smaller smooth
    part survives any larger exponent).  Existing records are kept; the
    walk's increasing-|f(n)| order makes the first hit the preferred one.
    """
    rho = Fraction(rb.rho)
    dmax = max(f.degree - 1, 1)
    primes = _small_primes(smooth_bound)
    for _ in range(iters):
        vp = abs(f(state.n_pos))
        vn = abs(f(state.n_neg))
        if vp <= vn:
            n, value = state.n_pos, vp
            state.n_pos += 1
        else:
            n, value = state.n_neg, vn
            state.n_neg -= 1
        if value <= 1:
            continue
        margin = abs(n) - rho
        cap = margin ** dmax
        s = 1
        abandoned = False
        for q in primes:
            # never absorb the final prime factor: it is the candidate p
            while value % q == 0 and value != q:
                value //= q
                s *= q
            if s >= cap:
                abandoned = True
                break
            if value == q:
                break
        if abandoned:
            continue
        if not is_probable_prime(value, 40):
            continue
        for dlt in range(1, dmax + 1):
            if s < margin ** dlt and dlt not in state.found:
                state.found[dlt] = LpfwCert(root_bound=rb, delta=delta, n=n, p=value)
    return state


def best_recorded(state: SearchState, delta: DeltaBound) -> Optional[LpfwCert]:
    """The recorded certificate usable at delta.value, carrying that bound."""
    cert = state.found.get(delta.value)
    if cert is None:
        return None
    return replace(cert, delta=delta)
