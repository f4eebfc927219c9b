"""Factor degree analysis.

For a prime p not dividing lc(f), any integer factor g of f reduces mod p
to a product of a sub-multiset of the irreducible factors of f mod p, so
deg(g) must be a subset sum of the modular factor degrees.  Intersecting
these subset-sum closures over several primes excludes factor degrees; an
empty proper part proves irreducibility, and otherwise the least surviving
degree >= 1 is a certified lower bound Delta on factor degrees.

Degree sets are stored as bitmasks over {0..d}; they always contain 0 and d
and are symmetric (e in S iff d-e in S) because complements of sub-multisets
are sub-multisets.

The generating side skips primes whose reduction is not squarefree and
draws primes from a preferential list interleaved with a seeded random
stream whose range widens as primes fail to help.  The verifying side
trusts nothing: it re-checks primality of p, irreducibility of every
factor, and the full product, and accepts repeated factors (the subset-sum
argument is multiplicity-aware).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import VerificationFailure
from .polymodp import MAX_MODULUS, PolyModP, factor_mod_p, is_irreducible_mod_p, reduce
from .polyz import PolyZ, is_squarefree, primitive_part
from .primality import _trial_division_prime, is_probable_prime


@dataclass(frozen=True)
class DegreeSet:
    """Bitset of not-excluded factor degrees for a degree-d polynomial."""

    d: int
    bits: int

    @classmethod
    def full(cls, d: int) -> "DegreeSet":
        return cls(d, (1 << (d + 1)) - 1)

    def __contains__(self, e: int) -> bool:
        return 0 <= e <= self.d and bool((self.bits >> e) & 1)

    def degrees(self) -> List[int]:
        return [e for e in range(self.d + 1) if (self.bits >> e) & 1]

    def proper(self) -> List[int]:
        """Surviving degrees strictly between 0 and d."""
        return [e for e in self.degrees() if 0 < e < self.d]

    @property
    def conclusive(self) -> bool:
        """True when no proper factor degree survives (irreducibility proved)."""
        return not self.proper()

    @property
    def delta(self) -> int:
        """Least element >= 1: every nontrivial factor has at least this degree."""
        for e in range(1, self.d + 1):
            if (self.bits >> e) & 1:
                return e
        raise ValueError("degree set lost its top element")

    def __and__(self, other: "DegreeSet") -> "DegreeSet":
        if self.d != other.d:
            raise ValueError("mismatched degrees in intersection")
        return DegreeSet(self.d, self.bits & other.bits)


def possible_degrees(factor_degrees: Iterable[int], d: int) -> DegreeSet:
    """Subset-sum closure of a multiset of modular factor degrees."""
    bits = 1
    total = 0
    for dg in factor_degrees:
        total += dg
        bits |= bits << dg
    if total != d:
        raise ValueError(f"factor degrees sum to {total}, expected {d}")
    return DegreeSet(d, bits)


def intersect(sets: Sequence[DegreeSet]) -> DegreeSet:
    if not sets:
        raise ValueError("nothing to intersect")
    out = sets[0]
    for s in sets[1:]:
        out = out & s
    return out


@dataclass(frozen=True)
class PrimeEvidence:
    """One prime and the irreducible factors of f modulo it."""

    p: int
    factors: Tuple[PolyModP, ...]

    def degree_multiset(self) -> List[int]:
        return [g.degree for g in self.factors]


@dataclass(frozen=True)
class DeltaBound:
    """Certified factor degree lower bound with its supporting evidence."""

    value: int
    evidence: Tuple[PrimeEvidence, ...] = ()


def analyze_prime(f: PolyZ, p: int) -> Optional[Tuple[PrimeEvidence, DegreeSet]]:
    """Factor f mod p; absent when p | lc(f) or the reduction is not squarefree."""
    if f.lc % p == 0:
        return None
    fp = reduce(f, p)
    try:
        factors = factor_mod_p(fp)
    except ValueError:
        return None
    evidence = PrimeEvidence(p, tuple(factors))
    return evidence, possible_degrees(evidence.degree_multiset(), f.degree)


def _first_primes_above(n: int, count: int) -> List[int]:
    out = []
    c = n + 1
    while len(out) < count:
        if _trial_division_prime(c):
            out.append(c)
        c += 1
    return out


class DeganSession:
    """Incremental degree analysis over a prime-picking strategy.

    Primes come alternately from a preferential list (the small primes and
    the first ten primes above the degree) and from a seeded uniform stream
    whose range starts at [2, 4d] and doubles after every 8 primes that were
    rejected or failed to shrink the intersection.  All choices derive from
    the seed, so equal (f, seed) replays identically.
    """

    RANGE_GROWTH_INTERVAL = 8

    def __init__(self, f: PolyZ, seed: int):
        if f.degree < 2:
            raise ValueError("degree analysis needs degree >= 2")
        if primitive_part(f) != f:
            raise ValueError("degree analysis expects a primitive polynomial")
        if not is_squarefree(f):
            raise ValueError("degree analysis expects a squarefree polynomial")
        self.f = f
        self.degree_set = DegreeSet.full(f.degree)
        self.evidence: List[PrimeEvidence] = []
        self._rng = random.Random(seed)
        pref = sorted(set([2, 3, 5, 7, 11, 13] + _first_primes_above(f.degree, 10)))
        self._preferential = pref
        self._pref_index = 0
        self._use_pref = True
        self._tried = set()
        self._range_hi = max(4 * f.degree, 8)
        self._stale = 0
        self.primes_tried = 0

    @property
    def done(self) -> bool:
        return self.degree_set.conclusive

    def _next_random_prime(self) -> int:
        attempts = 0
        while True:
            c = self._rng.randrange(2, self._range_hi + 1)
            attempts += 1
            if attempts % 64 == 0:  # range may be exhausted of fresh primes
                self._range_hi = min(self._range_hi * 2, MAX_MODULUS - 1)
            if c not in self._tried and is_probable_prime(c):
                return c

    def _next_prime(self) -> int:
        take_pref = self._use_pref
        self._use_pref = not self._use_pref
        if take_pref:
            while self._pref_index < len(self._preferential):
                p = self._preferential[self._pref_index]
                self._pref_index += 1
                if p not in self._tried:
                    return p
        return self._next_random_prime()

    def _note_stale(self) -> None:
        self._stale += 1
        if self._stale % self.RANGE_GROWTH_INTERVAL == 0:
            self._range_hi = min(self._range_hi * 2, MAX_MODULUS - 1)

    def step(self) -> bool:
        """Try one prime; True when it strictly shrank the degree set."""
        p = self._next_prime()
        self._tried.add(p)
        self.primes_tried += 1
        result = analyze_prime(self.f, p)
        if result is None:
            self._note_stale()
            return False
        evidence, ds = result
        new_set = self.degree_set & ds
        self.evidence.append(evidence)
        if new_set.bits == self.degree_set.bits:
            self._note_stale()
            return False
        self.degree_set = new_set
        return True


def generate_degan(f: PolyZ, budget: int, seed: int) -> Tuple[DegreeSet, List[PrimeEvidence]]:
    """Run the prime strategy until the proper set empties or budget runs out."""
    session = DeganSession(f, seed)
    for _ in range(budget):
        if session.done:
            break
        session.step()
    return session.degree_set, list(session.evidence)


def _evidence_sets(evidence: Sequence[PrimeEvidence], d: int) -> List[DegreeSet]:
    return [possible_degrees(pe.degree_multiset(), d) for pe in evidence]


def minimize_evidence(evidence: Sequence[PrimeEvidence],
                      target: DegreeSet) -> List[PrimeEvidence]:
    """Smallest sufficient sub-list: exhaustive to size 3, then greedy cover."""
    d = target.d
    sets = _evidence_sets(evidence, d)
    total = DegreeSet.full(d)
    for s in sets:
        total = total & s
    if total.bits != target.bits:
        raise ValueError("evidence does not intersect to the target set")

    # Distinct degree sets suffice for the subset search; keep the
    # smallest-prime representative of each (cheapest to verify).
    reps = {}
    for pe, s in zip(evidence, sets):
        if s.bits not in reps or pe.p < reps[s.bits][0].p:
            reps[s.bits] = (pe, s)
    items = sorted(reps.values(), key=lambda t: t[0].p)

    full = DegreeSet.full(d)
    for size in (1, 2, 3):
        if size >= len(evidence):
            return list(evidence)  # no strictly smaller subset exists
        best = _search_subset(items, target, full, size)
        if best is not None:
            return [pe for pe, _ in best]
    if len(evidence) <= 3:
        return list(evidence)

    # Greedy set cover on the excluded degrees.
    chosen: List[PrimeEvidence] = []
    cur = full
    used = set()
    while cur.bits != target.bits:
        best_i, best_bits = None, None
        for i, (pe, s) in enumerate(items):
            if i in used:
                continue
            cand = (cur & s).bits
            if best_bits is None or bin(cand).count("1") < bin(best_bits).count("1"):
                best_i, best_bits = i, cand
        if best_i is None:  # cannot happen: the full list reaches target
            return list(evidence)
        used.add(best_i)
        chosen.append(items[best_i][0])
        cur = DegreeSet(d, best_bits)
    return chosen


def _search_subset(items, target: DegreeSet, full: DegreeSet, size: int):
    from itertools import combinations
    for combo in combinations(items, size):
        bits = full.bits
        for _, s in combo:
            bits &= s.bits
        if bits == target.bits:
            return combo
    return None


def verify_degan(f: PolyZ, evidence: Sequence[PrimeEvidence]) -> DegreeSet:
    """Recompute the degree set from untrusted evidence.

    Checks, per entry: p is a word-sized prime not dividing lc(f), every
    factor is monic and irreducible, and lc(f) times the factor product
    (with multiplicity) reproduces f mod p.  Raises VerificationFailure
    naming the prime and the failing check.
    """
    d = f.degree
    if d < 1:
        raise VerificationFailure("degan.degree", "polynomial must be non-constant")
    out = DegreeSet.full(d)
    for pe in evidence:
        p = pe.p
        if not (2 <= p < MAX_MODULUS) or not _trial_division_prime(p):
            raise VerificationFailure("degan.prime", f"{p} is not a word-sized prime")
        if f.lc % p == 0:
            raise VerificationFailure("degan.leading-coeff", f"{p} divides lc(f)")
        if not pe.factors:
            raise VerificationFailure("degan.product", f"p={p}: no factors given")
        prod = PolyModP(p, (1,))
        for g in pe.factors:
            if g.p != p:
                raise VerificationFailure("degan.modulus", f"p={p}: factor has modulus {g.p}")
            if not g.is_monic or g.degree < 1:
                raise VerificationFailure("degan.factor-monic",
                                          f"p={p}: factor {list(g.coeffs)} not monic non-constant")
            if not is_irreducible_mod_p(g):
                raise VerificationFailure("degan.factor-irreducible",
                                          f"p={p}: factor {list(g.coeffs)} is reducible")
            prod = prod * g
        if prod.scale(f.lc) != reduce(f, p):
            raise VerificationFailure("degan.product", f"p={p}: factor product != f mod p")
        out = out & possible_degrees(pe.degree_multiset(), d)
    return out
