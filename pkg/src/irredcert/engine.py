"""Certificate generation and top-level verification.

certify() preprocesses (primitive part, squarefree test), builds a catalog
of Moebius-rewritten copies of the input, and then interleaves slices of
degree analysis on the original polynomial with slices of witness search on
every catalog entry.  Improved factor degree lower bounds flow from the
analysis to the searches; searches first consult witnesses they already
recorded for the new bound.  The emitted certificate is always re-verified
before being returned.

verify() dispatches on the certificate kind and trusts nothing in the
document; check_document() is the same computation but raises a
VerificationFailure naming the first failed check.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Optional, Union

from . import certio
from .certio import (Certificate, CertificateDocument, DegreeAnalysis, Linear,
                     Lpfw, Transform)
from .degan import (DeganSession, DeltaBound, analyze_prime, intersect,
                    minimize_evidence, verify_degan)
from .errors import VerificationFailure
from .lpfw import (DEFAULT_SMOOTH_BOUND, LpfwCert, SearchState, best_recorded,
                   check_lpfw, search_lpfw)
from .moebius import MoebiusMatrix, apply, candidate_transforms, verify_transform
from .polyz import (DEFAULT_MAX_GRAEFFE, PolyZ, compute_root_bound, derivative,
                    fixed_divisor, is_squarefree, poly_gcd, primitive_part)
from .primality import ProbablePrime, gen_pratt, is_probable_prime


@dataclass
class CertifyConfig:
    seed: int = 0
    max_iterations: int = 10_000
    degan_slice: int = 8
    lpfw_slice: int = 8
    smooth_bound: int = DEFAULT_SMOOTH_BOUND
    max_graeffe: int = DEFAULT_MAX_GRAEFFE
    max_transforms: int = 24
    strict_primality: bool = False
    thread_count: int = 1

    def __post_init__(self):
        if self.degan_slice < 1 or self.lpfw_slice < 1:
            raise ValueError("slices must be >= 1")
        if self.smooth_bound < 2 or self.max_transforms < 1:
            raise ValueError("bounds must be >= 2 (and at least one transform)")
        if self.thread_count < 1:
            raise ValueError("thread_count must be >= 1")


@dataclass(frozen=True)
class Certified:
    document: CertificateDocument


@dataclass(frozen=True)
class Reducible:
    witness: PolyZ


@dataclass(frozen=True)
class Inconclusive:
    iterations_used: int


Verdict = Union[Certified, Reducible, Inconclusive]

_DELTA_PRIME_BUDGET = 24  # extra primes an entry may try per published bound


@dataclass
class CatalogEntry:
    """One rewritten copy of the input polynomial under search."""

    matrix: MoebiusMatrix
    image: PolyZ
    reason: str  # "identity" | "fixed-divisor" | "generic"
    root_bound: object = None
    state: SearchState = None
    delta: DeltaBound = field(default_factory=lambda: DeltaBound(1, ()))
    _prime_cursor: int = 2

    def upgrade_delta(self, published: DeltaBound) -> None:
        """Adopt a published bound, re-deriving evidence on this image.

        The identity entry reuses the evidence directly.  Other entries
        refactor their image modulo the published primes first, then walk
        their own prime stream a bounded number of steps; on failure the
        old bound is kept.
        """
        if published.value <= self.delta.value:
            return
        if self.matrix.is_identity:
            self.delta = published
            return
        collected = []
        sets = []
        tried = set()
        for pe in published.evidence:
            tried.add(pe.p)
            res = analyze_prime(self.image, pe.p)
            if res:
                collected.append(res[0])
                sets.append(res[1])
        budget = _DELTA_PRIME_BUDGET
        p = self._prime_cursor
        while budget > 0:
            if sets and intersect(sets).delta >= published.value:
                break
            if is_probable_prime(p):
                budget -= 1
                if p not in tried:
                    res = analyze_prime(self.image, p)
                    if res:
                        collected.append(res[0])
                        sets.append(res[1])
            p += 1
        self._prime_cursor = p
        if not sets:
            return
        ds = intersect(sets)
        if ds.delta > self.delta.value:
            self.delta = DeltaBound(ds.delta, tuple(minimize_evidence(collected, ds)))


def build_catalog(f: PolyZ, config: CertifyConfig) -> List[CatalogEntry]:
    """Degree-preserving, deduplicated rewriting catalog, identity first.

    When f has a nontrivial fixed divisor, transforms that strictly reduce
    it (recomputed, not inferred) are ranked ahead of the rest by the size
    of the reduced divisor.
    """
    pool = candidate_transforms(f, max(8 * config.max_transforms, 512))
    delta_f = fixed_divisor(f)
    entries: List[CatalogEntry] = []
    seen = {}
    for m in pool:
        image = apply(m, f)
        if image.degree != f.degree:
            continue  # Moebius transforms only certify when degree is preserved
        image = primitive_part(image)
        if image.coeffs in seen:
            continue
        seen[image.coeffs] = m
        if m.is_identity:
            entries.append(CatalogEntry(m, image, "identity"))
        elif delta_f > 1 and fixed_divisor(image) < delta_f:
            entries.append(CatalogEntry(m, image, "fixed-divisor"))
        else:
            entries.append(CatalogEntry(m, image, "generic"))
    head = [e for e in entries if e.reason == "identity"]
    reducing = sorted((e for e in entries if e.reason == "fixed-divisor"),
                      key=lambda e: (fixed_divisor(e.image), abs(e.image.lc)))
    rest = [e for e in entries if e.reason == "generic"]
    return (head + reducing + rest)[:config.max_transforms]


def certify(f: PolyZ, config: Optional[CertifyConfig] = None) -> Verdict:
    """Produce a Verdict for f; any Certified document passes verify()."""
    if config is None:
        config = CertifyConfig()
    if not f:
        raise ValueError("cannot certify the zero polynomial")
    g = primitive_part(f)
    if g.degree == 0:
        raise ValueError("cannot certify a constant polynomial")
    if g.degree == 1:
        return _emit(f, Linear(), config)
    gcd_ff = poly_gcd(g, derivative(g))
    if gcd_ff.degree != 0:
        return Reducible(witness=gcd_ff)

    entries = build_catalog(g, config)
    for entry in entries:
        entry.root_bound = compute_root_bound(entry.image, config.max_graeffe)
        entry.state = SearchState.start(entry.root_bound.rho)

    session = DeganSession(g, config.seed)
    published = DeltaBound(1, ())
    for round_no in range(1, config.max_iterations + 1):
        if not session.done:
            for _ in range(config.degan_slice):
                session.step()
                if session.done:
                    break
            if session.done:
                evidence = minimize_evidence(session.evidence, session.degree_set)
                return _emit(f, DegreeAnalysis(tuple(evidence)), config)
            current = session.degree_set.delta
            if current > published.value:
                published = DeltaBound(
                    current,
                    tuple(minimize_evidence(session.evidence, session.degree_set)))
                for entry in entries:
                    entry.upgrade_delta(published)
        for entry in entries:
            hit = best_recorded(entry.state, entry.delta)
            if hit is None:
                search_lpfw(entry.image, entry.root_bound, entry.delta,
                            entry.state, config.smooth_bound, config.lpfw_slice)
                hit = best_recorded(entry.state, entry.delta)
            if hit is not None:
                return _emit(f, _wrap(entry, hit, config), config)
    return Inconclusive(iterations_used=config.max_iterations)


def _wrap(entry: CatalogEntry, cert: LpfwCert, config: CertifyConfig) -> Certificate:
    if config.strict_primality:
        pratt = gen_pratt(cert.p)
        cert = replace(cert, primality=pratt if pratt else ProbablePrime(40))
    else:
        cert = replace(cert, primality=ProbablePrime(40))
    inner = Lpfw(cert)
    if entry.matrix.is_identity:
        return inner
    return Transform(entry.matrix, entry.image, inner)


def _emit(f: PolyZ, certificate: Certificate, config: CertifyConfig) -> Certified:
    doc = CertificateDocument(polynomial=f, certificate=certificate)
    check_document(f, doc, strict=config.strict_primality,
                   max_graeffe=config.max_graeffe)
    return Certified(doc)


def check_document(f: PolyZ, doc: CertificateDocument, strict: bool = False,
                   max_graeffe: int = DEFAULT_MAX_GRAEFFE) -> None:
    """Verify doc against f; raise VerificationFailure on the first failed check.

    Acceptance means primitive_part(f) is irreducible in Z[x], equivalently
    f is irreducible in Q[x].
    """
    if doc.polynomial != f:
        raise VerificationFailure("document.polynomial-mismatch",
                                  "certified polynomial differs from the input")
    if not f:
        raise VerificationFailure("document.zero", "zero polynomial")
    g = primitive_part(f)
    _check_certificate(g, doc.certificate, strict, max_graeffe)


def _check_certificate(g: PolyZ, cert: Certificate, strict: bool,
                       max_graeffe: int) -> None:
    if isinstance(cert, Linear):
        if g.degree != 1:
            raise VerificationFailure("linear.degree", f"degree {g.degree} != 1")
        return
    if isinstance(cert, DegreeAnalysis):
        if g.degree < 2:
            raise VerificationFailure("degan.degree", "degree must be >= 2")
        ds = verify_degan(g, cert.evidence)
        if not ds.conclusive:
            raise VerificationFailure("degan.incomplete",
                                      f"degrees {ds.proper()} not excluded")
        return
    if isinstance(cert, Lpfw):
        check_lpfw(g, cert.cert, strict, max_graeffe)
        return
    if isinstance(cert, Transform):
        if isinstance(cert.inner, Transform):
            raise VerificationFailure("transform.nested",
                                      "transform certificates do not nest")
        if cert.image.degree != g.degree:
            raise VerificationFailure("transform.image-degree",
                                      f"{cert.image.degree} != {g.degree}")
        if not verify_transform(g, cert.matrix, cert.image):
            raise VerificationFailure("transform.ratio",
                                      "image is not the primitive transform of f")
        _check_certificate(cert.image, cert.inner, strict, max_graeffe)
        return
    raise VerificationFailure("document.kind",
                              f"unknown certificate {type(cert).__name__}")


def verify(f: PolyZ, doc: CertificateDocument, strict: bool = False,
           max_graeffe: int = DEFAULT_MAX_GRAEFFE) -> bool:
    try:
        check_document(f, doc, strict, max_graeffe)
    except VerificationFailure:
        return False
    return True


def certify_to_bytes(f: PolyZ, config: Optional[CertifyConfig] = None):
    """certify() plus canonical serialization of a Certified verdict."""
    verdict = certify(f, config)
    if isinstance(verdict, Certified):
        return verdict, certio.serialize(verdict.document)
    return verdict, None
