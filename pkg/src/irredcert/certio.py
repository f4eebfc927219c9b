"""Certificate documents and their canonical textual form.

The wire format is UTF-8 JSON with a fixed key order, no insignificant
whitespace, and a trailing newline.  Every integer is a decimal string
(JSON numbers are never used for payload data), rationals are "num" or
"num/den" in lowest terms with den > 1, and polynomials are arrays of
decimal-string coefficients in ascending degree order.  Serialization is
deterministic: equal documents give identical bytes, and parsing followed
by serialization canonicalizes (whitespace and den-1 rationals collapse).

Document layout:

    {"format":"irredcert/1","polynomial":[...],"certificate":{...}}

Certificate kinds: "linear" | "degree_analysis" | "lpfw" | "transform".
A transform wraps exactly one non-transform certificate for its image
polynomial.  Primality sub-certificates use kinds "small_prime" |
"probable_prime" | "lucas_pratt", the latter with ["q","e",cert] factor
triples.  Files conventionally use the .irredcert.json suffix.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

from .degan import DeltaBound, PrimeEvidence
from .lpfw import LpfwCert
from .moebius import MoebiusMatrix
from .polymodp import PolyModP
from .polyz import PolyZ, RootBoundCert
from .primality import LucasPratt, PrimalityCert, ProbablePrime, SmallPrime

FORMAT_VERSION = "irredcert/1"


class CertificateFormatError(ValueError):
    """Malformed certificate document; ``code`` identifies the error class."""

    def __init__(self, code: str, detail: str = ""):
        self.code = code
        super().__init__(f"{code}: {detail}" if detail else code)


@dataclass(frozen=True)
class Linear:
    pass


@dataclass(frozen=True)
class DegreeAnalysis:
    evidence: Tuple[PrimeEvidence, ...]


@dataclass(frozen=True)
class Lpfw:
    cert: LpfwCert


@dataclass(frozen=True)
class Transform:
    matrix: MoebiusMatrix
    image: PolyZ
    inner: "Certificate"

    def __post_init__(self):
        if isinstance(self.inner, Transform):
            raise ValueError("transform certificates do not nest")


Certificate = Union[Linear, DegreeAnalysis, Lpfw, Transform]


@dataclass(frozen=True)
class CertificateDocument:
    polynomial: PolyZ
    certificate: Certificate


# ---------------------------------------------------------------- serialize

def _enc_int(n: int) -> str:
    return str(n)


def _enc_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _enc_poly(f: PolyZ) -> list:
    return [str(c) for c in f.coeffs]


def _enc_evidence(pe: PrimeEvidence) -> dict:
    return {"p": _enc_int(pe.p),
            "factors": [[str(c) for c in g.coeffs] for g in pe.factors]}


def _enc_primality(cert: PrimalityCert) -> dict:
    if isinstance(cert, SmallPrime):
        return {"kind": "small_prime"}
    if isinstance(cert, ProbablePrime):
        return {"kind": "probable_prime", "rounds": _enc_int(cert.rounds)}
    if isinstance(cert, LucasPratt):
        return {"kind": "lucas_pratt",
                "witness": _enc_int(cert.witness),
                "factors": [[_enc_int(q), _enc_int(e), _enc_primality(sub)]
                            for q, e, sub in cert.factors]}
    raise TypeError(f"unknown primality certificate {type(cert).__name__}")


def _enc_certificate(cert: Certificate) -> dict:
    if isinstance(cert, Linear):
        return {"kind": "linear"}
    if isinstance(cert, DegreeAnalysis):
        return {"kind": "degree_analysis",
                "evidence": [_enc_evidence(pe) for pe in cert.evidence]}
    if isinstance(cert, Lpfw):
        c = cert.cert
        out = {"kind": "lpfw",
               "root_bound": {"rho": _enc_rat(Fraction(c.root_bound.rho)),
                              "graeffe_iters": _enc_int(c.root_bound.graeffe_iters)},
               "delta": {"value": _enc_int(c.delta.value),
                         "evidence": [_enc_evidence(pe) for pe in c.delta.evidence]},
               "n": _enc_int(c.n),
               "p": _enc_int(c.p)}
        if c.primality is not None:
            out["primality"] = _enc_primality(c.primality)
        return out
    if isinstance(cert, Transform):
        m = cert.matrix
        return {"kind": "transform",
                "matrix": [_enc_int(m.a), _enc_int(m.b), _enc_int(m.c), _enc_int(m.d)],
                "image": _enc_poly(cert.image),
                "inner": _enc_certificate(cert.inner)}
    raise TypeError(f"unknown certificate {type(cert).__name__}")


def serialize(doc: CertificateDocument) -> bytes:
    """Canonical bytes of a document (deterministic, newline-terminated)."""
    obj = {"format": FORMAT_VERSION,
           "polynomial": _enc_poly(doc.polynomial),
           "certificate": _enc_certificate(doc.certificate)}
    return (json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n").encode()


# ------------------------------------------------------------------- parse

_INT_RE = re.compile(r"-?(0|[1-9][0-9]*)\Z")
_RAT_RE = re.compile(r"(-?(?:0|[1-9][0-9]*))(?:/([1-9][0-9]*))?\Z")


def _dec_int(v, what: str) -> int:
    if not isinstance(v, str) or not _INT_RE.match(v):
        raise CertificateFormatError("malformed-integer", f"{what}: {v!r}")
    return int(v)


def _dec_nat(v, what: str) -> int:
    n = _dec_int(v, what)
    if n < 0:
        raise CertificateFormatError("malformed-integer", f"{what}: negative")
    return n


def _dec_rat(v, what: str) -> Fraction:
    if not isinstance(v, str):
        raise CertificateFormatError("non-canonical-rational", f"{what}: {v!r}")
    m = _RAT_RE.match(v)
    if not m:
        raise CertificateFormatError("non-canonical-rational", f"{what}: {v!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if gcd(abs(num), den) != 1:
        raise CertificateFormatError("non-canonical-rational",
                                     f"{what}: {v!r} not in lowest terms")
    return Fraction(num, den)


def _dec_poly(v, what: str) -> PolyZ:
    if not isinstance(v, list):
        raise CertificateFormatError("malformed-document", f"{what} must be an array")
    return PolyZ(_dec_int(c, what) for c in v)


def _expect_keys(obj, keys, what: str, optional=()):
    if not isinstance(obj, dict):
        raise CertificateFormatError("malformed-document", f"{what} must be an object")
    allowed = set(keys) | set(optional)
    if set(obj) - allowed or set(keys) - set(obj):
        raise CertificateFormatError("malformed-document",
                                     f"{what} keys {sorted(obj)} != {sorted(keys)}")


def _dec_evidence(obj, what: str) -> PrimeEvidence:
    _expect_keys(obj, ("p", "factors"), what)
    p = _dec_nat(obj["p"], f"{what}.p")
    if p < 2:
        raise CertificateFormatError("malformed-document", f"{what}.p = {p}")
    if not isinstance(obj["factors"], list):
        raise CertificateFormatError("malformed-document", f"{what}.factors")
    factors = []
    for i, fac in enumerate(obj["factors"]):
        if not isinstance(fac, list):
            raise CertificateFormatError("malformed-document", f"{what}.factors[{i}]")
        coeffs = [_dec_nat(c, f"{what}.factors[{i}]") for c in fac]
        if any(c >= p for c in coeffs):
            raise CertificateFormatError("malformed-document",
                                         f"{what}.factors[{i}]: residue out of range")
        factors.append(PolyModP(p, coeffs))
    return PrimeEvidence(p, tuple(factors))


def _dec_primality(obj, what: str) -> PrimalityCert:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise CertificateFormatError("malformed-document", f"{what} needs a kind")
    kind = obj["kind"]
    if kind == "small_prime":
        _expect_keys(obj, ("kind",), what)
        return SmallPrime()
    if kind == "probable_prime":
        _expect_keys(obj, ("kind", "rounds"), what)
        return ProbablePrime(_dec_nat(obj["rounds"], f"{what}.rounds"))
    if kind == "lucas_pratt":
        _expect_keys(obj, ("kind", "witness", "factors"), what)
        if not isinstance(obj["factors"], list):
            raise CertificateFormatError("malformed-document", f"{what}.factors")
        factors = []
        for i, triple in enumerate(obj["factors"]):
            if not isinstance(triple, list) or len(triple) != 3:
                raise CertificateFormatError("malformed-document",
                                             f"{what}.factors[{i}]")
            q = _dec_nat(triple[0], f"{what}.factors[{i}].q")
            e = _dec_nat(triple[1], f"{what}.factors[{i}].e")
            sub = _dec_primality(triple[2], f"{what}.factors[{i}]")
            factors.append((q, e, sub))
        return LucasPratt(_dec_int(obj["witness"], f"{what}.witness"), tuple(factors))
    raise CertificateFormatError("unknown-kind", f"{what}: {kind!r}")


def _dec_certificate(obj, what: str, top: bool) -> Certificate:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise CertificateFormatError("malformed-document", f"{what} needs a kind")
    kind = obj["kind"]
    if kind == "linear":
        _expect_keys(obj, ("kind",), what)
        return Linear()
    if kind == "degree_analysis":
        _expect_keys(obj, ("kind", "evidence"), what)
        if not isinstance(obj["evidence"], list):
            raise CertificateFormatError("malformed-document", f"{what}.evidence")
        return DegreeAnalysis(tuple(
            _dec_evidence(pe, f"{what}.evidence[{i}]")
            for i, pe in enumerate(obj["evidence"])))
    if kind == "lpfw":
        _expect_keys(obj, ("kind", "root_bound", "delta", "n", "p"),
                     what, optional=("primality",))
        rb_obj = obj["root_bound"]
        _expect_keys(rb_obj, ("rho", "graeffe_iters"), f"{what}.root_bound")
        rb = RootBoundCert(_dec_rat(rb_obj["rho"], f"{what}.root_bound.rho"),
                           _dec_nat(rb_obj["graeffe_iters"],
                                    f"{what}.root_bound.graeffe_iters"))
        d_obj = obj["delta"]
        _expect_keys(d_obj, ("value", "evidence"), f"{what}.delta")
        if not isinstance(d_obj["evidence"], list):
            raise CertificateFormatError("malformed-document", f"{what}.delta.evidence")
        delta = DeltaBound(
            _dec_nat(d_obj["value"], f"{what}.delta.value"),
            tuple(_dec_evidence(pe, f"{what}.delta.evidence[{i}]")
                  for i, pe in enumerate(d_obj["evidence"])))
        primality = None
        if "primality" in obj:
            primality = _dec_primality(obj["primality"], f"{what}.primality")
        return Lpfw(LpfwCert(root_bound=rb, delta=delta,
                             n=_dec_int(obj["n"], f"{what}.n"),
                             p=_dec_nat(obj["p"], f"{what}.p"),
                             primality=primality))
    if kind == "transform":
        if not top:
            raise CertificateFormatError("nested-transform",
                                         "transform certificates do not nest")
        _expect_keys(obj, ("kind", "matrix", "image", "inner"), what)
        m = obj["matrix"]
        if not isinstance(m, list) or len(m) != 4:
            raise CertificateFormatError("malformed-document", f"{what}.matrix")
        matrix = MoebiusMatrix(*(_dec_int(v, f"{what}.matrix") for v in m))
        image = _dec_poly(obj["image"], f"{what}.image")
        inner = _dec_certificate(obj["inner"], f"{what}.inner", top=False)
        return Transform(matrix, image, inner)
    raise CertificateFormatError("unknown-kind", f"{what}: {kind!r}")


def parse(data) -> CertificateDocument:
    """Inverse of serialize; tolerant of whitespace, strict about content."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CertificateFormatError("malformed-json", str(exc)) from exc
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError("malformed-json", str(exc)) from exc
    _expect_keys(obj, ("format", "polynomial", "certificate"), "document")
    if obj["format"] != FORMAT_VERSION:
        raise CertificateFormatError("version-mismatch",
                                     f"expected {FORMAT_VERSION!r}, got {obj['format']!r}")
    poly = _dec_poly(obj["polynomial"], "polynomial")
    cert = _dec_certificate(obj["certificate"], "certificate", top=True)
    return CertificateDocument(poly, cert)
