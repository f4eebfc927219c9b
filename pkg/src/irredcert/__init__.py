"""Irreducibility certificates for univariate integer polynomials.

Generate with certify(), check with verify() (or the raising
check_document()), and move certificates around with serialize()/parse().
Polynomials come from parse_poly() or directly as PolyZ coefficient
sequences.
"""

from .certio import (Certificate, CertificateDocument, CertificateFormatError,
                     DegreeAnalysis, Linear, Lpfw, Transform, parse, serialize)
from .degan import DegreeSet, DeltaBound, PrimeEvidence
from .engine import (Certified, CertifyConfig, Inconclusive, Reducible,
                     Verdict, certify, check_document, verify)
from .errors import VerificationFailure
from .lpfw import LpfwCert
from .moebius import MoebiusMatrix
from .parser import PolyParseError, format_poly, parse_poly
from .polymodp import PolyModP
from .polyz import PolyZ, Rat, RootBoundCert
from .primality import LucasPratt, ProbablePrime, SmallPrime

__all__ = [
    "Certificate", "CertificateDocument", "CertificateFormatError",
    "Certified", "CertifyConfig", "DegreeAnalysis", "DegreeSet", "DeltaBound",
    "Inconclusive", "Linear", "Lpfw", "LpfwCert", "LucasPratt",
    "MoebiusMatrix", "PolyModP", "PolyParseError", "PolyZ", "PrimeEvidence",
    "ProbablePrime", "Rat", "Reducible", "RootBoundCert", "SmallPrime",
    "Transform", "Verdict", "VerificationFailure", "certify",
    "check_document", "format_poly", "parse", "parse_poly", "serialize",
    "verify",
]

__version__ = "0.1.0"
