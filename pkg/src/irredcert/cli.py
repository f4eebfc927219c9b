"""Command line front end.

    irredcert certify <poly> [--out FILE] [options]     exit 0/1/2/3
    irredcert verify <poly> --cert FILE [--strict]      exit 0/1/3
    irredcert info <poly> [--primes p1,p2,...]          exit 0

<poly> is a sum-of-monomials expression, a bracketed ascending coefficient
list, or @FILE to read either form from a file.  Certificates are written
exactly as the canonical serialization.
"""

from __future__ import annotations

import argparse
import sys

from . import certio, engine
from .degan import analyze_prime
from .errors import VerificationFailure
from .parser import PolyParseError, format_poly, parse_poly
from .polyz import PolyZ, compute_root_bound, content, fixed_divisor


def _load_poly(spec: str) -> PolyZ:
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            spec = fh.read()
    return parse_poly(spec)


def _cmd_certify(args) -> int:
    try:
        f = _load_poly(args.poly)
    except (OSError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    config = engine.CertifyConfig(
        seed=args.seed,
        max_iterations=args.max_iters,
        smooth_bound=args.smooth_bound,
        max_graeffe=args.max_graeffe,
        max_transforms=1 if args.no_transforms else 24,
        strict_primality=args.strict_primality,
        thread_count=args.threads,
    )
    try:
        verdict = engine.certify(f, config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if isinstance(verdict, engine.Reducible):
        print(f"reducible: divisible by {format_poly(verdict.witness)}", file=sys.stderr)
        return 1
    if isinstance(verdict, engine.Inconclusive):
        print(f"inconclusive after {verdict.iterations_used} iterations", file=sys.stderr)
        return 2
    data = certio.serialize(verdict.document)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return 0


def _cmd_verify(args) -> int:
    try:
        f = _load_poly(args.poly)
        with open(args.cert, "rb") as fh:
            doc = certio.parse(fh.read())
    except (OSError, PolyParseError, certio.CertificateFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        engine.check_document(f, doc, strict=args.strict)
    except VerificationFailure as exc:
        print(exc.check)
        return 1
    print("accepted")
    return 0


def _cmd_info(args) -> int:
    try:
        f = _load_poly(args.poly)
    except (OSError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"polynomial: {format_poly(f)}")
    print(f"degree: {f.degree}")
    if f:
        print(f"content: {content(f)}")
        print(f"fixed divisor: {fixed_divisor(f)}")
    if f.degree >= 1:
        rb = compute_root_bound(f)
        print(f"root bound: {rb.rho} (graeffe iterations {rb.graeffe_iters})")
    if args.primes:
        for tok in args.primes.split(","):
            p = int(tok)
            res = analyze_prime(f, p) if f.degree >= 2 else None
            if res is None:
                print(f"mod {p}: unusable (divides lc or not squarefree)")
            else:
                _, ds = res
                print(f"mod {p}: possible factor degrees {ds.degrees()}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irredcert",
                                 description="certify and verify irreducibility in Z[x]")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="generate an irreducibility certificate")
    c.add_argument("poly")
    c.add_argument("--out")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-iters", type=int, default=10_000)
    c.add_argument("--smooth-bound", type=int, default=10_000)
    c.add_argument("--max-graeffe", type=int, default=6)
    c.add_argument("--no-transforms", action="store_true")
    c.add_argument("--strict-primality", action="store_true")
    c.add_argument("--threads", type=int, default=1)
    c.set_defaults(func=_cmd_certify)

    v = sub.add_parser("verify", help="check a certificate with the trusted verifier")
    v.add_argument("poly")
    v.add_argument("--cert", required=True)
    v.add_argument("--strict", action="store_true")
    v.set_defaults(func=_cmd_verify)

    i = sub.add_parser("info", help="print invariants of a polynomial")
    i.add_argument("poly")
    i.add_argument("--primes")
    i.set_defaults(func=_cmd_info)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 3 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
