"""Text forms of integer polynomials.

Two input grammars are accepted, both with arbitrary whitespace between
tokens and unbounded decimal integers:

  expression   sign? mono (sign mono)*        e.g.  x^4+1,  97x^4 +76x^3 +2
               mono: int ('*'? 'x' ('^' nat)?)? | 'x' ('^' nat)?
  list         '[' int (',' int)* ']'         ascending coefficients, c0 first

The only variable is x; '*' between a coefficient and x is optional.  There
are no parentheses.  format_poly renders the canonical descending form that
parse_poly maps back to the same polynomial.
"""

from __future__ import annotations

from .polyz import PolyZ


class PolyParseError(ValueError):
    """Syntax error with a 0-based character offset."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _scan_nat(text: str, i: int):
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        raise PolyParseError("expected a number", i)
    return int(text[i:j]), j


def _parse_list(text: str) -> PolyZ:
    i = _skip_ws(text, 0)
    i += 1  # opening bracket
    coeffs = []
    i = _skip_ws(text, i)
    if i < len(text) and text[i] == "]":
        raise PolyParseError("empty coefficient list", i)
    while True:
        i = _skip_ws(text, i)
        sign = 1
        if i < len(text) and text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = _skip_ws(text, i + 1)
        n, i = _scan_nat(text, i)
        coeffs.append(sign * n)
        i = _skip_ws(text, i)
        if i >= len(text):
            raise PolyParseError("unterminated coefficient list", i)
        if text[i] == ",":
            i += 1
            continue
        if text[i] == "]":
            i += 1
            break
        raise PolyParseError("expected ',' or ']'", i)
    i = _skip_ws(text, i)
    if i != len(text):
        raise PolyParseError("trailing input", i)
    return PolyZ(coeffs)


def _parse_mono(text: str, i: int):
    # Returns (coefficient, exponent, next index); caller applies the sign.
    coeff = None
    if i < len(text) and text[i].isdigit():
        coeff, i = _scan_nat(text, i)
        j = _skip_ws(text, i)
        if j < len(text) and text[j] == "*":
            i = _skip_ws(text, j + 1)
            if i >= len(text) or text[i] != "x":
                raise PolyParseError("expected 'x' after '*'", i)
        else:
            i = j
    if i < len(text) and text[i] == "x":
        i += 1
        exp = 1
        j = _skip_ws(text, i)
        if j < len(text) and text[j] == "^":
            j = _skip_ws(text, j + 1)
            exp, i = _scan_nat(text, j)
        return (1 if coeff is None else coeff), exp, i
    if coeff is None:
        if i < len(text) and text[i].isalpha():
            raise PolyParseError(f"unknown variable {text[i]!r}", i)
        raise PolyParseError("expected a term", i)
    return coeff, 0, i


def _parse_expression(text: str) -> PolyZ:
    terms = {}
    i = _skip_ws(text, 0)
    sign = 1
    if i < len(text) and text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i = _skip_ws(text, i + 1)
    while True:
        coeff, exp, i = _parse_mono(text, i)
        terms[exp] = terms.get(exp, 0) + sign * coeff
        i = _skip_ws(text, i)
        if i >= len(text):
            break
        if text[i] not in "+-":
            raise PolyParseError("expected '+' or '-'", i)
        sign = -1 if text[i] == "-" else 1
        i = _skip_ws(text, i + 1)
        if i >= len(text) or text[i] in "+-":
            raise PolyParseError("expected a term", i)
    coeffs = [0] * (max(terms) + 1)
    for exp, c in terms.items():
        coeffs[exp] = c
    return PolyZ(coeffs)


def parse_poly(text: str) -> PolyZ:
    """Parse either grammar into a PolyZ."""
    stripped = text.strip()
    if not stripped:
        raise PolyParseError("empty input", 0)
    if stripped[0] == "[":
        return _parse_list(text)
    return _parse_expression(text)


def format_poly(f: PolyZ) -> str:
    """Canonical descending-degree rendering; parses back to f."""
    if not f:
        return "0"
    parts = []
    for j in range(f.degree, -1, -1):
        c = f.coeffs[j]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if j == 0:
            body = str(mag)
        else:
            xpow = "x" if j == 1 else f"x^{j}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        parts.append(sign + body)
    return "".join(parts)
