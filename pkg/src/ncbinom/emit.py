"""Text, LaTeX and JSON emitters for word-basis and PBW-basis polynomials.

JSON documents round-trip losslessly: {"ring": ..., "basis": "word"|"pbw",
"alphabet": m, "terms": [...]} with coefficients rendered as strings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .freepoly import FreePoly
from .pbw import PBWPoly, validate_monomial
from .rings import ModInt, QPoly
from .words import format_word, parse_word


def ring_tag(coeff) -> str:
    if isinstance(coeff, (int, Fraction)):
        return "Q"
    if isinstance(coeff, QPoly):
        return "Q[q]"
    if isinstance(coeff, ModInt):
        return f"GF:{coeff.p}"
    raise TypeError(f"unknown coefficient type {type(coeff).__name__}")


def poly_ring_tag(p) -> str:
    for c in p.terms.values():
        return ring_tag(c)
    return "Q"


def coeff_to_str(c) -> str:
    if isinstance(c, (int, Fraction, QPoly)):
        return str(c)
    if isinstance(c, ModInt):
        return str(c.value)
    raise TypeError(f"unknown coefficient type {type(c).__name__}")


_QTERM = re.compile(r"^(?:(-?\d+(?:/\d+)?)\*?)?(q(?:\^(\d+))?)?$")


def coeff_from_str(s: str, ring: str):
    s = s.strip()
    if ring == "Q":
        return Fraction(s) if "/" in s else int(s)
    if ring.startswith("GF:"):
        return ModInt(int(s), int(ring[3:]))
    if ring == "Q[q]":
        return _parse_qpoly(s)
    raise ValueError(f"unknown ring tag {ring!r}")


def _parse_qpoly(s: str) -> QPoly:
    if s == "0":
        return QPoly.zero()
    coeffs = {}
    for part in s.split(" + "):
        m = _QTERM.match(part.strip())
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse q-polynomial term {part!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(2) is None:
            power = 0
        else:
            power = int(m.group(3)) if m.group(3) else 1
        coeffs[power] = coeffs.get(power, Fraction(0)) + c
    top = max(coeffs)
    return QPoly([coeffs.get(i, 0) for i in range(top + 1)])


# -- text --------------------------------------------------------------------

def _coeff_text(c) -> str:
    s = coeff_to_str(c)
    return f"({s})" if " " in s else s


def emit_text(p) -> str:
    if isinstance(p, FreePoly):
        if not p.terms:
            return "0"
        parts = []
        for w, c in sorted(p.terms.items()):
            parts.append(f"{_coeff_text(c)}*E({format_word(w, p.m)})")
        return " + ".join(parts)
    if isinstance(p, PBWPoly):
        if not p.terms:
            return "0"
        parts = []
        for mono, c in sorted(p.terms.items()):
            if not mono:
                parts.append(f"{_coeff_text(c)}*1")
                continue
            factors = "*".join(
                f"E({format_word(a, p.m)})" + (f"^{t}" if t > 1 else "")
                for a, t in mono)
            parts.append(f"{_coeff_text(c)}*{factors}")
        return " + ".join(parts)
    raise TypeError(f"cannot emit {type(p).__name__}")


# -- LaTeX -------------------------------------------------------------------

def emit_latex(p) -> str:
    def coeff_prefix(c):
        s = coeff_to_str(c)
        if s == "1":
            return ""
        if isinstance(c, QPoly) and sum(1 for x in c.coeffs if x) > 1:
            return "(" + _qpoly_latex(c) + ")"
        if isinstance(c, QPoly):
            return _qpoly_latex(c)
        return s

    if isinstance(p, FreePoly):
        if not p.terms:
            return "0"
        parts = []
        for w, c in sorted(p.terms.items()):
            body = "".join(str(x) for x in w) if w else "1"
            parts.append(coeff_prefix(c) + body)
        return "+".join(parts)
    if isinstance(p, PBWPoly):
        if not p.terms:
            return "0"
        parts = []
        for mono, c in sorted(p.terms.items()):
            if not mono:
                parts.append(coeff_to_str(c))
                continue
            body = "".join(
                "E_{" + "".join(str(x) for x in a) + "}" + (f"^{{{t}}}" if t > 1 else "")
                for a, t in mono)
            parts.append(coeff_prefix(c) + body)
        return "+".join(parts)
    raise TypeError(f"cannot emit {type(p).__name__}")


def _qpoly_latex(c: QPoly) -> str:
    parts = []
    for i, x in enumerate(c.coeffs):
        if x == 0:
            continue
        if i == 0:
            parts.append(str(x))
        else:
            mono = "q" if i == 1 else f"q^{{{i}}}"
            parts.append(mono if x == 1 else f"{x}{mono}")
    return "+".join(parts)


# -- JSON --------------------------------------------------------------------

def emit_json(p) -> dict:
    ring = poly_ring_tag(p)
    if isinstance(p, FreePoly):
        terms = [{"coeff": coeff_to_str(c), "word": format_word(w, p.m)}
                 for w, c in sorted(p.terms.items())]
        return {"ring": ring, "basis": "word", "alphabet": p.m, "terms": terms}
    if isinstance(p, PBWPoly):
        terms = [{"coeff": coeff_to_str(c),
                  "factors": [[format_word(a, p.m), t] for a, t in mono]}
                 for mono, c in sorted(p.terms.items())]
        return {"ring": ring, "basis": "pbw", "alphabet": p.m, "terms": terms}
    raise TypeError(f"cannot emit {type(p).__name__}")


def parse_json(doc: dict):
    ring = doc["ring"]
    m = doc.get("alphabet", 2)
    if doc["basis"] == "word":
        terms = {}
        for t in doc["terms"]:
            terms[parse_word(t["word"], m)] = coeff_from_str(t["coeff"], ring)
        return FreePoly(terms, m)
    if doc["basis"] == "pbw":
        terms = {}
        for t in doc["terms"]:
            mono = tuple((parse_word(a, m), e) for a, e in t["factors"])
            terms[validate_monomial(mono)] = coeff_from_str(t["coeff"], ring)
        return PBWPoly(terms, m)
    raise ValueError(f"unknown basis {doc['basis']!r}")


def emit(p, fmt: str) -> str:
    if fmt == "text":
        return emit_text(p)
    if fmt == "latex":
        return emit_latex(p)
    if fmt == "json":
        return json.dumps(emit_json(p))
    raise ValueError(f"unknown format {fmt!r}")
