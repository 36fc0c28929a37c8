"""JSON-ready encodings: rationals as "p/q" strings, polynomials as lists of {du, dt, coeff} records."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import BiPoly, LaurentPoly
from .checks import Check, Verdict


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational_str(s: str) -> Fraction:
    return Fraction(s)


def poly(p) -> list[dict]:
    if isinstance(p, BiPoly):
        return [{"du": du, "dt": dt, "coeff": rational(c)} for (du, dt), c in p.terms()]
    return [{"du": 0, "dt": d, "coeff": rational(c)} for d, c in p.terms()]


def parse_poly(records: list[dict]) -> BiPoly:
    return BiPoly({(r["du"], r["dt"]): Fraction(r["coeff"]) for r in records})


def parse_laurent(records: list[dict]) -> LaurentPoly:
    return LaurentPoly({r["dt"]: Fraction(r["coeff"]) for r in records})


def value(x):
    if isinstance(x, (BiPoly, LaurentPoly)):
        return poly(x)
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return rational(x)
    if isinstance(x, complex):
        return {"re": float(f"{x.real:.15g}"), "im": float(f"{x.imag:.15g}")}
    if isinstance(x, float):
        return float(f"{x:.15g}")
    return str(x)


def check(c: Check) -> dict:
    return {
        "name": c.name,
        "passed": c.passed,
        "lhs": value(c.lhs),
        "rhs": value(c.rhs),
        "diff": value(c.diff),
        "tolerance": c.tolerance,
    }


def verdict(v: Verdict) -> dict:
    return {"title": v.title, "passed": v.passed, "checks": [check(c) for c in v.checks]}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
