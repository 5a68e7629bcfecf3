"""Canonical JSON forms for polynomials, matrices, and points.

The canonical polynomial form records the variable tuple, the term order
("grlex"), and the term list sorted ascending by exponent vector, with
coefficients as "num/den" strings.  Golden files and CLI reports use these
forms so byte-level comparisons are meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .matrices import PolyMatrix
from .polynomials import MultiPoly

TERM_ORDER = "grlex"


def fraction_to_json(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)


def fraction_from_json(s: str | int) -> Fraction:
    return Fraction(s) if isinstance(s, str) else Fraction(int(s))


def poly_to_json(p: MultiPoly) -> dict[str, Any]:
    return {
        "variables": list(p.vars),
        "order": TERM_ORDER,
        "terms": [
            [list(e), fraction_to_json(c)]
            for e, c in sorted(p.terms.items(), key=lambda t: t[0])
        ],
    }


def poly_from_json(data: dict[str, Any]) -> MultiPoly:
    if data.get("order", TERM_ORDER) != TERM_ORDER:
        raise ValueError(f"unsupported term order {data.get('order')!r}")
    vs = tuple(data["variables"])
    return MultiPoly(
        vs, {tuple(e): fraction_from_json(c) for e, c in data["terms"]}
    )


def matrix_to_json(m: PolyMatrix) -> dict[str, Any]:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "variables": list(m.vars),
        "order": TERM_ORDER,
        "entries": [[poly_to_json(x) for x in row] for row in m.entries],
    }


def matrix_from_json(data: dict[str, Any]) -> PolyMatrix:
    return PolyMatrix(
        tuple(data["variables"]),
        [[poly_from_json(x) for x in row] for row in data["entries"]],
    )


def vector_to_json(v: Sequence[MultiPoly]) -> list[dict[str, Any]]:
    return [poly_to_json(p) for p in v]


def vector_from_json(data: Sequence[dict[str, Any]]) -> tuple[MultiPoly, ...]:
    return tuple(poly_from_json(p) for p in data)
