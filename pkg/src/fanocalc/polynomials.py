"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero Fraction coefficients,
together with an ordered tuple of variable names.  The term order everywhere
is graded lexicographic (grlex) in the declared variable order; serialized
polynomials record that order so golden-file comparisons are deterministic.

The rational scalar type is the stdlib Fraction: it already maintains
gcd(|num|, den) = 1 and den > 0, which is exactly the normal form required
of scalars here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

RationalScalar = Fraction

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _grlex_key(expo: Exponent) -> tuple:
    return (sum(expo), expo)


class MultiPoly:
    """Immutable multivariate polynomial with Fraction coefficients.

    Zero coefficients are never stored; the zero polynomial has an empty
    term map.  Arithmetic requires both operands to live in the same
    variable ring, except that constants coerce into any ring.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, Scalar]):
        vs = tuple(vars)
        clean: dict[Exponent, Fraction] = {}
        n = len(vs)
        for expo, coeff in terms.items():
            e = tuple(int(x) for x in expo)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = _as_fraction(coeff)
            if c != 0:
                clean[e] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_args):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {})

    @classmethod
    def one(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls.constant(1, vars)

    @classmethod
    def constant(cls, value: Scalar, vars: Sequence[str] = ()) -> "MultiPoly":
        c = _as_fraction(value)
        if c == 0:
            return cls(vars, {})
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vs = tuple(vars)
        if name not in vs:
            raise ValueError(f"variable {name!r} not in ring {vs}")
        expo = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {expo: Fraction(1)})

    @classmethod
    def monomial(cls, expo: Exponent, coeff: Scalar, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {tuple(expo): coeff})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Max total degree of the stored terms; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        idx = self.vars.index(name)
        if self.is_zero:
            return -1
        return max(e[idx] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def used_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def leading(self) -> tuple[Exponent, Fraction]:
        """Leading (exponent, coefficient) in grlex order."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        expo = max(self.terms, key=_grlex_key)
        return expo, self.terms[expo]

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending grlex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, expo: Exponent) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    # -- coercion ----------------------------------------------------------

    def lift(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express this polynomial in a superset ring (matching names)."""
        vs = tuple(vars)
        if vs == self.vars:
            return self
        pos = []
        for v in self.vars:
            if v not in vs:
                raise ValueError(f"cannot lift: {v!r} missing from {vs}")
            pos.append(vs.index(v))
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * len(vs)
            for p, x in zip(pos, e):
                ne[p] = x
            out[tuple(ne)] = c
        return MultiPoly(vs, out)

    def _pair(self, other) -> tuple["MultiPoly", "MultiPoly"]:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented, NotImplemented
        if self.vars == other.vars:
            return self, other
        if other.is_constant:
            return self, MultiPoly.constant(other.constant_value(), self.vars)
        if self.is_constant:
            return MultiPoly.constant(self.constant_value(), other.vars), other
        raise ValueError(f"ring mismatch: {self.vars} vs {other.vars}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return MultiPoly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        return (self - other).is_zero

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- calculus and substitution ----------------------------------------

    def derivative(self, name: str) -> "MultiPoly":
        idx = self.vars.index(name)
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if e[idx] == 0:
                continue
            ne = list(e)
            ne[idx] -= 1
            ne = tuple(ne)
            out[ne] = out.get(ne, Fraction(0)) + c * e[idx]
        return MultiPoly(self.vars, out)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Full evaluation; every variable must receive a rational value."""
        vals = [_as_fraction(values[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, v in zip(e, vals):
                if x:
                    term *= v**x
            total += term
        return total

    def eval_some(self, values: Mapping[str, Scalar]) -> "MultiPoly":
        """Partial evaluation; unmentioned variables stay symbolic (same ring)."""
        idxs = {self.vars.index(v): _as_fraction(c) for v, c in values.items()}
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            coeff = c
            ne = list(e)
            for i, val in idxs.items():
                if e[i]:
                    coeff *= val ** e[i]
                ne[i] = 0
            ne = tuple(ne)
            if coeff != 0:
                out[ne] = out.get(ne, Fraction(0)) + coeff
        return MultiPoly(self.vars, out)

    def compose(self, images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute a polynomial for every variable; images share one ring."""
        rings = {img.vars for img in images.values()}
        if len(rings) != 1:
            raise ValueError("substitution images must share a ring")
        target = next(iter(rings))
        missing = [v for v in self.vars if v not in images]
        if missing:
            raise ValueError(f"no image for variables {missing}")
        result = MultiPoly.zero(target)
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, target)
            for v, x in zip(self.vars, e):
                if x:
                    term = term * images[v] ** x
            result = result + term
        return result

    # -- integer normal forms ---------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive; 0 for 0."""
        if self.is_zero:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MultiPoly":
        """self divided by its content (integer coefficients, gcd 1); 0 stays 0."""
        c = self.content()
        if c == 0:
            return self
        return self * (1 / c)

    def monic_normal(self) -> "MultiPoly":
        """Primitive form with positive grlex-leading coefficient."""
        p = self.primitive()
        if p.is_zero:
            return p
        _, lead = p.leading()
        return -p if lead < 0 else p

    # -- division ----------------------------------------------------------

    def div_exact(self, divisor: "MultiPoly") -> "MultiPoly | None":
        """Return q with self == q * divisor, or None if no exact quotient."""
        a, b = self._pair(divisor)
        if b.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if a.is_zero:
            return a
        quo = MultiPoly.zero(a.vars)
        rem = a
        lb_e, lb_c = b.leading()
        while not rem.is_zero:
            lr_e, lr_c = rem.leading()
            qe = tuple(x - y for x, y in zip(lr_e, lb_e))
            if any(x < 0 for x in qe):
                return None
            qt = MultiPoly.monomial(qe, lr_c / lb_c, a.vars)
            quo = quo + qt
            rem = rem - qt * b
        return quo

    def divides(self, other: "MultiPoly") -> bool:
        return other.div_exact(self) is not None

    # -- presentation ------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self!s})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x
            ]
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def variables(names: str | Sequence[str]) -> tuple[MultiPoly, ...]:
    """Build the ring generators: variables("t0 t1") -> (t0, t1)."""
    vs = tuple(names.split()) if isinstance(names, str) else tuple(names)
    return tuple(MultiPoly.variable(v, vs) for v in vs)


# -- gcd over Q[x1..xn] (primitive PRS, no factorization) ------------------


def _pseudo_rem(a: MultiPoly, b: MultiPoly, idx: int) -> MultiPoly:
    """Pseudo-remainder of a by b in variable #idx: lc(b)^k * a mod b."""
    name = a.vars[idx]
    db = b.degree_in(name)
    lb = _leading_coeff_in(b, idx)
    rem = a
    while not rem.is_zero and rem.degree_in(name) >= db:
        dr = rem.degree_in(name)
        lr = _leading_coeff_in(rem, idx)
        shift = MultiPoly.monomial(
            tuple(dr - db if i == idx else 0 for i in range(len(a.vars))), 1, a.vars
        )
        rem = rem * lb - b * shift * lr
    return rem


def _leading_coeff_in(p: MultiPoly, idx: int) -> MultiPoly:
    """Coefficient of the highest power of variable #idx (a poly in the rest)."""
    d = max(e[idx] for e in p.terms)
    out = {
        tuple(0 if i == idx else x for i, x in enumerate(e)): c
        for e, c in p.terms.items()
        if e[idx] == d
    }
    return MultiPoly(p.vars, out)

def _coeffs_in(p: MultiPoly, idx: int) -> list[MultiPoly]:
    """All coefficients of powers of variable #idx."""
    by_deg: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in p.terms.items():
        stripped = tuple(0 if i == idx else x for i, x in enumerate(e))
        by_deg.setdefault(e[idx], {})[stripped] = c
    return [MultiPoly(p.vars, t) for t in by_deg.values()]


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """gcd over Q[vars], returned primitive with positive leading coefficient.

    Units are collapsed: gcd of two nonzero constants is 1, gcd(f, 0) is the
    normalized f.
    """
    if f.vars != g.vars:
        f, g = f._pair(g)
    if f.is_zero:
        return g.monic_normal()
    if g.is_zero:
        return f.monic_normal()
    if f.is_constant or g.is_constant:
        return MultiPoly.one(f.vars)
    return _gcd_rec(f.primitive(), g.primitive()).monic_normal()


def _gcd_rec(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    if f.is_constant or g.is_constant:
        return MultiPoly.one(f.vars)
    # main variable: first declared variable occurring in either operand
    idx = None
    for i, v in enumerate(f.vars):
        if f.degree_in(v) > 0 or g.degree_in(v) > 0:
            idx = i
            break
    assert idx is not None
    name = f.vars[idx]
    if f.degree_in(name) == 0 or g.degree_in(name) == 0:
        # one operand is free of the main variable: gcd divides its coeffs
        free, other = (f, g) if f.degree_in(name) == 0 else (g, f)
        acc = free
        for c in _coeffs_in(other, idx):
            acc = _gcd_rec(acc, c)
            if acc.is_constant:
                return MultiPoly.one(f.vars)
        return acc

    def content_in(p: MultiPoly) -> MultiPoly:
        acc = MultiPoly.zero(p.vars)
        for c in _coeffs_in(p, idx):
            acc = _gcd_rec(acc, c)
            if acc.is_constant:
                return MultiPoly.one(p.vars)
        return acc

    cf, cg = content_in(f), content_in(g)
    pf = f.div_exact(cf)
    pg = g.div_exact(cg)
    assert pf is not None and pg is not None
    a, b = (pf, pg) if pf.degree_in(name) >= pg.degree_in(name) else (pg, pf)
    while not b.is_zero:
        r = _pseudo_rem(a, b, idx)
        if r.is_zero:
            a, b = b, r
            break
        a, b = b, r.div_exact(content_in(r))
    prim = a.div_exact(content_in(a))
    assert prim is not None
    return _gcd_rec(cf, cg) * prim


def poly_gcd_list(polys: Iterable[MultiPoly]) -> MultiPoly:
    """gcd of a collection; zero polynomial if the collection is all zero."""
    acc: MultiPoly | None = None
    for p in polys:
        acc = p.monic_normal() if acc is None else poly_gcd(acc, p)
        if acc is not None and not acc.is_zero and acc.is_constant:
            return acc
    if acc is None:
        raise ValueError("gcd of an empty collection")
    return acc


# -- projective normalization -------------------------------------------


def normalize_projective(coords: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
    """Clear denominators, divide by the common integer content, and fix the
    sign so the first nonzero entry has positive leading coefficient."""
    if all(p.is_zero for p in coords):
        raise ValueError("cannot normalize the zero vector")
    den = 1
    for p in coords:
        for c in p.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
    scaled = [p * den for p in coords]
    num = 0
    for p in scaled:
        for c in p.terms.values():
            num = math.gcd(num, abs(c.numerator))
    scaled = [p * Fraction(1, num) for p in scaled]
    first = next(p for p in scaled if not p.is_zero)
    _, lead = first.leading()
    if lead < 0:
        scaled = [-p for p in scaled]
    return tuple(scaled)


def projectively_equal(
    a: Sequence[MultiPoly], b: Sequence[MultiPoly]
) -> bool:
    """True iff a = c*b for some nonzero rational c (componentwise polys)."""
    if len(a) != len(b):
        return False
    ref = next((i for i, p in enumerate(a) if not p.is_zero), None)
    if ref is None or all(p.is_zero for p in b):
        return False
    if b[ref].is_zero:
        return False
    # cross-product test anchored at the reference entry: a[ref] b[j] = b[ref] a[j]
    for j in range(len(a)):
        if j == ref:
            continue
        if not (a[ref] * b[j] - b[ref] * a[j]).is_zero:
            return False
    return True
