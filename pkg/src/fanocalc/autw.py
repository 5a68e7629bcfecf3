"""The identity component of Aut(W) in block-matrix form, its wedge-square
action on P^9, and the orbit stratification of W.

An element is a 5 x 5 matrix

    A = [[lam * Symm2(G), U], [0, G]],   det(G) = 1, lam != 0,

where Symm2([[a, b], [c, d]]) has rows (ad+bc, ac, bd), (2ab, a^2, b^2),
(2cd, c^2, d^2), and the 3 x 2 block U satisfies the two linear constraints

    (1)  b*U00 - a*U01 - d*U10 + c*U11 = 0
    (2)  d*U00 - c*U01 - b*U20 + a*U21 = 0.

These constraints are exactly the conditions that the wedge square of A
keeps e34 inside the 7-space x03 = x14, x04 = x23; preserves_P7 re-derives
the full 16-equation check from scratch and is the ground truth the block
form is validated against (symbolically, on the two charts a != 0 and
b != 0 of det(G) = 1).

Because +-G give the same Symm2 block, (lam, U, G) and (-lam, -U, -G)
induce the same projective action; equality of group elements is therefore
tested on the induced action, not on the parameter triple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ClosureError, ConstraintError, DomainError, WitnessError
from .grassmann import (
    WEDGE_INDEX,
    WEDGE_PAIRS,
    P7_BASIS_SUPPORTS,
    WedgePoint,
    invariant_conic_residual,
    w_membership,
)
from .matrices import PolyMatrix
from .polynomials import MultiPoly, normalize_projective

SL2_RING = ("a", "b", "c", "d")


def _poly(value, vars=()) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.constant(value, vars)


def _common_ring(*values) -> tuple[str, ...]:
    rings = {v.vars for v in values if isinstance(v, MultiPoly) and not v.is_constant}
    if len(rings) > 1:
        raise ValueError(f"mixed rings: {rings}")
    return next(iter(rings)) if rings else ()


def _lift_all(values, vars):
    return [
        (v.lift(vars) if v.vars != vars else v)
        if isinstance(v, MultiPoly)
        else MultiPoly.constant(v, vars)
        for v in values
    ]


def subst_linear(poly: MultiPoly, var: str, num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Clear var from poly via den * var = num: returns sum p_i num^i den^(D-i).

    The result vanishes identically iff poly vanishes on the chart den != 0
    of the hypersurface den * var - num = 0.
    """
    idx = poly.vars.index(var)
    if poly.is_zero:
        return poly
    degree = max(e[idx] for e in poly.terms)
    out = MultiPoly.zero(poly.vars)
    for e, c in poly.terms.items():
        i = e[idx]
        stripped = tuple(0 if k == idx else x for k, x in enumerate(e))
        term = MultiPoly(poly.vars, {stripped: c})
        out = out + term * num**i * den ** (degree - i)
    return out


def vanishes_mod_sl2(poly: MultiPoly) -> bool:
    """True iff poly vanishes identically on {ad - bc = 1} (both charts).

    Chart a != 0 solves d = (1 + bc)/a; chart b != 0 solves c = (ad - 1)/b.
    The two charts cover the determinant-one variety since a = b = 0 forces
    ad - bc = 0.
    """
    vs = poly.vars
    for name in SL2_RING:
        if name not in vs:
            raise ValueError(f"ring {vs} lacks SL2 variable {name!r}")
    a = MultiPoly.variable("a", vs)
    b = MultiPoly.variable("b", vs)
    c = MultiPoly.variable("c", vs)
    d = MultiPoly.variable("d", vs)
    chart1 = subst_linear(poly, "d", MultiPoly.one(vs) + b * c, a)
    chart2 = subst_linear(poly, "c", a * d - MultiPoly.one(vs), b)
    return chart1.is_zero and chart2.is_zero


def symm2(g: Sequence[Sequence]) -> list[list[MultiPoly]]:
    """The displayed 3 x 3 symmetric-square block of a 2 x 2 matrix."""
    (a, b), (c, d) = g
    return [
        [a * d + b * c, a * c, b * d],
        [2 * (a * b), a * a, b * b],
        [2 * (c * d), c * c, d * d],
    ]


@dataclass(frozen=True)
class AutWElement:
    """Group element (lam, U, G); entries may be symbolic polynomials.

    `relation`, when set, is a polynomial (always ad - bc - 1 here) modulo
    which the defining identities hold; validation reduces on both charts.
    """

    lam: MultiPoly
    u: tuple[tuple[MultiPoly, MultiPoly], ...]  # 3 rows x 2 cols
    g: tuple[tuple[MultiPoly, MultiPoly], ...]  # 2 rows x 2 cols
    symbolic_det: bool = False

    # -- constructors -------------------------------------------------------

    @classmethod
    def unchecked(cls, lam, u, g, symbolic_det: bool = False) -> "AutWElement":
        ring = _common_ring(
            *( [lam] + [x for row in u for x in row] + [x for row in g for x in row] )
        )
        lamp = _lift_all([lam], ring)[0]
        up = tuple(tuple(_lift_all(row, ring)) for row in u)
        gp = tuple(tuple(_lift_all(row, ring)) for row in g)
        if len(up) != 3 or any(len(r) != 2 for r in up):
            raise DomainError("U must be 3 x 2")
        if len(gp) != 2 or any(len(r) != 2 for r in gp):
            raise DomainError("G must be 2 x 2")
        return cls(lamp, up, gp, symbolic_det)

    def _vanishes(self, poly: MultiPoly) -> bool:
        if self.symbolic_det:
            return vanishes_mod_sl2(poly)
        return poly.is_zero

    def constraint_values(self) -> tuple[MultiPoly, MultiPoly]:
        (a, b), (c, d) = self.g
        u = self.u
        c1 = b * u[0][0] - a * u[0][1] - d * u[1][0] + c * u[1][1]
        c2 = d * u[0][0] - c * u[0][1] - b * u[2][0] + a * u[2][1]
        return c1, c2

    def validate(self) -> None:
        (a, b), (c, d) = self.g
        det = a * d - b * c
        if not self._vanishes(det - 1):
            raise ConstraintError(f"det G = {det} != 1")
        if self.lam.is_zero:
            raise ConstraintError("lam = 0 is not a group element")
        c1, c2 = self.constraint_values()
        if not self._vanishes(c1):
            raise ConstraintError(
                f"constraint b*U00 - a*U01 - d*U10 + c*U11 = {c1} != 0"
            )
        if not self._vanishes(c2):
            raise ConstraintError(
                f"constraint d*U00 - c*U01 - b*U20 + a*U21 = {c2} != 0"
            )

    # -- matrices -----------------------------------------------------------

    def matrix5(self) -> PolyMatrix:
        ring = self.lam.vars
        s = symm2(self.g)
        zero = MultiPoly.zero(ring)
        rows = []
        for i in range(3):
            rows.append([self.lam * s[i][j] for j in range(3)] + list(self.u[i]))
        rows.append([zero, zero, zero, self.g[0][0], self.g[0][1]])
        rows.append([zero, zero, zero, self.g[1][0], self.g[1][1]])
        return PolyMatrix(ring, rows)

    def wedge_matrix(self) -> PolyMatrix:
        return wedge_square_matrix(self.matrix5())

    def to_json(self) -> dict:
        from .serialize import fraction_to_json

        def num(p: MultiPoly) -> str:
            return fraction_to_json(p.constant_value())

        (a, b), (c, d) = self.g
        return {
            "lambda": num(self.lam),
            "G": [num(a), num(b), num(c), num(d)],
            "U": [num(x) for row in self.u for x in row],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AutWElement":
        from .serialize import fraction_from_json as fj

        a, b, c, d = (fj(x) for x in data["G"])
        u = [fj(x) for x in data["U"]]
        return assemble(
            fj(data["lambda"]),
            [[u[0], u[1]], [u[2], u[3]], [u[4], u[5]]],
            [[a, b], [c, d]],
        )


def assemble(lam, u, g, symbolic_det: bool = False) -> AutWElement:
    """Build and validate a group element; errors name the violated equation."""
    el = AutWElement.unchecked(lam, u, g, symbolic_det)
    el.validate()
    return el


def identity_element() -> AutWElement:
    return assemble(1, [[0, 0], [0, 0], [0, 0]], [[1, 0], [0, 1]])


def ga_element(u, v, x, y) -> AutWElement:
    """Unipotent element [u | v | x | y]."""
    ring = _common_ring(*_lift_all([u, v, x, y], _common_ring(u, v, x, y)))
    uu, vv, xx, yy = _lift_all([u, v, x, y], ring)
    one = MultiPoly.one(ring)
    zero = MultiPoly.zero(ring)
    return assemble(
        one,
        [[-uu, -vv], [vv, xx], [yy, uu]],
        [[one, zero], [zero, one]],
    )


def gm_element(lam) -> AutWElement:
    return assemble(lam, [[0, 0], [0, 0], [0, 0]], [[1, 0], [0, 1]])


def pgl_element(g, symbolic_det: bool = False) -> AutWElement:
    ring = _common_ring(*[x for row in g for x in row])
    one = MultiPoly.one(ring)
    return assemble(one, [[0, 0], [0, 0], [0, 0]], g, symbolic_det)


def symbolic_family() -> AutWElement:
    """The fully symbolic element (lam, T([u,v,x,y]) * G, G(a,b,c,d)).

    The unipotent parameters enter as T * G so the two U-constraints hold
    identically modulo ad - bc - 1; all identities about this element are
    checked on both SL2 charts.
    """
    ring = ("a", "b", "c", "d", "lam", "u", "v", "x", "y")
    a, b, c, d, lam, u, v, x, y = (MultiPoly.variable(n, ring) for n in ring)
    t = [[-u, -v], [v, x], [y, u]]
    g = [[a, b], [c, d]]
    tg = [
        [t[i][0] * g[0][j] + t[i][1] * g[1][j] for j in range(2)]
        for i in range(3)
    ]
    return assemble(lam, tg, g, symbolic_det=True)


# -- wedge-square action -----------------------------------------------------


def wedge_square_matrix(a: PolyMatrix) -> PolyMatrix:
    """10 x 10 matrix of the induced map on wedge coordinates:
    e_ij -> sum over k < l of (a_ki a_lj - a_li a_kj) e_kl."""
    if a.rows != 5 or a.cols != 5:
        raise DomainError("wedge square of a non-5x5 matrix")
    e = a.entries
    grid = []
    for (k, l) in WEDGE_PAIRS:
        row = []
        for (i, j) in WEDGE_PAIRS:
            row.append(e[k][i] * e[l][j] - e[l][i] * e[k][j])
        grid.append(row)
    return PolyMatrix(a.vars, grid)


def wedge_square_action_raw(g: AutWElement, p: WedgePoint) -> WedgePoint:
    """Image of p under the wedge square of g, coefficients as computed."""
    w = g.wedge_matrix()
    ring = _common_ring(*(list(p.coords) + [x for row in w.entries for x in row]))
    coords = _lift_all(p.coords, ring)
    entries = [_lift_all(row, ring) for row in w.entries]
    zero = MultiPoly.zero(ring)
    image = [
        sum((entries[i][j] * coords[j] for j in range(10)), zero) for i in range(10)
    ]
    return WedgePoint(tuple(image))


def wedge_square_action(g: AutWElement, p: WedgePoint) -> WedgePoint:
    """Image of p under the wedge square of g, normalized."""
    return WedgePoint(normalize_projective(wedge_square_action_raw(g, p).coords))


def p7_defect(g: AutWElement) -> tuple[MultiPoly, ...]:
    """The 16 polynomials whose vanishing says the wedge square of g maps the
    7-space to itself (two linear conditions on the image of each of the 8
    basis vectors)."""
    w = g.wedge_matrix()
    ring = w.vars
    zero = MultiPoly.zero(ring)
    out = []
    for support in P7_BASIS_SUPPORTS:
        vec = [zero] * 10
        for pair in support:
            vec[WEDGE_INDEX[pair]] = MultiPoly.one(ring)
        img = w.apply(vec)
        out.append(img[WEDGE_INDEX[(0, 3)]] - img[WEDGE_INDEX[(1, 4)]])
        out.append(img[WEDGE_INDEX[(0, 4)]] - img[WEDGE_INDEX[(2, 3)]])
    return tuple(out)


def preserves_P7(g: AutWElement) -> bool:
    """Ground-truth membership check: all 16 defect polynomials vanish
    (identically, reduced on both SL2 charts when g is symbolic)."""
    return all(g._vanishes(p) for p in p7_defect(g))


# -- group law ----------------------------------------------------------------


def multiply(g1: AutWElement, g2: AutWElement) -> AutWElement:
    """Alias for group_closure_check: product re-decomposed into (lam, U, G)."""
    return group_closure_check(g1, g2)


def group_closure_check(g1: AutWElement, g2: AutWElement) -> AutWElement:
    """Multiply the 5 x 5 matrices and re-decompose into (lam, U, G) form.

    Raises ClosureError if the product leaves the family; that firing is a
    bug in the caller's inputs (the family is a group), never expected.
    """
    m = g1.matrix5() * g2.matrix5()
    symbolic = g1.symbolic_det or g2.symbolic_det
    return decompose_matrix(m, symbolic_det=symbolic)


def decompose_matrix(m: PolyMatrix, symbolic_det: bool = False) -> AutWElement:
    if m.rows != 5 or m.cols != 5:
        raise ClosureError("not a 5 x 5 matrix")
    for i in (3, 4):
        for j in (0, 1, 2):
            if not m.entries[i][j].is_zero:
                raise ClosureError("lower-left block is not zero")
    g = [[m.entries[3][3], m.entries[3][4]], [m.entries[4][3], m.entries[4][4]]]
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    scale = MultiPoly.one(m.vars)
    if not (det - 1).is_zero:
        # try to rescale the whole matrix so that det G becomes 1
        if not det.is_constant:
            raise ClosureError(f"det G = {det} is not constant")
        val = det.constant_value()
        if val <= 0:
            raise ClosureError(f"det G = {val} has no rational square root")
        num, den = val.numerator, val.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise ClosureError(f"det G = {val} has no rational square root")
        scale = MultiPoly.constant(Fraction(rd, rn), m.vars)
        g = [[x * scale for x in row] for row in g]
    u = tuple(
        (m.entries[i][3] * scale, m.entries[i][4] * scale) for i in range(3)
    )
    s = symm2(g)
    lam = None
    for i in range(3):
        for j in range(3):
            if lam is None and not s[i][j].is_zero:
                x = (m.entries[i][j] * scale).div_exact(s[i][j])
                if x is not None:
                    lam = x
    if lam is None:
        raise ClosureError("cannot determine lam from the Symm2 block")
    for i in range(3):
        for j in range(3):
            defect = m.entries[i][j] * scale - lam * s[i][j]
            ok = vanishes_mod_sl2(defect) if symbolic_det else defect.is_zero
            if not ok:
                raise ClosureError("upper-left block is not lam * Symm2(G)")
    try:
        return assemble(lam, u, g, symbolic_det)
    except ConstraintError as exc:
        raise ClosureError(f"product violates the family constraints: {exc}") from exc


def inverse(g: AutWElement) -> AutWElement:
    """Block inverse: (1/lam, -(1/lam) Symm2(G^-1) U G^-1, G^-1)."""
    (a, b), (c, d) = g.g
    det = a * d - b * c
    if not g.symbolic_det and not (det - 1).is_zero:
        raise ConstraintError("inverse requires det G = 1")
    ginv = [[d, -b], [-c, a]]
    lam_val = g.lam.constant_value()
    lam_inv = MultiPoly.constant(1 / lam_val, g.lam.vars)
    s_inv = symm2(ginv)
    # X^{-1} U G^{-1} with X = lam Symm2(G), X^{-1} = lam^{-1} Symm2(G^{-1})
    su = [
        [
            sum((s_inv[i][k] * g.u[k][j] for k in range(3)), MultiPoly.zero(g.lam.vars))
            for j in range(2)
        ]
        for i in range(3)
    ]
    sug = [
        [
            su[i][0] * ginv[0][j] + su[i][1] * ginv[1][j]
            for j in range(2)
        ]
        for i in range(3)
    ]
    u_inv = [[-(lam_inv * sug[i][j]) for j in range(2)] for i in range(3)]
    return assemble(lam_inv, u_inv, ginv)


def elements_equal(g1: AutWElement, g2: AutWElement) -> bool:
    """Equality as projective transformations of P^9 (so -G ~ G)."""
    w1 = g1.wedge_matrix()
    w2 = g2.wedge_matrix()
    flat1 = [x for row in w1.entries for x in row]
    flat2 = [x for row in w2.entries for x in row]
    from .polynomials import projectively_equal

    return projectively_equal(flat1, flat2)


# -- orbit stratification ------------------------------------------------------


class OrbitLabel(Enum):
    OPEN_ORBIT = "open_orbit"
    YO_MINUS_RHO = "Yo_minus_rho"
    RHO_MINUS_QO = "rho_minus_qo"
    QO = "qo"


def orbit_formula(u, v, x, y) -> WedgePoint:
    """The image of e34 under [u | v | x | y], written out explicitly:

    (v^2 - ux) e01 + (vy - u^2) e02 + (uv - xy) e12 + v (e03 + e14)
    - u (e04 + e23) - x e13 + y e24 + e34.
    """
    ring = _common_ring(*_lift_all([u, v, x, y], _common_ring(u, v, x, y)))
    uu, vv, xx, yy = _lift_all([u, v, x, y], ring)
    one = MultiPoly.one(ring)
    return WedgePoint.from_pairs(
        {
            (0, 1): vv * vv - uu * xx,
            (0, 2): vv * yy - uu * uu,
            (1, 2): uu * vv - xx * yy,
            (0, 3): vv,
            (1, 4): vv,
            (0, 4): -uu,
            (2, 3): -uu,
            (1, 3): -xx,
            (2, 4): yy,
            (3, 4): one,
        }
    )


def orbit_classify(p: WedgePoint) -> OrbitLabel:
    """Stratum of a point of W.

    The rho-plane strata are split by the conic x12^2 + 4 x01 x02 = 0, the
    unique conic preserved by the implemented wedge-square action; it passes
    through e01 and e02 and misses e12, like every sign convention of the
    stratification, but unlike x12^2 - 4 x01 x02 it makes the labels
    invariant under the group.
    """
    if not w_membership(p):
        raise DomainError("point is not on W")
    if not p.coord(3, 4).is_zero:
        return OrbitLabel.OPEN_ORBIT
    if not p.in_rho_plane_span():
        return OrbitLabel.YO_MINUS_RHO
    if not invariant_conic_residual(p).is_zero:
        return OrbitLabel.RHO_MINUS_QO
    return OrbitLabel.QO


# -- transitivity witnesses ---------------------------------------------------

_INF = "inf"


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _open_orbit_params(p: WedgePoint) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    p34 = p.coord(3, 4).constant_value()
    inv = 1 / p34
    u = -p.coord(0, 4).constant_value() * inv
    v = p.coord(0, 3).constant_value() * inv
    x = -p.coord(1, 3).constant_value() * inv
    y = p.coord(2, 4).constant_value() * inv
    if not orbit_formula(u, v, x, y).proj_eq(p):
        raise DomainError("point is not on the open orbit of W")
    return u, v, x, y


def _invariant_conic_parameter(p: WedgePoint):
    """Parameter t (or the infinity sentinel) of a point on the invariant
    conic (-t^2 : 1 : 2t) in rho-plane coordinates."""
    x01, x02, x12 = (c.constant_value() for c in p.rho_plane_coords())
    if x02 == 0:
        if x12 != 0:
            raise DomainError("point is not on the invariant conic")
        return _INF
    t = x12 / (2 * x02)
    if x01 != -(t * t) * x02:
        raise DomainError("point is not on the invariant conic")
    return t


def _moebius_matrix(t_from, t_to) -> list[list[Fraction]]:
    """An SL2(Q) matrix whose action t -> (a t + b)/(c t + d) sends t_from
    to t_to."""
    one, zero = Fraction(1), Fraction(0)
    if t_from == _INF and t_to == _INF:
        return [[one, zero], [zero, one]]
    if t_from == _INF:
        return [[t_to, -one], [one, zero]]
    if t_to == _INF:
        return [[zero, -one], [one, -t_from]]
    return [[one, t_to - t_from], [zero, one]]


def _solve_e12_transport(target: tuple[Fraction, Fraction, Fraction]) -> AutWElement:
    """An element of the Symm2-action with wedge image of e12 proportional to
    target = (x01 : x02 : x12); requires the discriminant x12^2 + 4 x01 x02
    to be a rational square (the action preserves this form exactly)."""
    alpha, beta, gamma = target
    delta = gamma * gamma + 4 * alpha * beta
    root = _rational_sqrt(delta)
    if root is None or root == 0:
        raise WitnessError(
            f"no rational transport from e12: discriminant {delta} is not a nonzero square"
        )
    for mu in (1 / root, -1 / root):
        p_ad = (mu * gamma + 1) / 2
        p_bc = (mu * gamma - 1) / 2
        p_ab = -mu * alpha
        p_cd = mu * beta
        sol = _solve_products(p_ad, p_bc, p_ab, p_cd)
        if sol is not None:
            return pgl_element([[sol[0], sol[1]], [sol[2], sol[3]]])
    raise WitnessError("inconsistent product system for e12 transport")


def _solve_products(p_ad, p_bc, p_ab, p_cd):
    """Solve a*d = p_ad, b*c = p_bc, a*b = p_ab, c*d = p_cd with ad - bc = 1."""
    if p_ad - p_bc != 1:
        return None
    if p_ab != 0 or p_ad != 0:
        a = Fraction(1)
        b, d = p_ab, p_ad
        if b != 0:
            c = p_bc / b
        elif d != 0:
            c = p_cd / d
        else:
            return None
    else:
        a = Fraction(0)
        b = Fraction(1)
        c = p_bc
        if c == 0:
            return None
        d = p_cd / c
    if a * d == p_ad and b * c == p_bc and a * b == p_ab and c * d == p_cd:
        return (a, b, c, d)
    return None


def orbit_transitivity_witness(p: WedgePoint, q: WedgePoint) -> Optional[AutWElement]:
    """An explicit group element with g . p = q (projectively), for points of
    the same stratum.  Returns None on the stratum Yo minus the rho plane,
    where no closed-form solver is provided; raises WitnessError when no
    rational witness exists on the rho-plane strata."""
    label_p = orbit_classify(p)
    label_q = orbit_classify(q)
    if label_p != label_q:
        raise DomainError(f"labels differ: {label_p.value} vs {label_q.value}")
    if label_p is OrbitLabel.OPEN_ORBIT:
        up, vp, xp, yp = _open_orbit_params(p)
        uq, vq, xq, yq = _open_orbit_params(q)
        return ga_element(uq - up, vq - vp, xq - xp, yq - yp)
    if label_p is OrbitLabel.QO:
        tp = _invariant_conic_parameter(p)
        tq = _invariant_conic_parameter(q)
        return pgl_element(_moebius_matrix(tp, tq))
    if label_p is OrbitLabel.RHO_MINUS_QO:
        norm_p = normalize_projective(p.rho_plane_coords())
        norm_q = normalize_projective(q.rho_plane_coords())
        gp = _solve_e12_transport(tuple(x.constant_value() for x in norm_p))
        gq = _solve_e12_transport(tuple(x.constant_value() for x in norm_q))
        return group_closure_check(gq, inverse(gp))
    return None


# -- sampling -----------------------------------------------------------------


def random_sl2(rng, size: int = 3) -> list[list[Fraction]]:
    """A random determinant-one integer matrix (product of elementary ones)."""
    m = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    for _ in range(size):
        r = Fraction(rng.randint(-3, 3))
        if rng.random() < 0.5:
            e = [[Fraction(1), r], [Fraction(0), Fraction(1)]]
        else:
            e = [[Fraction(1), Fraction(0)], [r, Fraction(1)]]
        m = [
            [
                m[0][0] * e[0][0] + m[0][1] * e[1][0],
                m[0][0] * e[0][1] + m[0][1] * e[1][1],
            ],
            [
                m[1][0] * e[0][0] + m[1][1] * e[1][0],
                m[1][0] * e[0][1] + m[1][1] * e[1][1],
            ],
        ]
    return m


def random_element(rng) -> AutWElement:
    """A random rational group element: unipotent times (lam, 0, G).

    The product [u|v|x|y] . (lam, 0, G) assembles directly as
    (lam, T * G, G) with T the unipotent block, so no decomposition runs.
    """
    g = random_sl2(rng)
    lam = Fraction(rng.choice([1, 2, 3, -1, -2, 5]), rng.choice([1, 2, 3]))
    u, v, x, y = (Fraction(rng.randint(-4, 4)) for _ in range(4))
    t = [[-u, -v], [v, x], [y, u]]
    tg = [
        [t[i][0] * g[0][j] + t[i][1] * g[1][j] for j in range(2)]
        for i in range(3)
    ]
    return assemble(lam, tg, g)
