"""Cylindrical algebraic decomposition of the affine plane for one polynomial.

Projection: the squarefree part g of f is split into its content c(x) (vertical
lines) and primitive part; the critical x-values are the real roots of
c * lc_y(g) * disc_y(g).  Between consecutive critical values g is
delineable, so one rational sample per open column suffices.  Over a critical
value alpha the fibre g(alpha, y) is handled exactly in Q(alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import sympy

from ..linalg import bareiss_det
from ..polyarith import Polynomial
from . import univariate as up
from .algebraic import KPoly, RealAlgebraic, real_roots_over
from .univariate import UPoly

BiPoly = Dict[int, UPoly]  # y-degree -> coefficient in Q[x]
XCoord = Union[Fraction, RealAlgebraic]


@dataclass
class CADCell:
    dim: int
    column: int
    stack: int
    x: XCoord
    y: Optional[Fraction]
    sign: int

    @property
    def on_curve(self) -> bool:
        return self.sign == 0

    def sample(self) -> Tuple[float, Optional[float]]:
        x = float(self.x) if isinstance(self.x, Fraction) else self.x.approx()
        return x, (None if self.y is None else float(self.y))


@dataclass
class CADComplex:
    cells: List[CADCell]
    critical: List[XCoord]
    projection: UPoly

    def euler_c(self, sign: Optional[int] = None) -> int:
        """Compactly supported Euler characteristic of the union of cells with this sign."""
        return sum((-1) ** c.dim for c in self.cells if sign is None or c.sign == sign)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for c in self.cells:
            key = f"dim{c.dim}_{'+' if c.sign > 0 else '-' if c.sign < 0 else '0'}"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))


# -- bivariate helpers ---------------------------------------------------------


def to_bipoly(p: Polynomial) -> BiPoly:
    if p.ring.nvars != 2:
        raise ValueError("cad_plane needs a polynomial in two variables")
    out: Dict[int, Dict[int, Fraction]] = {}
    for (i, j), c in p.terms.items():
        out.setdefault(j, {})[i] = c
    return {j: up.strip([d.get(k, 0) for k in range(max(d) + 1)]) for j, d in out.items()}


def _ydeg(f: BiPoly) -> int:
    return max((j for j, c in f.items() if c), default=-1)


def _eval_x(f: BiPoly, x: Fraction) -> UPoly:
    n = _ydeg(f)
    return up.strip([up.evaluate(f.get(j, []), x) for j in range(n + 1)])


def _dy(f: BiPoly) -> BiPoly:
    return {j - 1: up.scale(c, j) for j, c in f.items() if j > 0 and c}


def _xdeg(f: BiPoly) -> int:
    return max((len(c) - 1 for c in f.values() if c), default=0)


def resultant_y(f: BiPoly, g: BiPoly) -> UPoly:
    """res_y(f, g) in Q[x], by evaluation at integers and interpolation."""
    m, n = _ydeg(f), _ydeg(g)
    bound = m * _xdeg(g) + n * _xdeg(f)
    xs, ys = [], []
    k = 0
    while len(xs) < bound + 1:
        x = Fraction(k)
        k += 1
        fp = [up.evaluate(f.get(j, []), x) for j in range(m + 1)]
        gp = [up.evaluate(g.get(j, []), x) for j in range(n + 1)]
        val = Fraction(bareiss_det(up.sylvester(fp, gp))) if m + n else Fraction(1)
        xs.append(x)
        ys.append(val)
    return up.interpolate(xs, ys)


def _sympy_pair(p: Polynomial):
    x, y = sympy.symbols("x y")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** e[0] * y ** e[1] for e, c in p.terms.items())
    return sympy.Poly(expr, x, y, domain="QQ"), x, y


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.is_constant():
        return p
    P, x, y = _sympy_pair(p)
    sf = P.sqf_part()
    terms = {m: Fraction(int(c.p), int(c.q)) for m, c in sf.terms()}
    return Polynomial(p.ring, terms)


def irreducible_factors(p: UPoly) -> List[UPoly]:
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(p))
    _, facs = sympy.factor_list(expr, x)
    out = []
    for fac, _ in facs:
        coeffs = sympy.Poly(fac, x).all_coeffs()[::-1]
        out.append(up.monic(up.strip([Fraction(int(c.p), int(c.q)) for c in coeffs])))
    return out


def critical_values(P: UPoly) -> List[RealAlgebraic]:
    """Real roots of P as algebraic numbers with irreducible minimal polynomials."""
    roots = up.isolate_roots(P)
    if not roots:
        return []
    factors = [q for q in irreducible_factors(up.squarefree(P)) if len(q) > 1]
    out = []
    for r in roots:
        if r.exact:
            out.append(RealAlgebraic.rational(r.a))
            continue
        owner = [q for q in factors if up.sturm_count(q, r.a, r.b) - (up.evaluate(q, r.b) == 0) == 1]
        if len(owner) != 1:
            raise ArithmeticError("root not attributable to a unique factor")
        out.append(RealAlgebraic(owner[0], r))
    return out


def _separators(crit: List[RealAlgebraic]) -> List[Fraction]:
    """Rational points below, between and above the sorted critical values."""
    return up.separating_points([c.root for c in crit])


# -- the decomposition -----------------------------------------------------------


def cad_plane(f: Polynomial) -> CADComplex:
    """Sign-invariant CAD of R^2 for f (variables in ring order x, y)."""
    if not f:
        raise ValueError("zero polynomial")
    full = to_bipoly(f)
    g_poly = squarefree_part(f)
    g = to_bipoly(g_poly)
    content: UPoly = []
    for c in g.values():
        content = up.gcd(content, c) if content else up.monic(c)
    if len(content) > 1:
        g = {j: up.divmod_poly(c, content)[0] for j, c in g.items()}
    else:
        content = [Fraction(1)]
    n = _ydeg(g)
    proj = list(content)
    if n >= 1:
        proj = up.mul(proj, g[n])
    if n >= 2:
        proj = up.mul(proj, resultant_y(g, _dy(g)))
    P = up.squarefree(proj) if len(proj) > 1 else [Fraction(1)]
    crit = critical_values(P)
    seps = _separators(crit)

    cells: List[CADCell] = []
    col = 0
    for i, x0 in enumerate(seps):
        _open_stack(cells, col, x0, g, full)
        col += 1
        if i < len(crit):
            _point_stack(cells, col, crit[i], g, full, content)
            col += 1
    return CADComplex(cells, crit, P)


def _sign_full(full: BiPoly, x0: Fraction, y0: Fraction) -> int:
    return up.sign(up.evaluate(_eval_x(full, x0), y0))


def _open_stack(cells: List[CADCell], col: int, x0: Fraction, g: BiPoly, full: BiPoly) -> None:
    h = _eval_x(g, x0)
    roots = up.isolate_roots(h) if len(h) > 1 else []
    pts = up.separating_points(roots)
    k = 0
    for j, y0 in enumerate(pts):
        cells.append(CADCell(2, col, k, x0, y0, _sign_full(full, x0, y0)))
        k += 1
        if j < len(roots):
            r = roots[j]
            cells.append(CADCell(1, col, k, x0, r.a if r.exact else None, 0))
            k += 1


def _point_stack(
    cells: List[CADCell], col: int, alpha: RealAlgebraic, g: BiPoly, full: BiPoly, content: UPoly
) -> None:
    if alpha.sign_of(content) == 0:
        cells.append(CADCell(1, col, 0, _xval(alpha), None, 0))
        return
    h = KPoly(alpha, [g.get(j, []) for j in range(_ydeg(g) + 1)])
    F = KPoly(alpha, [full.get(j, []) for j in range(_ydeg(full) + 1)])
    roots = real_roots_over(h) if h.degree >= 1 else []
    pts = up.separating_points(roots)
    k = 0
    for j, y0 in enumerate(pts):
        cells.append(CADCell(1, col, k, _xval(alpha), y0, F.sign_at(y0)))
        k += 1
        if j < len(roots):
            r = roots[j]
            cells.append(CADCell(0, col, k, _xval(alpha), r.a if r.exact else None, 0))
            k += 1


def _xval(alpha: RealAlgebraic) -> XCoord:
    return alpha.value() if alpha.is_rational else alpha
