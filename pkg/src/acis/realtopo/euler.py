"""Euler characteristics of the sign regions of an even-degree curve in RP^2."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional

from ..polyarith import Polynomial, Ring, determinant, gradient, partial
from . import univariate as up
from .cad import CADComplex, cad_plane


class EulerError(ValueError):
    pass


@dataclass
class EulerReport:
    chi_plus: int
    chi_minus: int
    chi_curve: int
    affine: Dict[str, int]
    infinity: Dict[str, int]
    cells: Dict[str, int]
    cad: Optional[CADComplex] = field(default=None, repr=False)

    def partition_ok(self) -> bool:
        return self.chi_plus + self.chi_minus + self.chi_curve == 1

    def as_dict(self) -> Dict[str, object]:
        return {
            "chi_plus": self.chi_plus,
            "chi_minus": self.chi_minus,
            "chi_curve": self.chi_curve,
            "affine": dict(self.affine),
            "infinity": dict(self.infinity),
            "cells": dict(self.cells),
        }


def _check(F: Polynomial) -> int:
    if F.ring.nvars != 3:
        raise EulerError("need a form in three variables")
    if not F:
        raise EulerError("zero polynomial")
    if not F.is_homogeneous() or any(w != 1 for w in F.ring.weights):
        raise EulerError("need a homogeneous polynomial with unit weights")
    d = F.degree()
    if d % 2:
        raise EulerError("odd degree: the sign is not defined on RP^2")
    return d


def affine_chart(F: Polynomial) -> Polynomial:
    """F(x, y, 1) in the ring of the first two variables."""
    R2 = Ring(F.ring.names[:2])
    terms: Dict = {}
    for (a, b, _), c in F.terms.items():
        terms[(a, b)] = terms.get((a, b), 0) + c
    return Polynomial(R2, terms)


def _binary_at_infinity(F: Polynomial) -> up.UPoly:
    """F(t, 1, 0) as a univariate polynomial in t."""
    d = F.degree()
    coeffs = [Fraction(0)] * (d + 1)
    for (a, b, c), v in F.terms.items():
        if c == 0:
            coeffs[a] += v
    return up.strip(coeffs)


def line_at_infinity(F: Polynomial) -> Dict[str, int]:
    """chi_c contributions of the line z = 0: points of the curve +1, open arcs -1."""
    d = F.degree()
    b = _binary_at_infinity(F)
    if not b:
        return {"plus": 0, "minus": 0, "curve": 0, "points": 0, "arcs": 0}
    inf_root = len(b) - 1 < d  # (1:0:0) lies on the curve
    roots = up.isolate_roots(b) if len(b) > 1 else []
    npts = len(roots) + (1 if inf_root else 0)
    out = {"plus": 0, "minus": 0, "curve": npts, "points": npts, "arcs": 0}
    if npts == 0:
        return out  # a whole circle of one sign, chi_c = 0
    seps = up.separating_points(roots)
    # without (1:0:0) on the curve the two unbounded pieces form one arc
    samples = seps if inf_root else seps[1:]
    for t in samples:
        s = up.sign(up.evaluate(b, t))
        out["arcs"] += 1
        out["plus" if s > 0 else "minus"] -= 1
    return out


def euler_rp2(F: Polynomial) -> EulerReport:
    """chi(V+) and chi(V-) for a form F of even degree in x, y, z."""
    _check(F)
    f = affine_chart(F)
    cad = cad_plane(f)
    aff = {"plus": cad.euler_c(1), "minus": cad.euler_c(-1), "curve": cad.euler_c(0)}
    inf = line_at_infinity(F)
    return EulerReport(
        chi_plus=aff["plus"] + inf["plus"],
        chi_minus=aff["minus"] + inf["minus"],
        chi_curve=aff["curve"] + inf["curve"],
        affine=aff,
        infinity=inf,
        cells=cad.counts(),
        cad=cad,
    )


# -- the signature theorem ---------------------------------------------------------


@dataclass
class SignatureTheoremReport:
    sigma: int
    chi_plus: int
    chi_minus: int
    holds: bool
    nodal: bool
    method: str
    warnings: List[str]
    euler: EulerReport

    def as_dict(self) -> Dict[str, object]:
        return {
            "sigma": self.sigma,
            "chi_plus": self.chi_plus,
            "chi_minus": self.chi_minus,
            "difference": self.chi_plus - self.chi_minus,
            "holds": self.holds,
            "nodal": self.nodal,
            "method": self.method,
            "warnings": list(self.warnings),
        }


def is_nodal(F: Polynomial) -> bool:
    """Only ordinary double points: the Hessian has rank 2 along the singular lines.

    Equivalently the 2x2 minors of the Hessian matrix have no common zero with
    the partials outside the origin.
    """
    from ..groebner.ideal import Ideal, krull_dimension

    ring = F.ring
    grads = gradient(F)
    H = [[partial(g, v) for v in ring.names] for g in grads]
    minors = []
    for r in combinations(range(3), 2):
        for c in combinations(range(3), 2):
            minors.append(determinant([[H[i][j] for j in c] for i in r], ring))
    ideal = Ideal(ring, [g for g in list(grads) + minors if g])
    return krull_dimension(ideal) <= 0


def verify_signature_theorem(F: Polynomial, mode: str = "auto", seed: int = 0) -> SignatureTheoremReport:
    """Compare the signature of F with chi(V+) - chi(V-)."""
    from ..gorenstein import ev_levine, signature
    from ..groebner.ideal import Ideal, krull_dimension

    _check(F)
    warnings: List[str] = []
    dim = krull_dimension(Ideal(F.ring, gradient(F)))
    if dim == 0:
        sigma = ev_levine(gradient(F)).signature
        method = "eisenbud-levine"
    elif dim == 1:
        sigma = signature(F, mode=mode, seed=seed).signature
        method = "pairing"
    else:
        raise EulerError("the curve has a multiple component")
    nodal = is_nodal(F)
    if not nodal:
        warnings.append("curve has singularities worse than ordinary double points")
    rep = euler_rp2(F)
    return SignatureTheoremReport(
        sigma,
        rep.chi_plus,
        rep.chi_minus,
        sigma == rep.chi_plus - rep.chi_minus,
        nodal,
        method,
        warnings,
        rep,
    )
