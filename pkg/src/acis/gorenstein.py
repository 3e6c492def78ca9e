"""Jacobian modules M = I/J and their Gorenstein duality pairing.

J = (f_1, ..., f_n) is a homogeneous almost complete intersection in n
variables (V(J) of dimension one), I = J : m^infinity its saturation and
M = I/J the m-torsion of P/J.  M carries a non-degenerate symmetric pairing
concentrated in complementary degrees d + d' = s, where
s = sum deg f_i - sum of the variable weights.

Two independent constructions of the Gram matrix are provided.

``homological``
    F is a free resolution of P/J whose first map is (f_1, ..., f_n) and
    c: K(f) -> F the comparison map with c_0 = c_1 = id; w = c_n(e_1..n).
    A class a in M corresponds to a functional xi_a on F_n with
    xi_a(w) = a mod J.  For an m-primary complete intersection
    t = (t_1..t_n) inside ann(M) = J : I, multiplication by b in I lifts to
    a chain map beta: K(t) -> F; with v_b = beta_n(e_1..n) the pairing is
    the residue of xi_a(v_b) in P/(t), normalised so that the Jacobian
    determinant of t has residue dim P/(t).

``hessian``
    The pairing is assumed to factor over I/J x I/J -> I^2/IJ followed by
    a functional on the top degree piece dual to the Jacobian determinant h.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .groebner.ideal import HilbertData, Ideal, krull_dimension, saturate_irrelevant
from .groebner.modules import monomials_of_degree, poly_to_vec
from .homology import (
    FreeComplex,
    GradedModulePresentation,
    LiftError,
    free_resolution,
    koszul_complex,
    lift_map,
)
from .linalg import nullspace, rref
from .polyarith import Polynomial, Ring, determinant, gradient, jacobian_det, partial
from .quadform import signature_exact

PolyOrSeq = Union[Polynomial, Sequence[Polynomial]]


class GorensteinError(ValueError):
    """A precondition of a pairing computation does not hold.

    ``reason`` is a short machine-readable tag.
    """

    def __init__(self, message: str, reason: str = "precondition"):
        super().__init__(message)
        self.reason = reason


class InternalCheckError(RuntimeError):
    """An internal consistency assertion failed."""


def _as_sequence(f: PolyOrSeq) -> Tuple[Optional[Polynomial], Tuple[Polynomial, ...]]:
    if isinstance(f, Polynomial):
        return f, gradient(f)
    fs = tuple(f)
    if not fs:
        raise GorensteinError("empty sequence", "input")
    return None, fs


# ---------------------------------------------------------------------------
# graded pieces of quotients of ideals


def _monomial_index(ring: Ring, d: int):
    mons = monomials_of_degree(ring.weights, d)
    return mons, {m: i for i, m in enumerate(mons)}


def _coords(p: Polynomial, index) -> List[Fraction]:
    v = [Fraction(0)] * len(index)
    for e, c in p.terms.items():
        v[index[e]] = c
    return v


def _grevlex_sorted(ring: Ring, mons):
    from .polyarith import grevlex_key

    return sorted(mons, key=lambda m: grevlex_key(m, ring.weights), reverse=True)


def quotient_piece(big: Ideal, small: Ideal, d: int) -> List[Polynomial]:
    """Basis of (big/small)_d as normal forms mod ``small``, in reduced echelon form.

    Monomials are ordered grevlex-descending, so each basis element has a
    distinct leading monomial and the coordinates of a normal form are read
    off at those monomials.
    """
    ring = big.ring
    mons = _grevlex_sorted(ring, monomials_of_degree(ring.weights, d))
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for p in big.piece_basis(d):
        nf = small.normal_form(p)
        if nf:
            rows.append(_coords(nf, index))
    if not rows:
        return []
    R, _ = rref(rows)
    return [Polynomial(ring, {mons[i]: v for i, v in enumerate(row) if v}) for row in R]


def _leading_monomial(p: Polynomial):
    return p.sorted_terms()[0][0]


def _echelon_coordinates(basis: Sequence[Polynomial], p: Polynomial) -> List[Fraction]:
    """Coordinates of p (already a normal form in the span) in a reduced echelon basis."""
    return [p.coefficient(_leading_monomial(b)) for b in basis]


def monomial_label(ring: Ring, e) -> str:
    parts = []
    for name, k in zip(ring.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# Jacobian module


@dataclass
class JacobianModule:
    ring: Ring
    fs: Tuple[Polynomial, ...]
    f: Optional[Polynomial]
    J: Ideal
    I: Ideal
    saturation_steps: int
    socle_degree: int
    basis: List[Tuple[int, Polynomial]]
    hilbert: HilbertData

    @property
    def dim(self) -> int:
        return len(self.basis)

    def labels(self) -> List[str]:
        return [f"[{monomial_label(self.ring, _leading_monomial(p))}]" for _, p in self.basis]

    def degrees(self) -> List[int]:
        return [d for d, _ in self.basis]

    def hessian(self) -> Polynomial:
        return jacobian_det(self.fs)

    def is_symmetric(self) -> bool:
        return self.hilbert.is_symmetric(self.socle_degree)


def _check_homogeneous(fs: Sequence[Polynomial]) -> None:
    for g in fs:
        if not g:
            raise GorensteinError("zero entry in the sequence", "input")
        if not g.is_homogeneous():
            raise GorensteinError(
                "input is not weighted-homogeneous; use a weighted-homogeneous representative",
                "inhomogeneous",
            )


def jacobian_module(f: PolyOrSeq, check_oracle: bool = False) -> JacobianModule:
    """M = I/J for J = (f_1..f_n) (the partials when a single f is given)."""
    f0, fs = _as_sequence(f)
    ring = fs[0].ring
    if len(fs) != ring.nvars:
        raise GorensteinError(f"need {ring.nvars} elements, got {len(fs)}", "input")
    _check_homogeneous(fs)
    J = Ideal(ring, fs)
    dim = krull_dimension(J)
    if dim == 0:
        raise GorensteinError("V(J) is zero-dimensional: use ev_levine", "zero-dimensional")
    if dim != 1:
        raise GorensteinError(
            f"V(J) has dimension {dim}: the module is not Gorenstein in general, use h0m_general",
            "dimension",
        )
    I, steps = saturate_irrelevant(J)
    s = sum(g.degree() for g in fs) - sum(ring.weights)
    values = {}
    basis: List[Tuple[int, Polynomial]] = []
    for d in range(0, s + 3):
        values[d] = J.hilbert_value(d) - I.hilbert_value(d)
        if 0 <= d <= s and values[d]:
            piece = quotient_piece(I, J, d)
            if len(piece) != values[d]:
                raise InternalCheckError("module basis disagrees with Hilbert function")
            basis.extend((d, p) for p in piece)
    if any(values[d] for d in range(s + 1, s + 3)):
        raise InternalCheckError("module has elements above the socle degree")
    hil = HilbertData(values, finite=True)
    M = JacobianModule(ring, fs, f0, J, I, steps, s, basis, hil)
    if check_oracle:
        from .groebner.oracle import degreewise_oracle

        rep = degreewise_oracle(list(fs), s + 2 + max(ring.weights) * (steps + 1), window=s + 2)
        for d in range(s + 3):
            if rep.module_hilbert.get(d, 0) != values[d]:
                raise InternalCheckError(f"oracle disagrees in degree {d}")
    return M


@dataclass
class H0mReport:
    hilbert: HilbertData
    symmetric: bool
    saturation_steps: int
    window: Tuple[int, int]
    dimension: int


def h0m_general(J: Ideal, degree_bound: int | None = None) -> H0mReport:
    """Hilbert data of H^0_m(P/J) = (J : m^infinity)/J in degrees 0..bound.

    The window must reach past the support; the last two degrees are
    required to vanish, otherwise the bound is reported as too small.
    """
    if not J.is_homogeneous():
        raise GorensteinError("h0m_general needs a homogeneous ideal", "inhomogeneous")
    I, steps = saturate_irrelevant(J)
    if degree_bound is None:
        degree_bound = sum(g.degree() for g in J.gens) + 2
    vals = {d: J.hilbert_value(d) - I.hilbert_value(d) for d in range(degree_bound + 1)}
    tail = [vals[d] for d in range(max(0, degree_bound - 1), degree_bound + 1)]
    if any(tail):
        raise GorensteinError("degree window too small for the torsion module", "window")
    hil = HilbertData(vals, finite=True)
    return H0mReport(hil, hil.is_symmetric(), steps, (0, degree_bound), krull_dimension(J))


# ---------------------------------------------------------------------------
# Gram matrices


@dataclass
class GramMatrix:
    matrix: List[List[Fraction]]
    mode: str
    labels: List[str]
    degrees: List[int]
    normalization: Dict[str, object] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(n) for j in range(n))

    def is_graded_antidiagonal(self, s: int) -> bool:
        n = self.size
        return all(
            self.matrix[i][j] == 0
            for i in range(n)
            for j in range(n)
            if self.degrees[i] + self.degrees[j] != s
        )

    def inertia(self) -> Tuple[int, int, int]:
        return signature_exact(self.matrix)

    def signature(self) -> int:
        p, m, _ = self.inertia()
        return p - m

    def rank(self) -> int:
        p, m, _ = self.inertia()
        return p + m

    def as_strings(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.matrix]


@dataclass
class ConjectureReport:
    module_hilbert: HilbertData
    quotient_hilbert: HilbertData
    socle_hilbert: HilbertData
    hessian_degree: int
    hessian_in_socle: bool
    hessian_nonzero: bool
    dims_equal: bool
    parts: Dict[str, Optional[bool]]
    messages: List[str] = field(default_factory=list)

    @property
    def socle_dimension(self) -> int:
        return self.socle_hilbert.total()


def _socle_piece(basis: Sequence[Polynomial], modulo: Ideal, ring: Ring) -> List[List[Fraction]]:
    """Coefficient vectors (in ``basis``) of elements killed by every variable."""
    if not basis:
        return []
    cols = []
    for b in basis:
        col: List[Fraction] = []
        for x in ring.gens():
            nf = modulo.normal_form(b * x)
            d = b.degree() + x.degree()
            _, index = _monomial_index(ring, d)
            col.extend(_coords(nf, index))
        cols.append(col)
    rows = [list(r) for r in zip(*cols)]
    if not any(any(r) for r in rows):
        return [[Fraction(int(i == j)) for j in range(len(basis))] for i in range(len(basis))]
    return nullspace(rows, len(basis))


class _ProductData:
    """Graded pieces of I^2/IJ, computed once per module."""

    def __init__(self, M: JacobianModule):
        self.M = M
        ring = M.ring
        self.I2 = M.I.power(2)
        self.IJ = Ideal(ring, [a * b for a in M.I.gens for b in M.J.gens])
        self.pieces: Dict[int, List[Polynomial]] = {}
        s = M.socle_degree
        lo = 2 * min(g.degree() for g in M.I.gens)
        hi = s + 2 * max(ring.weights)
        vals = {}
        for d in range(lo, hi + 1):
            vals[d] = self.IJ.hilbert_value(d) - self.I2.hilbert_value(d)
            self.pieces[d] = quotient_piece(self.I2, self.IJ, d) if vals[d] else []
        if any(vals[d] for d in range(s + 1, hi + 1)):
            raise InternalCheckError("I^2/IJ has elements above the socle degree")
        self.hilbert = HilbertData(vals, finite=True)

    def socle(self) -> HilbertData:
        vals = {}
        for d, basis in self.pieces.items():
            vals[d] = len(_socle_piece(basis, self.IJ, self.M.ring))
        return HilbertData(vals, finite=True)


def conjecture_check(f: PolyOrSeq | JacobianModule, compare: bool = True, seed: int = 0) -> ConjectureReport:
    """Evaluate the three conjectured properties of I^2/IJ for this module.

    Part 1 asks for a functional l on (I^2/IJ)_s with B(a, b) = l(ab) for
    the reference (homological) pairing B; this is a linear system.  When
    (I^2/IJ)_s = 0 it fails without computing B.  With ``compare=False``
    the remaining case is left undecided (None).
    """
    M = f if isinstance(f, JacobianModule) else jacobian_module(f)
    data = _ProductData(M)
    soc = data.socle()
    h = M.hessian()
    hdeg = h.degree()
    nf_h = data.IJ.normal_form(h)
    h_nonzero = bool(nf_h)
    in_soc = h_nonzero and all(data.IJ.contains(h * x) for x in M.ring.gens())
    parts: Dict[str, Optional[bool]] = {
        "1_pairing_factors": None,
        "2_socle_one_dimensional": soc.total() == 1,
        "3_socle_generated_by_hessian": bool(in_soc and soc.total() == 1 and soc[hdeg] == 1),
    }
    msgs = []
    if not h_nonzero:
        msgs.append(
            f"I^2/IJ has Poincare polynomial {data.hilbert.polynomial()}, "
            f"but the Jacobian determinant sits in degree {hdeg} and is zero there"
        )
    top = data.pieces.get(M.socle_degree, [])
    if M.dim and not top:
        parts["1_pairing_factors"] = False
        msgs.append(f"(I^2/IJ)_{M.socle_degree} = 0, so a nondegenerate pairing cannot factor")
    elif M.dim and compare:
        gram = pairing_homological(M, seed=seed)
        parts["1_pairing_factors"] = _factors(M, data, gram)
    return ConjectureReport(
        module_hilbert=M.hilbert,
        quotient_hilbert=data.hilbert,
        socle_hilbert=soc,
        hessian_degree=hdeg,
        hessian_in_socle=in_soc,
        hessian_nonzero=h_nonzero,
        dims_equal=M.dim == data.hilbert.total(),
        parts=parts,
        messages=msgs,
    )


def _factors(M: JacobianModule, data: _ProductData, gram: GramMatrix) -> bool:
    """Is there l on (I^2/IJ)_s with gram[i][j] = l(b_i b_j) for complementary pairs?"""
    s = M.socle_degree
    top = data.pieces[s]
    rows = []
    for i, (da, a) in enumerate(M.basis):
        for j, (db, b) in enumerate(M.basis):
            if da + db != s or j < i:
                continue
            nf = data.IJ.normal_form(a * b)
            rows.append(_echelon_coordinates(top, nf) + [gram.matrix[i][j]])
    if not rows:
        return True
    from .linalg import rank as _rank

    return _rank([r[:-1] for r in rows]) == _rank(rows)


# -- hessian mode ------------------------------------------------------------

def pairing_hessian(M: JacobianModule, data: _ProductData | None = None) -> GramMatrix:
    """B(a, b) = l(a b mod IJ), l the functional on (I^2/IJ)_s dual to h."""
    if data is None:
        data = _ProductData(M)
    s = M.socle_degree
    h = M.hessian()
    top = data.pieces.get(s, [])
    nf_h = data.IJ.normal_form(h)
    if h.degree() != s or not nf_h:
        raise GorensteinError(
            f"socle check failed: I^2/IJ has Poincare polynomial {data.hilbert.polynomial()} "
            f"and the Jacobian determinant (degree {h.degree()}) vanishes in it",
            "socle",
        )
    soc = _socle_piece(top, data.IJ, M.ring)
    others = sum(len(_socle_piece(b, data.IJ, M.ring)) for d, b in data.pieces.items() if d != s)
    if len(soc) + others != 1:
        raise GorensteinError(
            f"socle check failed: socle of I^2/IJ has dimension {len(soc) + others}", "socle"
        )
    if not all(data.IJ.contains(h * x) for x in M.ring.gens()):
        raise GorensteinError("socle check failed: Jacobian determinant not in the socle", "socle")
    coords_h = _echelon_coordinates(top, nf_h)
    jstar = next(j for j, c in enumerate(coords_h) if c)
    scale = 1 / coords_h[jstar]
    lead = _leading_monomial(top[jstar])

    def ell(g: Polynomial) -> Fraction:
        nf = data.IJ.normal_form(g)
        return nf.coefficient(lead) * scale

    n = M.dim
    G = [[Fraction(0)] * n for _ in range(n)]
    for i, (da, a) in enumerate(M.basis):
        for j in range(i, n):
            db, b = M.basis[j]
            if da + db != s:
                continue
            G[i][j] = G[j][i] = ell(a * b)
    return GramMatrix(
        G,
        "hessian",
        M.labels(),
        M.degrees(),
        {"functional": "dual to the Jacobian determinant", "value_on_hessian": "1",
         "pivot_monomial": monomial_label(M.ring, lead)},
    )


# -- homological mode ----------------------------------------------------------

@dataclass
class RegularSequence:
    elements: Tuple[Polynomial, ...]
    degree: int
    trials: int
    seed: int


def _regular_sequence(ann: Ideal, n: int, seed: int, max_trials: int) -> RegularSequence:
    """n random combinations of (ann)_D, certified by dim P/(t_1..t_k) = n - k."""
    ring = ann.ring
    rng = random.Random(seed)
    D = ann.max_generator_degree()
    trials = 0
    for bump in range(0, 4):
        deg = D + bump * max(ring.weights)
        piece = ann.piece_basis(deg)
        if not piece:
            continue
        for _ in range(max_trials):
            trials += 1
            ts = []
            ok = True
            for k in range(n):
                coeffs = [rng.randint(-3, 3) for _ in piece]
                if not any(coeffs):
                    coeffs[rng.randrange(len(coeffs))] = 1
                t = ring.zero()
                for c, p in zip(coeffs, piece):
                    if c:
                        t = t + p * c
                ts.append(t)
                if krull_dimension(Ideal(ring, ts)) != n - k - 1:
                    ok = False
                    break
            if ok:
                return RegularSequence(tuple(ts), deg, trials, seed)
    raise GorensteinError(
        f"no regular sequence found in the annihilator after {trials} trials (seed {seed})",
        "regular-sequence",
    )


class _Residue:
    """Residue functional of the graded complete intersection P/(t)."""

    def __init__(self, ts: Sequence[Polynomial]):
        ring = ts[0].ring
        self.ideal = Ideal(ring, ts)
        self.degree = sum(t.degree() for t in ts) - sum(ring.weights)
        jac = self.ideal.normal_form(jacobian_det(ts))
        if not jac or jac.degree() != self.degree:
            raise InternalCheckError("Jacobian determinant does not span the socle")
        self.lead = _leading_monomial(jac)
        self.jac_lead = jac.coefficient(self.lead)
        total = 0
        for d in range(self.degree + 1):
            total += self.ideal.hilbert_value(d)
        self.length = total
        self.jac = jac

    def __call__(self, g: Polynomial) -> Fraction:
        nf = self.ideal.normal_form(g).homogeneous_part(self.degree)
        if not nf:
            return Fraction(0)
        lam = nf.coefficient(self.lead) / self.jac_lead
        if nf != self.jac * lam:
            raise InternalCheckError("socle piece of the artinian ring is not one-dimensional")
        return lam * self.length


def _unit_column(ring: Ring) -> Dict:
    return {(0, (0,) * ring.nvars): Fraction(1)}


def _poly_column(p: Polynomial) -> Dict:
    return {(0, e): v for e, v in p.terms.items()}


def pairing_homological(M: JacobianModule, seed: int = 0, max_trials: int = 20) -> GramMatrix:
    """Reference Gram matrix through resolutions and a complete intersection in ann(M)."""
    ring = M.ring
    n = ring.nvars
    fs = M.fs
    F = free_resolution(GradedModulePresentation.quotient_ring(Ideal(ring, fs)), minimize=False)
    if F.rank(n) == 0:
        raise InternalCheckError("resolution of P/J is shorter than n although M is nonzero")
    K = koszul_complex(fs)
    comp = lift_map(K, F, [_unit_column(ring)], top=n)
    w_vec = comp.maps[n][0]
    r = F.rank(n)
    w = [Polynomial._raw(ring, {e: v for (c, e), v in w_vec.items() if c == i}) for i in range(r)]

    # xi_a: functional on F_n with xi_a(w) = a mod J
    from .groebner.modules import Lifter

    cols = [_poly_column(wi) for wi in w] + [_poly_column(g) for g in fs]
    lf = Lifter(ring, cols, (0,), None)
    xis = []
    for _, a in M.basis:
        u = lf.lift(_poly_column(a))
        if u is None:
            raise InternalCheckError("module element not in the image of the comparison map")
        xis.append([Polynomial._raw(ring, {e: v for (c, e), v in u.items() if c == i}) for i in range(r)])

    ann = M.J.colon_ideal(M.I)
    reg = _regular_sequence(ann, n, seed, max_trials)
    Kt = koszul_complex(reg.elements)
    res = _Residue(reg.elements)
    vs = []
    for _, b in M.basis:
        beta = lift_map(Kt, F, [_poly_column(b)], top=n)
        vb = beta.maps[n][0]
        vs.append([Polynomial._raw(ring, {e: v for (c, e), v in vb.items() if c == i}) for i in range(r)])

    dim = M.dim
    G = [[Fraction(0)] * dim for _ in range(dim)]
    s = M.socle_degree
    for i, (da, _) in enumerate(M.basis):
        for j, (db, _) in enumerate(M.basis):
            if da + db != s:
                continue
            g = ring.zero()
            for xi, vi in zip(xis[i], vs[j]):
                if xi and vi:
                    g = g + xi * vi
            G[i][j] = res(g)
    gram = GramMatrix(
        G,
        "homological",
        M.labels(),
        M.degrees(),
        {
            "regular_sequence": [str(t) for t in reg.elements],
            "regular_sequence_degree": reg.degree,
            "trials": reg.trials,
            "seed": seed,
            "residue_of_jacobian": str(res.length),
        },
    )
    if not gram.is_symmetric():
        raise InternalCheckError("homological Gram matrix is not symmetric")
    return gram


# ---------------------------------------------------------------------------
# signature


@dataclass
class PairingReport:
    module: JacobianModule
    gram: GramMatrix
    n_plus: int
    n_minus: int
    n_zero: int
    mode: str
    seed: int
    checks: Dict[str, object] = field(default_factory=dict)

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus


def signature(f: PolyOrSeq, mode: str = "auto", seed: int = 0, module: JacobianModule | None = None) -> PairingReport:
    """sigma = signature of the pairing on I/J; ``auto`` tries hessian, then homological."""
    if mode not in ("auto", "hessian", "homological"):
        raise ValueError(f"unknown mode {mode!r}")
    M = module if module is not None else jacobian_module(f)
    checks: Dict[str, object] = {}
    gram = None
    if M.dim == 0:
        gram = GramMatrix([], mode if mode != "auto" else "hessian", [], [], {"note": "I = J"})
    elif mode in ("auto", "hessian"):
        try:
            gram = pairing_hessian(M)
        except GorensteinError as exc:
            if mode == "hessian":
                raise
            checks["hessian_fallback"] = str(exc)
    if gram is None:
        gram = pairing_homological(M, seed=seed)
    p, m, z = gram.inertia()
    if z:
        raise InternalCheckError(f"degenerate Gram matrix ({z} null directions)")
    if not gram.is_graded_antidiagonal(M.socle_degree):
        raise InternalCheckError("Gram matrix couples non-complementary degrees")
    return PairingReport(M, gram, p, m, z, gram.mode, seed, checks)


# ---------------------------------------------------------------------------
# zero-dimensional case


@dataclass
class ELForm:
    basis: List[Tuple[int, ...]]
    labels: List[str]
    h: Polynomial
    h_normal_form: Polynomial
    functional_monomial: Tuple[int, ...]
    functional_value: Fraction
    gram: List[List[Fraction]]
    n_plus: int
    n_minus: int
    socle_ok: bool

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dim(self) -> int:
        return len(self.basis)


def _standard_monomials(J: Ideal) -> List[Tuple[int, ...]]:
    """All standard monomials of a zero-dimensional ideal."""
    lts = J.leading_exponents()
    n = J.ring.nvars
    out = []
    stack = [(0,) * n]
    seen = set(stack)
    while stack:
        e = stack.pop()
        if any(all(a <= b for a, b in zip(lt, e)) for lt in lts):
            continue
        out.append(e)
        for i in range(n):
            e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
            if e2 not in seen:
                seen.add(e2)
                stack.append(e2)
    from .polyarith import grevlex_key

    out.sort(key=lambda e: grevlex_key(e, J.ring.weights), reverse=True)
    return out


def _supported_at_origin(J: Ideal, bound: int) -> bool:
    ring = J.ring
    for x in ring.gens():
        p = x
        for _ in range(bound):
            if J.contains(p):
                break
            p = p * x
        else:
            if not J.contains(p):
                return False
    return True


def ev_levine(fs: Sequence[Polynomial]) -> ELForm:
    """Eisenbud-Levine form on P/(fs) for a zero-dimensional sequence supported at 0."""
    fs = tuple(fs)
    ring = fs[0].ring
    if len(fs) != ring.nvars:
        raise GorensteinError(f"need {ring.nvars} elements, got {len(fs)}", "input")
    J = Ideal(ring, fs)
    if J.is_unit():
        raise GorensteinError("the ideal is the whole ring", "zero-dimensional")
    if krull_dimension(J) != 0:
        raise GorensteinError("the sequence does not define a zero-dimensional ideal", "zero-dimensional")
    basis = _standard_monomials(J)
    if not _supported_at_origin(J, len(basis) + 1):
        raise GorensteinError("the zero set is not the origin alone", "support")
    h = jacobian_det(fs)
    nf = J.normal_form(h)
    if not nf:
        raise GorensteinError("Jacobian determinant vanishes in the algebra", "socle")
    lead = _leading_monomial(nf)
    c = nf.coefficient(lead)
    phi_val = 1 / c

    def phi(g: Polynomial) -> Fraction:
        return J.normal_form(g).coefficient(lead) * phi_val

    mons = [ring.monomial(e) for e in basis]
    n = len(mons)
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            G[i][j] = G[j][i] = phi(mons[i] * mons[j])
    p, m, z = signature_exact(G)
    if z:
        raise InternalCheckError("Eisenbud-Levine form is degenerate")
    socle_ok = (not J.contains(h)) and all(J.contains(h * x) for x in ring.gens())
    return ELForm(
        basis,
        [monomial_label(ring, e) for e in basis],
        h,
        nf,
        lead,
        phi_val,
        G,
        p,
        m,
        socle_ok,
    )


def augmented_branch_sequence(fs: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    """(Jac(g), f_1, ..., f_{n-1}) with g = sum x_i^2 and Jac(g) = det(grad g, grad f_i)."""
    fs = tuple(fs)
    ring = fs[0].ring
    n = ring.nvars
    if len(fs) != n - 1:
        raise GorensteinError(f"need {n - 1} equations for a curve in {n} variables", "input")
    g = sum((x * x for x in ring.gens()), ring.zero())
    rows = [list(gradient(g))] + [list(gradient(f)) for f in fs]
    jac = determinant(rows, ring)
    return (jac,) + fs


def real_branches(fs: Sequence[Polynomial]) -> int:
    """Number of real half-branches of the curve germ {fs = 0} at the origin.

    Twice the Eisenbud-Levine signature of P/(Jac(g), f_1, ..., f_{n-1}).
    """
    seq = augmented_branch_sequence(fs)
    try:
        form = ev_levine(seq)
    except GorensteinError as exc:
        raise GorensteinError(f"degenerate Jac(g): {exc}", "degenerate") from exc
    return 2 * form.signature


# ---------------------------------------------------------------------------
# primitive ideal and c_e


def primitive_ideal_truncated(I: Ideal, D: int) -> Dict[int, List[Polynomial]]:
    """Basis of the degree-d piece of {f : f and all partials of f lie in I}, d <= D."""
    ring = I.ring
    out: Dict[int, List[Polynomial]] = {}
    for d in range(D + 1):
        mons = monomials_of_degree(ring.weights, d)
        if not mons:
            out[d] = []
            continue
        rows_t = _aligned_conditions(ring, I, mons, d)
        rows = [list(r) for r in zip(*rows_t)] if rows_t and rows_t[0] else []
        ns = nullspace(rows, len(mons)) if rows else [
            [Fraction(int(i == j)) for j in range(len(mons))] for i in range(len(mons))
        ]
        out[d] = [Polynomial(ring, {mons[k]: v for k, v in enumerate(vec) if v}) for vec in ns]
    return out


def _aligned_conditions(ring: Ring, I: Ideal, mons, d: int) -> List[List[Fraction]]:
    """Per monomial, the concatenated normal forms of m and of its partials."""
    blocks = [(None, d)] + [(v, d - ring.weights[i]) for i, v in enumerate(ring.names)]
    indices = {}
    for _, dd in blocks:
        if dd >= 0 and dd not in indices:
            indices[dd] = _monomial_index(ring, dd)[1]
    cols = []
    for m in mons:
        p = ring.monomial(m)
        col: List[Fraction] = []
        for v, dd in blocks:
            if dd < 0:
                continue
            q = p if v is None else partial(p, v)
            nf = I.normal_form(q) if q else q
            col.extend(_coords(nf, indices[dd]))
        cols.append(col)
    return cols


@dataclass
class CeReport:
    value: int
    per_degree: Dict[int, int]
    stabilized: bool
    bound: int


def c_e(f: Polynomial, I: Ideal, D: int) -> CeReport:
    """dim of (int I)/(int I cap J_f) summed over degrees <= D, with a stabilisation flag."""
    ring = f.ring
    Jf = Ideal(ring, gradient(f))
    prim = primitive_ideal_truncated(I, D)
    per: Dict[int, int] = {}
    from .linalg import rank as _rank

    for d in range(D + 1):
        basis = prim[d]
        if not basis:
            per[d] = 0
            continue
        mons, index = _monomial_index(ring, d)
        jpiece = Jf.piece_basis(d)
        a = [_coords(p, index) for p in basis]
        b = [_coords(p, index) for p in jpiece]
        dim_sum = _rank(a + b) if b else len(a)
        inter = len(a) + len(b) - dim_sum
        per[d] = len(a) - inter
    tail = [per[d] for d in range(max(0, D - max(ring.weights) + 1), D + 1)]
    return CeReport(sum(per.values()), per, not any(tail), D)


# ---------------------------------------------------------------------------
# pencils


@dataclass
class PencilSample:
    t: Fraction
    signature: Optional[int]
    reason: Optional[str] = None


def pencil_signature(
    f: Polynomial, g: Polynomial, samples: Sequence, mode: str = "auto", seed: int = 0
) -> List[PencilSample]:
    """sigma(t f + (1 - t) g) at each sample t; invalid samples carry a reason."""
    out = []
    for t in samples:
        t = Fraction(t)
        F = f * t + g * (1 - t)
        try:
            if not F or not F.is_homogeneous():
                raise GorensteinError("member is not weighted-homogeneous", "inhomogeneous")
            rep = signature(F, mode=mode, seed=seed)
            out.append(PencilSample(t, rep.signature))
        except GorensteinError as exc:
            out.append(PencilSample(t, None, exc.reason))
    return out
