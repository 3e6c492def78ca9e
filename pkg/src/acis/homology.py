"""Graded free complexes, Koszul complexes, resolutions, Ext and chain lifts.

A map between free modules is stored as its list of columns: column ``b`` is
the image of the ``b``-th basis vector, an engine vector
``{(component, exps): Fraction}`` in the target.  Complexes are homological,
``d[p]: C_p -> C_{p-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .groebner.ideal import HilbertData, Ideal
from .groebner.modules import (
    Lifter,
    Submodule,
    apply_matrix,
    kernel,
    poly_to_vec,
    vec_add,
    vec_degree,
)
from .groebner.oracle import koszul_dimensions
from .polyarith import Polynomial, Ring

Columns = List[dict]


class HomologyError(RuntimeError):
    pass


class LiftError(HomologyError):
    """A required preimage does not exist (the map to lift is not a module map)."""


class ResolutionTooLong(HomologyError):
    pass


def _zero_exps(ring: Ring):
    return (0,) * ring.nvars


def transpose_columns(cols: Columns, nrows: int) -> Columns:
    """Columns of the transposed matrix (entries are polynomials, so no duality twist)."""
    out: Columns = [dict() for _ in range(nrows)]
    for b, col in enumerate(cols):
        for (a, e), v in col.items():
            out[a][(b, e)] = v
    return out


def compose(outer: Columns, inner: Columns) -> Columns:
    return [apply_matrix(outer, col) for col in inner]


def entry(cols: Columns, row: int, col: int, ring: Ring) -> Polynomial:
    return Polynomial._raw(ring, {e: v for (a, e), v in cols[col].items() if a == row})


class FreeComplex:
    """A bounded complex of graded free modules F_lo..F_hi."""

    def __init__(self, ring: Ring, shifts: Dict[int, Sequence[int]], maps: Dict[int, Columns]):
        self.ring = ring
        self.shifts = {p: tuple(s) for p, s in shifts.items()}
        self.maps = {p: [dict(c) for c in cols] for p, cols in maps.items()}
        self._lifters: Dict[int, Lifter] = {}
        for p, cols in self.maps.items():
            if len(cols) != self.rank(p):
                raise ValueError(f"d_{p} has {len(cols)} columns for rank {self.rank(p)}")

    @property
    def indices(self) -> List[int]:
        return sorted(self.shifts)

    @property
    def length(self) -> int:
        nz = [p for p in self.indices if self.rank(p)]
        return max(nz) - min(nz) if nz else 0

    def rank(self, p: int) -> int:
        return len(self.shifts.get(p, ()))

    def ranks(self) -> Dict[int, int]:
        return {p: self.rank(p) for p in self.indices}

    def d(self, p: int) -> Columns:
        if p in self.maps:
            return self.maps[p]
        return [dict() for _ in range(self.rank(p))]

    def lifter(self, p: int) -> Lifter:
        """Cached division structure for solving d_p(u) = v."""
        if p not in self._lifters:
            self._lifters[p] = Lifter(self.ring, self.d(p), self.shifts[p - 1], self.shifts[p])
        return self._lifters[p]

    def matrix(self, p: int) -> List[List[Polynomial]]:
        """Rows indexed by the basis of C_{p-1}, columns by the basis of C_p."""
        cols = self.d(p)
        return [[entry(cols, a, b, self.ring) for b in range(len(cols))] for a in range(self.rank(p - 1))]

    def d_squared_zero(self) -> bool:
        for p in self.indices:
            if self.rank(p) and self.rank(p - 1) and self.rank(p - 2):
                for col in compose(self.d(p - 1), self.d(p)):
                    if col:
                        return False
        return True

    def is_graded(self) -> bool:
        w = self.ring.weights
        for p, cols in self.maps.items():
            tgt = self.shifts.get(p - 1, ())
            for b, col in enumerate(cols):
                if col and vec_degree(col, w, tgt) != self.shifts[p][b]:
                    return False
        return True

    def betti(self) -> Dict[int, Dict[int, int]]:
        out: Dict[int, Dict[int, int]] = {}
        for p in self.indices:
            row: Dict[int, int] = {}
            for s in self.shifts[p]:
                row[s] = row.get(s, 0) + 1
            out[p] = row
        return out

    def dual(self) -> "FreeComplex":
        """Hom(-, P) re-indexed homologically: position -p holds F_p^*."""
        shifts = {-p: tuple(-s for s in self.shifts[p]) for p in self.indices}
        maps = {}
        for p in self.indices:
            if p in self.maps and self.rank(p - 1):
                # d_p^*: F_{p-1}^* -> F_p^*, sitting at position -(p-1) -> -p
                maps[-(p - 1)] = transpose_columns(self.d(p), self.rank(p - 1))
        for q in shifts:
            if q not in maps:
                maps[q] = [dict() for _ in range(len(shifts[q]))]
        return FreeComplex(self.ring, shifts, maps)

    def homology_dimensions(self, degrees: Sequence[int]) -> Dict[int, Dict[int, int]]:
        """dim_Q H_p in each degree, by dense linear algebra on the graded pieces."""
        from .linalg import rank
        from .groebner.modules import monomials_of_degree

        w = self.ring.weights
        out: Dict[int, Dict[int, int]] = {p: {} for p in self.indices}
        for deg in degrees:
            bases = {}
            for p in self.indices:
                bases[p] = [
                    (b, m)
                    for b, s in enumerate(self.shifts[p])
                    for m in monomials_of_degree(w, deg - s)
                ]
            ranks = {}
            for p in self.indices:
                if p - 1 not in bases or not bases[p] or not bases[p - 1]:
                    ranks[p] = 0
                    continue
                index = {t: i for i, t in enumerate(bases[p - 1])}
                rows = []
                cols = self.d(p)
                for b, m in bases[p]:
                    row = [0] * len(bases[p - 1])
                    for (a, e), v in cols[b].items():
                        row[index[(a, tuple(x + y for x, y in zip(e, m)))]] += v
                    rows.append(row)
                ranks[p] = rank(rows)
            for p in self.indices:
                out[p][deg] = len(bases[p]) - ranks[p] - ranks.get(p + 1, 0)
        return out

    def __repr__(self) -> str:
        return f"FreeComplex(ranks={self.ranks()})"


@dataclass
class GradedModulePresentation:
    """coker(relations) for a graded free module with the given generator degrees."""

    ring: Ring
    degrees: Tuple[int, ...]
    relations: List[dict]
    lifts: Optional[list] = None

    def __post_init__(self):
        self.degrees = tuple(self.degrees)
        self.relations = [dict(r) for r in self.relations if r]
        self._sub = None

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def submodule(self) -> Submodule:
        if self._sub is None:
            self._sub = Submodule(self.ring, self.degrees, self.relations)
        return self._sub

    def hilbert(self, degrees: Sequence[int]) -> HilbertData:
        if not self.submodule().is_homogeneous():
            raise ValueError("Hilbert function needs a graded presentation")
        sub = self.submodule()
        return HilbertData({d: sub.hilbert_value(d) for d in degrees})

    def kbase(self, d: int):
        return self.submodule().standard_monomials(d)

    def is_zero(self) -> bool:
        sub = self.submodule()
        one = _zero_exps(self.ring)
        return all(sub.contains({(c, one): Fraction(1)}) for c in range(self.rank))

    @classmethod
    def quotient_ring(cls, J: Ideal) -> "GradedModulePresentation":
        return cls(J.ring, (0,), [poly_to_vec(g) for g in J.gens])

    @classmethod
    def ideal_quotient(cls, I: Ideal, J: Ideal) -> "GradedModulePresentation":
        """I/J presented on generators of I, with generator lifts kept."""
        ring = I.ring
        gens = [g for g in I.gens]
        cols = [poly_to_vec(g) for g in gens]
        rels, src = kernel(ring, cols, (0,), [g.degree() for g in gens], [poly_to_vec(j) for j in J.gens])
        return cls(ring, src, rels, lifts=gens)


# -- Koszul -----------------------------------------------------------------


def koszul_basis(n: int, p: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(n), p))


def koszul_complex(fs: Sequence[Polynomial]) -> FreeComplex:
    """K(f): K_p = wedge^p P^n, d(e_I) = sum_j (-1)^(j+1) f_{i_j} e_{I - i_j} (j counted from 1)."""
    ring = fs[0].ring
    n = len(fs)
    degs = [f.degree() if f else 0 for f in fs]
    shifts = {}
    maps = {}
    for p in range(n + 1):
        basis = koszul_basis(n, p)
        shifts[p] = tuple(sum(degs[i] for i in I) for I in basis)
        if p == 0:
            continue
        index = {I: k for k, I in enumerate(koszul_basis(n, p - 1))}
        cols = []
        for I in basis:
            col: dict = {}
            for j, i in enumerate(I):
                sign = 1 if j % 2 == 0 else -1
                tgt = index[I[:j] + I[j + 1 :]]
                for e, v in fs[i].terms.items():
                    t = (tgt, e)
                    nv = col.get(t, 0) + sign * v
                    if nv:
                        col[t] = nv
                    else:
                        col.pop(t, None)
            cols.append(col)
        maps[p] = cols
    maps[0] = [dict()]
    return FreeComplex(ring, shifts, maps)


def koszul_homology(fs: Sequence[Polynomial], k: int, degrees: Sequence[int] = ()):
    """H_k(f) as a presented module, with per-degree dimensions from the oracle.

    Returns ``(HilbertData, GradedModulePresentation)``.  The presentation's
    generators are cycles of K_k (kept in ``lifts``).
    """
    K = koszul_complex(fs)
    ring = K.ring
    n = len(fs)
    if k < 0 or k > n:
        raise ValueError("k out of range")
    if k == 0:
        cycles = [{(0, _zero_exps(ring)): Fraction(1)}]
        zshifts: Tuple[int, ...] = (0,)
    else:
        cycles, zshifts = kernel(ring, K.d(k), K.shifts[k - 1], K.shifts[k])
    bounds = K.d(k + 1) if k < n else []
    if cycles:
        rels, src = kernel(ring, cycles, K.shifts[k], None, bounds)
    else:
        rels, src = [], ()
    pres = GradedModulePresentation(ring, src, rels, lifts=cycles)
    dims = koszul_dimensions(list(fs), list(degrees))[k] if degrees else {}
    return HilbertData(dims), pres


def shuffle_sign(I: Sequence[int], J: Sequence[int]) -> int:
    """Sign of the permutation (I, J) of 0..n-1 (I, J sorted, complementary)."""
    seq = list(I) + list(J)
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


def alpha_matrix(n: int, p: int) -> List[Tuple[int, int, int]]:
    """alpha_p: K_p -> (K_{n-p})^*, e_I -> sign(I, I^c) phi_{I^c}; as (source, target, sign)."""
    tgt = {J: k for k, J in enumerate(koszul_basis(n, n - p))}
    out = []
    for s, I in enumerate(koszul_basis(n, p)):
        J = tuple(i for i in range(n) if i not in I)
        out.append((s, tgt[J], shuffle_sign(I, J)))
    return out


@dataclass
class SelfDualityReport:
    holds: bool
    signs: Dict[int, int] = field(default_factory=dict)


def self_duality_check(fs: Sequence[Polynomial]) -> SelfDualityReport:
    """Check alpha_{p-1} d_p = eps_p (d_{n-p+1})^T alpha_p at the matrix level.

    Returns the sign eps_p for each p (it is (-1)^(p+1) with the conventions
    used here) and whether a uniform sign exists for every p.
    """
    K = koszul_complex(fs)
    ring = K.ring
    n = len(fs)
    signs: Dict[int, int] = {}
    ok = True
    for p in range(1, n + 1):
        # left: alpha_{p-1} o d_p as map K_p -> K_{n-p+1}^*
        a_prev = {s: (t, sg) for s, t, sg in alpha_matrix(n, p - 1)}
        left = []
        for col in K.d(p):
            out: dict = {}
            for (a, e), v in col.items():
                t, sg = a_prev[a]
                out[(t, e)] = out.get((t, e), 0) + sg * v
            left.append({k: v for k, v in out.items() if v})
        # right: (d_{n-p+1})^T o alpha_p
        dT = transpose_columns(K.d(n - p + 1), K.rank(n - p))
        right = []
        for s, t, sg in alpha_matrix(n, p):
            right.append({k: sg * v for k, v in dT[t].items()})
        eps = None
        for lc, rc in zip(left, right):
            if not lc and not rc:
                continue
            if lc == rc:
                cand = 1
            elif lc == {k: -v for k, v in rc.items()}:
                cand = -1
            else:
                ok = False
                break
            if eps is None:
                eps = cand
            elif eps != cand:
                ok = False
        signs[p] = eps if eps is not None else 1
    return SelfDualityReport(ok, signs)


# -- resolutions -------------------------------------------------------------


def minimize_complex(C: FreeComplex) -> FreeComplex:
    """Split off unit entries of the differentials (Gaussian elimination of complexes)."""
    ring = C.ring
    shifts = {p: list(s) for p, s in C.shifts.items()}
    maps = {p: [dict(c) for c in C.d(p)] for p in C.indices}
    one = _zero_exps(ring)
    changed = True
    while changed:
        changed = False
        for p in sorted(maps):
            cols = maps[p]
            hit = None
            for b, col in enumerate(cols):
                for (a, e), v in col.items():
                    if e == one:
                        hit = (a, b, v)
                        break
                if hit:
                    break
            if not hit:
                continue
            a, b, u = hit
            col_b = cols[b]
            new_cols = []
            for b2, col in enumerate(cols):
                if b2 == b:
                    continue
                row_entry = {e: v for (a2, e), v in col.items() if a2 == a}
                upd = dict(col)
                if row_entry:
                    for e1, v1 in row_entry.items():
                        for (a3, e3), v3 in col_b.items():
                            t = (a3, tuple(x + y for x, y in zip(e1, e3)))
                            nv = upd.get(t, 0) - v1 * v3 / u
                            if nv:
                                upd[t] = nv
                            else:
                                upd.pop(t, None)
                new_cols.append({(_drop(a3, a), e): v for (a3, e), v in upd.items() if a3 != a})
            maps[p] = new_cols
            del shifts[p][b]
            del shifts[p - 1][a]
            if p + 1 in maps:
                maps[p + 1] = [
                    {(_drop(r, b), e): v for (r, e), v in col.items() if r != b} for col in maps[p + 1]
                ]
            if p - 1 in maps:
                del maps[p - 1][a]
            changed = True
            break
    return FreeComplex(ring, {p: tuple(s) for p, s in shifts.items()}, maps)


def _drop(i: int, removed: int) -> int:
    return i - 1 if i > removed else i


def free_resolution(
    M: GradedModulePresentation, max_length: int | None = None, minimize: bool = True
) -> FreeComplex:
    """Free resolution F of coker(relations) by iterated kernels.

    Each kernel is generated minimally; with ``minimize`` the first map is
    also minimized by splitting off unit entries.  The loop stops at the
    first zero kernel; more than ``max_length`` steps raises.
    """
    ring = M.ring
    if max_length is None:
        max_length = ring.nvars + 1
    shifts = {0: tuple(M.degrees)}
    maps: Dict[int, Columns] = {0: [dict() for _ in M.degrees]}
    cols = [dict(r) for r in M.relations]
    w = ring.weights
    p = 1
    while cols:
        if p > max_length:
            raise ResolutionTooLong(f"resolution longer than {max_length}")
        src = tuple(vec_degree(c, w, shifts[p - 1]) for c in cols)
        if any(s is None for s in src):
            raise ValueError("inhomogeneous map in resolution")
        shifts[p] = src
        maps[p] = cols
        ker, _ = kernel(ring, cols, shifts[p - 1], src)
        cols = ker
        p += 1
    shifts[p] = ()
    maps[p] = []
    C = FreeComplex(ring, shifts, maps)
    if minimize:
        C = minimize_complex(C)
    return _trim(C)


def _trim(C: FreeComplex) -> FreeComplex:
    top = max([p for p in C.indices if C.rank(p)], default=0)
    shifts = {p: s for p, s in C.shifts.items() if p <= top}
    maps = {p: c for p, c in C.maps.items() if p <= top}
    return FreeComplex(C.ring, shifts, maps)


def resolve_quotient(J: Ideal, minimize: bool = True) -> FreeComplex:
    """Resolution of P/J with d_1 = the generators of J in the given order."""
    return free_resolution(GradedModulePresentation.quotient_ring(J), minimize=minimize)


def ext_module(M: GradedModulePresentation, k: int, resolution: FreeComplex | None = None) -> GradedModulePresentation:
    """Ext^k(M, P) = ker(d_{k+1}^*) / im(d_k^*) on the dual of a resolution.

    The generators are cycles of F_k^* (kept in ``lifts``); generator
    degrees follow the dual grading, where F_k^* has shifts -shift(F_k).
    """
    F = resolution if resolution is not None else free_resolution(M)
    ring = M.ring
    if k < 0 or F.rank(k) == 0:
        return GradedModulePresentation(ring, (), [], lifts=[])
    dual_k = tuple(-s for s in F.shifts[k])
    if F.rank(k + 1):
        dual_next = tuple(-s for s in F.shifts[k + 1])
        # columns of d_{k+1}^*: images of the basis of F_k^* in F_{k+1}^*
        dstar = transpose_columns(F.d(k + 1), F.rank(k))
        cycles, _ = kernel(ring, dstar, dual_next, dual_k)
    else:
        cycles = [{(a, _zero_exps(ring)): Fraction(1)} for a in range(F.rank(k))]
    bounds = transpose_columns(F.d(k), F.rank(k - 1)) if k >= 1 and F.rank(k - 1) else []
    if not cycles:
        return GradedModulePresentation(ring, (), [], lifts=[])
    rels, src = kernel(ring, cycles, dual_k, None, bounds)
    return GradedModulePresentation(ring, src, rels, lifts=cycles)


# -- chain maps ---------------------------------------------------------------


@dataclass
class ComparisonLift:
    source: FreeComplex
    target: FreeComplex
    maps: Dict[int, Columns]

    def commutes(self) -> bool:
        for p in self.maps:
            if p == 0 or p - 1 not in self.maps:
                continue
            left = compose(self.target.d(p), self.maps[p])
            right = compose(self.maps[p - 1], self.source.d(p))
            if left != right:
                return False
        return True


def lift_map(
    source: FreeComplex,
    target: FreeComplex,
    phi0: Columns,
    top: int | None = None,
) -> ComparisonLift:
    """Chain map c with c_0 = phi0 and d c_p = c_{p-1} d, by division.

    ``phi0`` maps the basis of source_0 into target_0; it must send the
    image of d_1 into the image of d_1.  Raises :class:`LiftError` otherwise.
    """
    ring = source.ring
    if top is None:
        top = max(source.indices)
    maps = {0: [dict(c) for c in phi0]}
    for p in range(1, top + 1):
        if source.rank(p) == 0:
            break
        if target.rank(p) == 0:
            imgs = compose(maps[p - 1], source.d(p))
            if any(imgs):
                raise LiftError(f"no target module at position {p}")
            maps[p] = [dict() for _ in range(source.rank(p))]
            continue
        lf = target.lifter(p)
        cols = []
        for b, col in enumerate(source.d(p)):
            v = apply_matrix(maps[p - 1], col)
            if not v:
                cols.append({})
                continue
            u = lf.lift(v)
            if u is None:
                raise LiftError(f"cannot lift at position {p}, basis element {b}")
            cols.append(u)
        maps[p] = cols
    return ComparisonLift(source, target, maps)
