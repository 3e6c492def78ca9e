"""Submodules of graded free modules: Groebner bases, kernels, lifting.

Vectors are engine dicts ``{(component, exps): Fraction}``.  A free module is
described by the list of degree shifts of its basis vectors.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..polyarith import Polynomial, Ring
from .engine import (
    ModuleOrder,
    MonomialOrder,
    Vec,
    buchberger,
    divides,
    leading,
    make_reducer,
)


@lru_cache(maxsize=None)
def monomials_of_degree(weights: Tuple[int, ...], d: int) -> Tuple[Tuple[int, ...], ...]:
    """All exponent tuples of weighted degree ``d``, in a fixed order."""
    n = len(weights)
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    w = weights[0]
    for k in range(d // w + 1):
        for rest in monomials_of_degree(weights[1:], d - k * w):
            out.append((k,) + rest)
    return tuple(out)


def to_vec(entries: Sequence[Polynomial]) -> Vec:
    vec: Vec = {}
    for c, p in enumerate(entries):
        for e, v in p.terms.items():
            vec[(c, e)] = v
    return vec


def poly_to_vec(p: Polynomial, comp: int = 0) -> Vec:
    return {(comp, e): v for e, v in p.terms.items()}


def from_vec(vec: Vec, ring: Ring, rank: int) -> List[Polynomial]:
    parts: List[Dict] = [dict() for _ in range(rank)]
    for (c, e), v in vec.items():
        parts[c][e] = v
    return [Polynomial._raw(ring, t) for t in parts]


def vec_degree(vec: Vec, weights: Sequence[int], shifts: Sequence[int]) -> Optional[int]:
    """Common degree of a homogeneous vector, ``None`` if zero or inhomogeneous."""
    degs = {sum(w * k for w, k in zip(weights, e)) + shifts[c] for (c, e) in vec}
    if len(degs) != 1:
        return None
    return degs.pop()


def vec_add(a: Vec, b: Vec, scale: Fraction = Fraction(1)) -> Vec:
    out = dict(a)
    for t, v in b.items():
        nv = out.get(t, 0) + scale * v
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return out


def vec_mul_poly(vec: Vec, p: Polynomial) -> Vec:
    out: Vec = {}
    for (c, e), v in vec.items():
        for e2, v2 in p.terms.items():
            t = (c, tuple(a + b for a, b in zip(e, e2)))
            nv = out.get(t, 0) + v * v2
            if nv:
                out[t] = nv
            else:
                del out[t]
    return out


def apply_matrix(columns: Sequence[Vec], vec: Vec) -> Vec:
    """Image of a source vector under the map whose j-th column is ``columns[j]``."""
    out: Vec = {}
    for (j, e), v in vec.items():
        for (c, e2), v2 in columns[j].items():
            t = (c, tuple(a + b for a, b in zip(e, e2)))
            nv = out.get(t, 0) + v * v2
            if nv:
                out[t] = nv
            else:
                del out[t]
    return out


def reindex(vec: Vec, offset: int) -> Vec:
    return {(c + offset, e): v for (c, e), v in vec.items()}


def column_degrees(columns: Sequence[Vec], weights, target_shifts) -> List[int]:
    out = []
    for col in columns:
        d = vec_degree(col, weights, target_shifts)
        out.append(0 if d is None else d)
    return out


class Submodule:
    """Submodule N of a graded free module F = sum P(-shift_i), with its GB."""

    def __init__(self, ring: Ring, shifts: Sequence[int], gens: Sequence[Vec], position: str = "top"):
        self.ring = ring
        self.shifts = tuple(shifts)
        self.gens = [dict(g) for g in gens if g]
        self.order = ModuleOrder(MonomialOrder("grevlex", ring.weights), self.shifts, position)
        self._gb: List[Vec] | None = None
        self._reducer = None

    @property
    def rank(self) -> int:
        return len(self.shifts)

    @property
    def gb(self) -> List[Vec]:
        if self._gb is None:
            self._gb = buchberger(self.gens, self.order)
        return self._gb

    def reducer(self):
        if self._reducer is None:
            self._reducer = make_reducer(self.gb, self.order)
        return self._reducer

    def normal_form(self, vec: Vec) -> Vec:
        return self.reducer().reduce(vec)

    def contains(self, vec: Vec) -> bool:
        return not self.normal_form(vec)

    def leading_terms(self) -> List:
        return [leading(g, self.order) for g in self.gb]

    def is_homogeneous(self) -> bool:
        return all(vec_degree(g, self.ring.weights, self.shifts) is not None for g in self.gens)

    def standard_monomials(self, d: int) -> List[Tuple[int, Tuple[int, ...]]]:
        """Terms of degree d of F that are not leading terms of N."""
        lts = self.leading_terms()
        by_comp: Dict[int, list] = {}
        for c, e in lts:
            by_comp.setdefault(c, []).append(e)
        out = []
        for c in range(self.rank):
            divs = by_comp.get(c, [])
            for e in monomials_of_degree(self.ring.weights, d - self.shifts[c]):
                if not any(divides(a, e) for a in divs):
                    out.append((c, e))
        out.sort(key=lambda t: self.order.key(*t), reverse=True)
        return out

    def hilbert_value(self, d: int) -> int:
        return len(self.standard_monomials(d))

    def minimal_generators(self) -> List[Vec]:
        """Minimal homogeneous generators (inputs surviving degree-ordered reduction)."""
        surv: list = []
        buchberger(self.gens, self.order, survivors=surv)
        return [self.gens[i] for i, _ in surv]


def _graph_order(ring: Ring, target_shifts, source_shifts, target_rank: int = 1) -> ModuleOrder:
    shifts = tuple(target_shifts) + tuple(source_shifts)
    ranks = (target_rank,) * len(target_shifts) + (0,) * len(source_shifts)
    return ModuleOrder(MonomialOrder("grevlex", ring.weights), shifts, "block", ranks)


class Lifter:
    """Solve v = sum_j c_j * columns[j] (mod relations) for polynomial c_j.

    The graph module generated by (columns[j], e_j) and (relations[l], 0) is
    put in Groebner form for a block order in which the target components
    dominate; its elements supported in the source block generate the
    kernel of the induced map into the quotient.
    """

    def __init__(
        self,
        ring: Ring,
        columns: Sequence[Vec],
        target_shifts: Sequence[int],
        source_shifts: Sequence[int] | None = None,
        relations: Sequence[Vec] = (),
    ):
        self.ring = ring
        self.columns = [dict(c) for c in columns]
        self.target_shifts = tuple(target_shifts)
        if source_shifts is None:
            source_shifts = column_degrees(self.columns, ring.weights, self.target_shifts)
        self.source_shifts = tuple(source_shifts)
        r = len(self.target_shifts)
        self.r = r
        self.order = _graph_order(ring, self.target_shifts, self.source_shifts)
        gens = []
        for j, col in enumerate(self.columns):
            g = dict(col)
            g[(r + j, (0,) * ring.nvars)] = Fraction(1)
            gens.append(g)
        gens.extend(dict(rel) for rel in relations if rel)
        self.gb = buchberger(gens, self.order)
        self._red = make_reducer(self.gb, self.order)

    def lift(self, vec: Vec) -> Optional[Vec]:
        """Source coordinates of a preimage of ``vec``, or None if there is none."""
        rem = self._red.reduce(vec, ranks_above=0)
        r = self.r
        out: Vec = {}
        for (c, e), v in rem.items():
            if c < r:
                return None
            out[(c - r, e)] = -v
        return out

    def kernel(self) -> List[Vec]:
        """Groebner basis (source order) of the kernel of the map into F/relations."""
        r = self.r
        out = []
        for g in self.gb:
            c, _ = leading(g, self.order)
            if c >= r:
                out.append(reindex(g, -r))
        return out


def kernel(
    ring: Ring,
    columns: Sequence[Vec],
    target_shifts: Sequence[int],
    source_shifts: Sequence[int] | None = None,
    relations: Sequence[Vec] = (),
    minimal: bool = True,
) -> Tuple[List[Vec], Tuple[int, ...]]:
    """Generators of ker(P^k -> F/relations) and the source shifts used."""
    lf = Lifter(ring, columns, target_shifts, source_shifts, relations)
    ker = lf.kernel()
    if minimal and ker:
        ker = Submodule(ring, lf.source_shifts, ker).minimal_generators()
    return ker, lf.source_shifts
