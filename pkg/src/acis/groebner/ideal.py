"""Ideals of a weighted polynomial ring and their standard operations."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..polyarith import Polynomial, Ring
from .engine import MonomialOrder, buchberger as _buchberger, ideal_order, leading, make_reducer
from .modules import Lifter, kernel, monomials_of_degree, poly_to_vec


class HilbertData:
    """Dimensions of graded pieces, indexed by degree."""

    def __init__(self, values: Dict[int, int], finite: bool = False, window: Tuple[int, int] | None = None):
        self.values = {d: int(v) for d, v in sorted(values.items())}
        self.finite = finite
        self.window = window

    def __getitem__(self, d: int) -> int:
        return self.values.get(d, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertData):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self[d] == other[d] for d in keys)

    def support(self) -> List[int]:
        return [d for d, v in self.values.items() if v]

    def total(self) -> int:
        return sum(self.values.values())

    def shifted(self, k: int) -> "HilbertData":
        return HilbertData({d + k: v for d, v in self.values.items()}, self.finite)

    def is_symmetric(self, center2: int | None = None) -> bool:
        """Symmetry d <-> center2 - d; default center is that of the support."""
        sup = self.support()
        if not sup:
            return True
        if center2 is None:
            center2 = sup[0] + sup[-1]
        return all(self[d] == self[center2 - d] for d in sup)

    def polynomial(self, var: str = "t") -> str:
        parts = []
        for d, v in self.values.items():
            if not v:
                continue
            if d == 0:
                mono = str(v)
            else:
                power = var if d == 1 else f"{var}^{d}"
                mono = power if v == 1 else f"{v}{power}"
            parts.append(mono)
        return "+".join(parts) if parts else "0"

    def as_dict(self) -> Dict[str, int]:
        return {str(d): v for d, v in self.values.items() if v}

    def __repr__(self) -> str:
        return f"HilbertData({self.polynomial()})"


def grevlex(ring: Ring) -> MonomialOrder:
    return MonomialOrder("grevlex", ring.weights)


class Ideal:
    """An ideal with a lazily computed reduced Groebner basis (weighted grevlex)."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial]):
        self.ring = ring
        gens = [g for g in gens if g]
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.gens = tuple(gens)
        self.order = ideal_order(grevlex(ring))
        self._gb: Optional[Tuple[Polynomial, ...]] = None
        self._red = None

    @classmethod
    def from_strings(cls, ring: Ring, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring(t) for t in texts])

    @classmethod
    def maximal(cls, ring: Ring) -> "Ideal":
        return cls(ring, ring.gens())

    # -- Groebner data -------------------------------------------------
    @property
    def basis(self) -> Tuple[Polynomial, ...]:
        if self._gb is None:
            vecs = _buchberger([poly_to_vec(g) for g in self.gens], self.order)
            self._gb = tuple(_vec_to_poly(v, self.ring) for v in vecs)
        return self._gb

    def _reducer(self):
        if self._red is None:
            self._red = make_reducer([poly_to_vec(g) for g in self.basis], self.order)
        return self._red

    def normal_form(self, p: Polynomial) -> Polynomial:
        return _vec_to_poly(self._reducer().reduce(poly_to_vec(p)), self.ring)

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def leading_exponents(self) -> List[Tuple[int, ...]]:
        return [leading(poly_to_vec(g), self.order)[1] for g in self.basis]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def power(self, k: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return Ideal(self.ring, minimal_generators(out))

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self.gens)})"

    # -- graded pieces ------------------------------------------------
    def kbase(self, d: int) -> List[Tuple[int, ...]]:
        """Standard monomials of degree d (not in the leading-term ideal), grevlex descending."""
        lts = self.leading_exponents()
        out = [
            e
            for e in monomials_of_degree(self.ring.weights, d)
            if not any(all(a <= b for a, b in zip(lt, e)) for lt in lts)
        ]
        w = self.ring.weights
        out.sort(key=lambda e: self.order.key(0, e), reverse=True)
        return out

    def hilbert_value(self, d: int) -> int:
        return len(self.kbase(d))

    def hilbert(self, degrees: Iterable[int]) -> HilbertData:
        """Hilbert function of P/self on the given degrees."""
        if not self.is_homogeneous():
            raise ValueError("Hilbert function needs homogeneous generators")
        degrees = list(degrees)
        vals = {d: self.hilbert_value(d) for d in degrees}
        return HilbertData(vals, window=(min(degrees), max(degrees)) if degrees else None)

    def piece_basis(self, d: int) -> List[Polynomial]:
        """A vector-space basis of the degree-d piece of the ideal, in echelon form."""
        from ..linalg import rref

        mons = monomials_of_degree(self.ring.weights, d)
        index = {m: i for i, m in enumerate(mons)}
        rows = []
        for g in self.basis:
            k = d - g.degree()
            if k < 0:
                continue
            for m in monomials_of_degree(self.ring.weights, k):
                row = [Fraction(0)] * len(mons)
                for e, c in g.terms.items():
                    row[index[tuple(a + b for a, b in zip(e, m))]] = c
                rows.append(row)
        if not rows:
            return []
        R, _ = rref(rows)
        return [Polynomial(self.ring, {mons[i]: v for i, v in enumerate(row) if v}) for row in R]

    # -- operations ----------------------------------------------------
    def colon(self, g: Polynomial) -> "Ideal":
        return colon(self, g)

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        return colon_ideal(self, other)

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def saturate(self) -> "Ideal":
        return saturate_irrelevant(self)[0]

    def krull_dimension(self) -> int:
        return krull_dimension(self)


def _vec_to_poly(vec, ring: Ring) -> Polynomial:
    return Polynomial._raw(ring, {e: v for (_, e), v in vec.items()})


def buchberger(gens: Sequence[Polynomial], ring: Ring | None = None) -> List[Polynomial]:
    """Reduced grevlex Groebner basis of polynomial generators."""
    if ring is None:
        ring = gens[0].ring
    return list(Ideal(ring, gens).basis)


def normal_form(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Normal form with respect to a grevlex Groebner basis."""
    ring = p.ring
    order = ideal_order(grevlex(ring))
    red = make_reducer([poly_to_vec(g) for g in basis if g], order)
    return _vec_to_poly(red.reduce(poly_to_vec(p)), ring)


def minimal_generators(J: Ideal) -> List[Polynomial]:
    from .modules import Submodule

    if not J.gens:
        return []
    sub = Submodule(J.ring, (0,), [poly_to_vec(g) for g in J.gens])
    if not J.is_homogeneous():
        return list(J.basis)
    return [_vec_to_poly(v, J.ring) for v in sub.minimal_generators()]


def syzygies(gens: Sequence[Polynomial]) -> Tuple[List[List[Polynomial]], Tuple[int, ...]]:
    """Minimal generators of the first syzygy module of ``gens`` and the source shifts."""
    ring = gens[0].ring
    cols = [poly_to_vec(g) for g in gens]
    shifts = [g.degree() if g else 0 for g in gens]
    ker, src = kernel(ring, cols, (0,), shifts)
    from .modules import from_vec

    return [from_vec(v, ring, len(gens)) for v in ker], src


def colon(J: Ideal, g: Polynomial) -> Ideal:
    """J : g = {p : p g in J}."""
    ring = J.ring
    if not g:
        return Ideal(ring, [ring.one()])
    lf = Lifter(ring, [poly_to_vec(g)], (0,), (g.degree(),), [poly_to_vec(j) for j in J.gens])
    gens = [_vec_to_poly(v, ring) for v in lf.kernel()]
    return Ideal(ring, gens)


def colon_ideal(J: Ideal, K: Ideal) -> Ideal:
    """J : K = {p : p K in J}, the intersection of the colons J : k over generators k."""
    ring = J.ring
    out = None
    for k in K.gens:
        part = colon(J, k)
        out = part if out is None else intersect(out, part)
    if out is None:
        return Ideal(ring, [ring.one()])
    return Ideal(ring, out.basis)


def intersect(A: Ideal, B: Ideal) -> Ideal:
    ring = A.ring
    gens = []
    for a in A.gens:
        v = poly_to_vec(a, 0)
        v.update(poly_to_vec(a, 1))
        gens.append(v)
    gens.extend(poly_to_vec(b, 0) for b in B.gens)
    from .engine import ModuleOrder

    order = ModuleOrder(grevlex(ring), (0, 0), "block", (1, 0))
    out = []
    for g in _buchberger(gens, order):
        if leading(g, order)[0] == 1:
            out.append(Polynomial._raw(ring, {e: v for (c, e), v in g.items()}))
    return Ideal(ring, out)


def saturate_irrelevant(J: Ideal) -> Tuple[Ideal, int]:
    """J : m^infinity by iterated colon with m; returns the ideal and the number of steps.

    The count is the number of colon steps that enlarged the ideal.
    """
    m = Ideal.maximal(J.ring)
    cur = J
    steps = 0
    while True:
        nxt = colon_ideal(cur, m)
        if nxt == cur:
            return Ideal(J.ring, minimal_generators(cur)) if cur.is_homogeneous() else cur, steps
        cur = nxt
        steps += 1


def krull_dimension(J: Ideal) -> int:
    """Dimension of P/J from a maximal independent set modulo the leading ideal (-1 if J = P)."""
    if J.is_unit():
        return -1
    n = J.ring.nvars
    supports = [frozenset(i for i, k in enumerate(e) if k) for e in J.leading_exponents()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = frozenset(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def eliminate(J: Ideal, names: Sequence[str]) -> Ideal:
    """J intersected with the subring of the variables not in ``names``."""
    ring = J.ring
    elim = [ring.index(n) for n in names]
    keep = [i for i in range(ring.nvars) if i not in elim]
    perm = elim + keep
    w = tuple(ring.weights[i] for i in perm)
    mono = MonomialOrder("elim", w, (len(elim), len(keep)))
    order = ideal_order(mono)

    def permute(e):
        return tuple(e[i] for i in perm)

    inv = [0] * len(perm)
    for pos, i in enumerate(perm):
        inv[i] = pos
    vecs = [{(0, permute(e)): v for e, v in g.terms.items()} for g in J.gens]
    out = []
    for g in _buchberger(vecs, order):
        if all(not any(e[: len(elim)]) for (_, e) in g):
            out.append(Polynomial._raw(ring, {tuple(e[inv[i]] for i in range(len(perm))): v for (_, e), v in g.items()}))
    return Ideal(ring, out)


def hilbert(J: Ideal, degrees: Iterable[int]) -> HilbertData:
    return J.hilbert(degrees)


def kbase(J: Ideal, d: int) -> List[Tuple[int, ...]]:
    return J.kbase(d)
