"""Buchberger's algorithm for submodules of graded free modules over Q[x].

Elements are plain dicts ``{(component, exponents): Fraction}``.  Ideals are
the special case of a rank one free module (component always 0).  Orders are
given by :class:`ModuleOrder`, whose ``key`` maps a term to a tuple of ints;
larger tuples are larger terms.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Exps = Tuple[int, ...]
Term = Tuple[int, Exps]
Vec = Dict[Term, Fraction]


def _to_q(vec: Vec) -> Vec:
    return {t: _Q(v.numerator, v.denominator) for t, v in vec.items() if v}


def _to_fraction(vec: Vec) -> Vec:
    return {t: Fraction(int(v.numerator), int(v.denominator)) for t, v in vec.items()}


class GroebnerError(RuntimeError):
    """Raised when a computation exceeds its configured limits."""


class DegreeCapExceeded(GroebnerError):
    pass


class MonomialOrder:
    """A global monomial order on exponent tuples.

    kind is one of ``grevlex`` (weighted by the ring weights), ``lex`` or
    ``elim`` (blocks of variables, each block weighted-grevlex, earlier
    blocks dominate).
    """

    __slots__ = ("kind", "weights", "blocks", "_bounds")

    def __init__(self, kind: str, weights: Sequence[int], blocks: Sequence[int] | None = None):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.weights = tuple(weights)
        if kind == "elim":
            if not blocks or sum(blocks) != len(self.weights):
                raise ValueError("elimination order needs block sizes summing to nvars")
            self.blocks = tuple(blocks)
            bounds, start = [], 0
            for b in blocks:
                bounds.append((start, start + b))
                start += b
            self._bounds = tuple(bounds)
        else:
            self.blocks = None
            self._bounds = None

    def degree(self, e: Exps) -> int:
        d = 0
        for w, k in zip(self.weights, e):
            d += w * k
        return d

    def key(self, e: Exps) -> tuple:
        if self.kind == "grevlex":
            return (self.degree(e),) + tuple(-k for k in reversed(e))
        if self.kind == "lex":
            return e
        out: tuple = ()
        w = self.weights
        for lo, hi in self._bounds:
            d = sum(w[i] * e[i] for i in range(lo, hi))
            out += (d,) + tuple(-e[i] for i in range(hi - 1, lo - 1, -1))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.weights == other.weights
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.weights, self.blocks))

    def __repr__(self) -> str:
        extra = f", blocks={self.blocks}" if self.blocks else ""
        return f"MonomialOrder({self.kind}{extra})"


class ModuleOrder:
    """Order on terms x^a e_i of a graded free module.

    ``shifts[i]`` is the degree of the basis vector e_i.  ``position`` is
    ``top`` (term over position), ``pot`` (position over term) or ``block``:
    components carry an integer rank (``ranks[i]``), higher ranks dominate,
    and inside a rank terms are compared term-over-position.  ``schreyer``
    gives the order induced by leading terms ``lead[i]`` of a map's columns.
    """

    __slots__ = ("mono", "shifts", "position", "ranks", "lead", "_lead_keys", "_memo")

    def __init__(
        self,
        mono: MonomialOrder,
        shifts: Sequence[int] = (0,),
        position: str = "top",
        ranks: Sequence[int] | None = None,
        lead: Sequence[Term] | None = None,
        lead_order: "ModuleOrder | None" = None,
    ):
        if position not in ("top", "pot", "block", "schreyer"):
            raise ValueError(f"unknown position policy {position!r}")
        self.mono = mono
        self.shifts = tuple(shifts)
        self.position = position
        self.ranks = tuple(ranks) if ranks is not None else None
        if position == "block" and (self.ranks is None or len(self.ranks) != len(self.shifts)):
            raise ValueError("block order needs one rank per component")
        self.lead = tuple(lead) if lead is not None else None
        self._lead_keys = None
        if position == "schreyer":
            if self.lead is None or lead_order is None:
                raise ValueError("schreyer order needs leading terms and their order")
            self._lead_keys = (lead_order, self.lead)
        self._memo: Dict[Term, tuple] = {}

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def degree(self, t: Term) -> int:
        c, e = t
        return self.mono.degree(e) + self.shifts[c]

    def key(self, c: int, e: Exps) -> tuple:
        t = (c, e)
        k = self._memo.get(t)
        if k is None:
            k = self._key(c, e)
            k = self._memo[t] = (k, _neg(k))
        return k[0]

    def negkey(self, t: Term) -> tuple:
        """Negated key, for min-heaps (memoised together with the key)."""
        k = self._memo.get(t)
        if k is None:
            self.key(*t)
            k = self._memo[t]
        return k[1]

    def _key(self, c: int, e: Exps) -> tuple:
        pos = self.position
        if pos == "top":
            return (self.mono.degree(e) + self.shifts[c],) + self.mono.key(e) + (-c,)
        if pos == "block":
            return (self.ranks[c], self.mono.degree(e) + self.shifts[c]) + self.mono.key(e) + (-c,)
        if pos == "pot":
            return (-c, self.mono.degree(e)) + self.mono.key(e)
        lead_order, lead = self._lead_keys
        lc, le = lead[c]
        prod = tuple(a + b for a, b in zip(e, le))
        return lead_order.key(lc, prod) + (-c,)

    def __repr__(self) -> str:
        return f"ModuleOrder({self.mono.kind}, {self.position}, shifts={self.shifts})"


def ideal_order(mono: MonomialOrder) -> ModuleOrder:
    return ModuleOrder(mono, (0,), "top")


# ---------------------------------------------------------------------------
# element helpers


def leading(vec: Vec, order: ModuleOrder) -> Optional[Term]:
    best = None
    bestkey = None
    key = order.key
    for t in vec:
        k = key(t[0], t[1])
        if bestkey is None or k > bestkey:
            best, bestkey = t, k
    return best


def sugar_of(vec: Vec, order: ModuleOrder) -> int:
    return max(order.degree(t) for t in vec) if vec else 0


def monic(vec: Vec, lt: Term) -> Vec:
    c = vec[lt]
    if c == 1:
        return vec
    inv = 1 / c
    return {t: v * inv for t, v in vec.items()}


def divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def sub_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def lcm_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def shift_vec(vec: Vec, mono: Exps, coeff: Fraction) -> Vec:
    return {(c, tuple(x + y for x, y in zip(e, mono))): v * coeff for (c, e), v in vec.items()}


class Reducer:
    """Lookup structure for reducing by a list of monic elements."""

    def __init__(self, order: ModuleOrder):
        self.order = order
        self.elems: List[Vec] = []
        self.lts: List[Term] = []
        self.by_comp: Dict[int, List[int]] = {}
        self.active: List[bool] = []

    def add(self, vec: Vec, lt: Term) -> int:
        idx = len(self.elems)
        self.elems.append(vec)
        self.lts.append(lt)
        self.active.append(True)
        self.by_comp.setdefault(lt[0], []).append(idx)
        return idx

    def deactivate(self, idx: int) -> None:
        self.active[idx] = False
        self.by_comp[self.lts[idx][0]].remove(idx)

    def find(self, t: Term) -> Optional[int]:
        c, e = t
        for idx in self.by_comp.get(c, ()):
            if divides(self.lts[idx][1], e):
                return idx
        return None

    def reduce(self, vec: Vec, full: bool = True, ranks_above: int | None = None) -> Vec:
        """Normal form of ``vec``.

        With ``full`` false only the leading term is reduced repeatedly.
        With ``ranks_above`` set (block orders) reduction stops once no term
        lies in a component of rank greater than that value.
        """
        return _to_fraction(self._reduce(_to_q(vec), full, ranks_above))

    def _reduce(self, vec: Vec, full: bool = True, ranks_above: int | None = None) -> Vec:
        order = self.order
        negkey = order.negkey
        vec = dict(vec)
        heap = []
        for t in vec:
            heapq.heappush(heap, (negkey(t), t))
        queued = set(vec)
        rem: Vec = {}
        ranks = order.ranks
        while heap:
            _, t = heapq.heappop(heap)
            queued.discard(t)
            c = vec.pop(t, None)
            if c is None:
                continue
            if ranks_above is not None and ranks[t[0]] <= ranks_above:
                rem[t] = c
                for t2, c2 in vec.items():
                    rem[t2] = c2
                return rem
            idx = self.find(t)
            if idx is None:
                rem[t] = c
                if not full:
                    for t2, c2 in vec.items():
                        rem[t2] = c2
                    return rem
                continue
            g = self.elems[idx]
            glt = self.lts[idx]
            mono = sub_exps(t[1], glt[1])
            for (gc, ge), gv in g.items():
                if (gc, ge) == glt:
                    continue
                nt = (gc, tuple(x + y for x, y in zip(ge, mono)))
                nv = vec.get(nt, 0) - c * gv
                if nv:
                    vec[nt] = nv
                    if nt not in queued:
                        queued.add(nt)
                        heapq.heappush(heap, (negkey(nt), nt))
                else:
                    vec.pop(nt, None)
        return rem


def _neg(k: tuple) -> tuple:
    return tuple(-x for x in k)


# ---------------------------------------------------------------------------
# Buchberger


class _Pair:
    __slots__ = ("i", "j", "lcm", "sugar", "key")

    def __init__(self, i, j, lcm, sugar, key):
        self.i, self.j, self.lcm, self.sugar, self.key = i, j, lcm, sugar, key

    def sort_key(self):
        return (self.sugar, self.key, self.i, self.j)


def buchberger(
    gens: Sequence[Vec],
    order: ModuleOrder,
    degree_cap: int | None = None,
    reduced: bool = True,
    survivors: list | None = None,
) -> List[Vec]:
    """Reduced Groebner basis of the submodule spanned by ``gens``.

    Pairs are selected by the sugar strategy; the Buchberger product and
    chain criteria are applied through the Gebauer-Moeller update.  Input
    elements are reduced only after every pair of no larger sugar, so for
    homogeneous input the inputs that survive reduction form a minimal
    generating set; pass a list as ``survivors`` to collect them (as
    ``(input index, reduced element)``).  With ``degree_cap`` set, pairs of
    sugar above the cap abort with :class:`DegreeCapExceeded`.
    """
    red = Reducer(order)
    sugars: List[int] = []
    pairs: List[_Pair] = []
    key = order.key

    items = []
    for idx, g in enumerate(gens):
        g = _to_q(g)
        if g:
            items.append((sugar_of(g, order), key(*leading(g, order)), idx, g))
    items.sort(key=lambda x: (x[0], x[1], x[2]))
    items.reverse()

    def insert(vec: Vec, s: int) -> Vec:
        lt = leading(vec, order)
        vec = monic(vec, lt)
        idx = red.add(vec, lt)
        sugars.append(s)
        _update(idx, red, pairs, sugars, order)
        return vec

    while items or pairs:
        if pairs:
            pairs.sort(key=_Pair.sort_key)
        if items and (not pairs or items[-1][0] < pairs[0].sugar):
            s, _, idx, g = items.pop()
            if degree_cap is not None and s > degree_cap:
                raise DegreeCapExceeded(f"generator of degree {s} exceeds cap {degree_cap}")
            h = red._reduce(g)
            if h:
                h = insert(h, max(s, sugar_of(h, order)))
                if survivors is not None:
                    survivors.append((idx, _to_fraction(h)))
            continue
        p = pairs.pop(0)
        if degree_cap is not None and p.sugar > degree_cap:
            raise DegreeCapExceeded(f"pair of degree {p.sugar} exceeds cap {degree_cap}")
        h = red._reduce(_spoly(red, p))
        if h:
            insert(h, max(p.sugar, sugar_of(h, order)))

    basis_idx = [i for i in range(len(red.elems)) if red.active[i]]
    basis = _minimalize(red, basis_idx)
    if reduced:
        basis = _interreduce(basis, order)
    basis.sort(key=lambda v: key(*leading(v, order)))
    return [_to_fraction(b) for b in basis]


def _spoly(red: Reducer, p: _Pair) -> Vec:
    gi, gj = red.elems[p.i], red.elems[p.j]
    ti, tj = red.lts[p.i], red.lts[p.j]
    mi = sub_exps(p.lcm, ti[1])
    mj = sub_exps(p.lcm, tj[1])
    out = shift_vec(gi, mi, Fraction(1))
    for (c, e), v in gj.items():
        nt = (c, tuple(x + y for x, y in zip(e, mj)))
        nv = out.get(nt, 0) - v
        if nv:
            out[nt] = nv
        else:
            out.pop(nt, None)
    return out


def _update(new: int, red: Reducer, pairs: List[_Pair], sugars: List[int], order: ModuleOrder) -> None:
    """Gebauer-Moeller installation of the element ``new`` (Becker-Weispfenning UPDATE).

    The product criterion only holds for ideals, so it is used for rank one
    modules only.
    """
    comp, e_new = red.lts[new]
    s_new = sugars[new]
    mdeg = order.mono.degree
    deg_new = mdeg(e_new)
    use_product = order.rank == 1
    others = [i for i in red.by_comp.get(comp, ()) if i != new]

    cand = []
    for i in others:
        ei = red.lts[i][1]
        l = lcm_exps(ei, e_new)
        ld = mdeg(l)
        sug = max(sugars[i] + ld - mdeg(ei), s_new + ld - deg_new)
        coprime = use_product and all(not (a and b) for a, b in zip(ei, e_new))
        cand.append((i, l, sug, coprime))

    kept = []
    while cand:
        item = cand.pop()
        i, l, sug, coprime = item
        if coprime or not any(divides(o[1], l) for o in cand) and not any(
            divides(o[1], l) for o in kept
        ):
            kept.append(item)
    new_pairs = [(i, l, sug) for i, l, sug, coprime in kept if not coprime]

    survivors = []
    for p in pairs:
        if red.lts[p.i][0] == comp and divides(e_new, p.lcm):
            li = lcm_exps(red.lts[p.i][1], e_new)
            lj = lcm_exps(red.lts[p.j][1], e_new)
            if li != p.lcm and lj != p.lcm:
                continue
        survivors.append(p)
    pairs[:] = survivors

    for i, l, sug in sorted(new_pairs, key=lambda x: x[0]):
        pairs.append(_Pair(i, new, l, sug, order.key(comp, l)))

    for i in others:
        if divides(e_new, red.lts[i][1]):
            red.deactivate(i)


def _minimalize(red: Reducer, idxs: List[int]) -> List[Vec]:
    out = []
    lts = [red.lts[i] for i in idxs]
    for a, i in enumerate(idxs):
        ca, ea = lts[a]
        redundant = False
        for b, j in enumerate(idxs):
            if a == b:
                continue
            cb, eb = lts[b]
            if cb == ca and divides(eb, ea) and (eb != ea or b < a):
                redundant = True
                break
        if not redundant:
            out.append(red.elems[i])
    return out


def _interreduce(basis: List[Vec], order: ModuleOrder) -> List[Vec]:
    out = []
    for k, g in enumerate(basis):
        lt = leading(g, order)
        others = Reducer(order)
        for k2, g2 in enumerate(basis):
            if k2 != k:
                others.add(g2, leading(g2, order))
        tail = dict(g)
        c = tail.pop(lt)
        tail_nf = others._reduce(tail)
        tail_nf[lt] = c
        out.append(monic(tail_nf, lt))
    return out


def make_reducer(basis: Sequence[Vec], order: ModuleOrder) -> Reducer:
    red = Reducer(order)
    for g in basis:
        g = _to_q(g)
        red.add(monic(g, leading(g, order)), leading(g, order))
    return red


def normal_form(vec: Vec, basis: Sequence[Vec], order: ModuleOrder) -> Vec:
    return make_reducer(basis, order).reduce(vec)
