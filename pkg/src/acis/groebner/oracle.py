"""Degree-by-degree dense linear algebra, independent of the Groebner engine.

Every graded piece is a matrix over the monomials of that degree; ranks and
kernels come from fraction-free elimination in :mod:`acis.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from ..linalg import bareiss_nullspace, bareiss_rref, rank
from ..polyarith import Polynomial
from .modules import monomials_of_degree


class OracleWindowError(ValueError):
    """The degree bound is too small for the requested window."""


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Space:
    """Subspace of P_d stored as fraction-free reduced echelon rows."""

    def __init__(self, mons, rows):
        self.mons = mons
        self.index = {m: i for i, m in enumerate(mons)}
        R, piv = bareiss_rref(rows) if rows else ([], [])
        self.rows = R
        self.pivots = piv
        self.dim = len(piv)
        pset = set(piv)
        self.free = [j for j in range(len(mons)) if j not in pset]

    def residual(self, vec: Sequence[int]) -> List[int]:
        """Coordinates, on the non-pivot monomials, of vec modulo the space (scaled)."""
        if not self.rows:
            return list(vec)
        p = self.rows[0][self.pivots[0]]
        out = []
        for j in self.free:
            s = p * vec[j]
            for row, pc in zip(self.rows, self.pivots):
                if vec[pc]:
                    s -= vec[pc] * row[j]
            out.append(s)
        return out


@dataclass
class OracleReport:
    degrees: Tuple[int, int]
    ideal_dims: Dict[int, int]
    saturation_dims: Dict[int, int]
    quotient_hilbert: Dict[int, int]
    module_hilbert: Dict[int, int]
    koszul: Dict[int, Dict[int, int]] = field(default_factory=dict)
    saturation_iterations: int = 0
    saturation_window: int = 0
    saturation_bases: Dict[int, List[List[int]]] = field(default_factory=dict)


def _ideal_piece(gens: Sequence[Polynomial], weights, d) -> _Space:
    mons = monomials_of_degree(weights, d)
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in gens:
        k = d - g.degree()
        if k < 0:
            continue
        for m in monomials_of_degree(weights, k):
            row = [0] * len(mons)
            for e, c in g.terms.items():
                row[index[_add(e, m)]] = c
            rows.append(row)
    return _Space(mons, rows)


def degreewise_oracle(
    gens: Sequence[Polynomial],
    D: int,
    window: int | None = None,
    koszul_degrees: Sequence[int] = (),
) -> OracleReport:
    """Graded pieces of J = (gens), of its saturation and of Koszul homology.

    ``window`` is the top degree in which saturation pieces are required;
    by default the largest one the bound ``D`` allows.  Saturation is the
    iteration S_{k+1,d} = {v : x_i v in S_{k, d+w_i} for all i}, which loses
    max(w) degrees of the window at every step.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("oracle needs homogeneous generators")
    if D < max(g.degree() for g in gens):
        raise OracleWindowError("degree bound below the generator degrees")
    w = ring.weights
    n = ring.nvars
    maxw = max(w)

    pieces = {d: _ideal_piece(gens, w, d) for d in range(D + 1)}
    ideal_dims = {d: pieces[d].dim for d in range(D + 1)}
    quotient = {d: len(pieces[d].mons) - pieces[d].dim for d in range(D + 1)}

    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cur = dict(pieces)
    top = D
    iterations = 0
    while True:
        new_top = top - maxw
        if new_top < 0:
            raise OracleWindowError("degree bound too small to stabilise saturation")
        nxt = {}
        changed = False
        for d in range(new_top + 1):
            mons = cur[d].mons
            cols = []
            for m in mons:
                col = []
                for i in range(n):
                    tgt = cur[d + w[i]]
                    vec = [0] * len(tgt.mons)
                    vec[tgt.index[_add(m, unit[i])]] = 1
                    col.extend(tgt.residual(vec))
                cols.append(col)
            rows = [list(r) for r in zip(*cols)] if cols and cols[0] else []
            basis = bareiss_nullspace(rows, len(mons)) if rows else [
                [int(i == j) for j in range(len(mons))] for i in range(len(mons))
            ]
            sp = _Space(mons, basis)
            if sp.dim != cur[d].dim:
                changed = True
            nxt[d] = sp
        top = new_top
        cur = nxt
        if not changed:
            break
        iterations += 1
    if window is None:
        window = top
    if window > top:
        raise OracleWindowError(
            f"saturation known up to degree {top} only; raise the bound above {D}"
        )
    sat = {d: cur[d].dim for d in range(window + 1)}
    module = {d: sat[d] - ideal_dims[d] for d in range(window + 1)}

    kos: Dict[int, Dict[int, int]] = {}
    if koszul_degrees:
        kos = koszul_dimensions(gens, koszul_degrees)
    return OracleReport(
        degrees=(0, D),
        ideal_dims=ideal_dims,
        saturation_dims=sat,
        quotient_hilbert=quotient,
        module_hilbert=module,
        koszul=kos,
        saturation_iterations=iterations,
        saturation_window=window,
        saturation_bases={d: [list(r) for r in cur[d].rows] for d in range(window + 1)},
    )


def koszul_dimensions(gens: Sequence[Polynomial], degrees: Sequence[int]) -> Dict[int, Dict[int, int]]:
    """dim H_p(K(gens))_d for all p and the given d, basis vectors e_I in degree sum deg f_i."""
    ring = gens[0].ring
    w = ring.weights
    k = len(gens)
    gdeg = [g.degree() for g in gens]
    subsets = {p: list(combinations(range(k), p)) for p in range(k + 1)}
    out: Dict[int, Dict[int, int]] = {p: {} for p in range(k + 1)}
    for d in degrees:
        blocks = {}
        for p in range(k + 1):
            blk = []
            for I in subsets[p]:
                dd = d - sum(gdeg[i] for i in I)
                for m in monomials_of_degree(w, dd):
                    blk.append((I, m))
            blocks[p] = blk
        ranks = {0: 0, k + 1: 0}
        for p in range(1, k + 1):
            tgt = {b: i for i, b in enumerate(blocks[p - 1])}
            rows = []
            for I, m in blocks[p]:
                row = [0] * len(blocks[p - 1])
                for j, i in enumerate(I):
                    sign = 1 if j % 2 == 0 else -1
                    rest = I[:j] + I[j + 1 :]
                    for e, c in gens[i].terms.items():
                        row[tgt[(rest, _add(m, e))]] += sign * c
                rows.append(row)
            ranks[p] = rank(rows) if rows and blocks[p - 1] else 0
        for p in range(k + 1):
            out[p][d] = len(blocks[p]) - ranks[p] - ranks[p + 1]
    return out
