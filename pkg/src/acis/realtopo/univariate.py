"""Dense univariate polynomials over Q as coefficient lists, lowest degree first."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

UPoly = List[Fraction]


def strip(p: Sequence) -> UPoly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def deg(p: UPoly) -> int:
    return len(p) - 1


def add(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return strip([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: UPoly, q: UPoly) -> UPoly:
    return add(p, [-c for c in q])


def scale(p: UPoly, c) -> UPoly:
    return strip([c * a for a in p])


def mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return strip(out)


def divmod_poly(p: UPoly, q: UPoly) -> Tuple[UPoly, UPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lc = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lc
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        r = strip(r)
    return strip(quo), r


def rem(p: UPoly, q: UPoly) -> UPoly:
    return divmod_poly(p, q)[1]


def monic(p: UPoly) -> UPoly:
    return [c / p[-1] for c in p] if p else []


def gcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = strip(p), strip(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def derivative(p: UPoly) -> UPoly:
    return strip([i * c for i, c in enumerate(p)][1:])


def squarefree(p: UPoly) -> UPoly:
    p = strip(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def evaluate(p: UPoly, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign(v) -> int:
    return (v > 0) - (v < 0)


def from_polynomial(p, var: Optional[int] = None) -> UPoly:
    """Coefficient list of an acis Polynomial involving at most one variable."""
    if var is None:
        used = [i for i in range(p.ring.nvars) if any(e[i] for e in p.terms)]
        if len(used) > 1:
            raise ValueError("polynomial is not univariate")
        var = used[0] if used else 0
    out: dict = {}
    for e, c in p.terms.items():
        if any(k for i, k in enumerate(e) if i != var):
            raise ValueError("polynomial is not univariate")
        out[e[var]] = c
    n = max(out) + 1 if out else 0
    return strip([out.get(i, 0) for i in range(n)])


def to_string(p: UPoly, var: str = "x") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mon and abs(c) == 1:
            s = mon
        else:
            s = str(abs(c)) + ("*" + mon if mon else "")
        parts.append(("-" if c < 0 else "+", s))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f"{sg}{s}" for sg, s in parts[1:])


# -- Sturm sequences -------------------------------------------------------


def sturm_chain(p: UPoly) -> List[UPoly]:
    p = squarefree(p)
    if not p:
        return []
    chain = [p, derivative(p)]
    while chain[-1]:
        r = rem(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    s = [v for v in signs if v]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(chain: List[UPoly], x) -> List[int]:
    if x == "-inf":
        return [sign(q[-1]) * (-1 if deg(q) % 2 else 1) for q in chain]
    if x == "+inf":
        return [sign(q[-1]) for q in chain]
    return [sign(evaluate(q, x)) for q in chain]


Bound = Union[Fraction, int, str]


def sturm_count(p: UPoly, a: Bound = "-inf", b: Bound = "+inf", chain: Optional[List[UPoly]] = None) -> int:
    """Number of distinct real roots in (a, b]."""
    if chain is None:
        chain = sturm_chain(p)
    if not chain:
        return 0
    if len(chain) == 1:
        return 0
    return _variations(_signs_at(chain, a)) - _variations(_signs_at(chain, b))


def cauchy_bound(p: UPoly) -> Fraction:
    p = strip(p)
    lc = abs(p[-1])
    return 1 + max((abs(c) / lc for c in p[:-1]), default=Fraction(0))


class RootInterval:
    """A real root of ``poly`` given exactly (a == b) or inside the open interval (a, b)."""

    __slots__ = ("poly", "a", "b")

    def __init__(self, poly: UPoly, a: Fraction, b: Fraction):
        self.poly = poly
        self.a = Fraction(a)
        self.b = Fraction(b)

    @property
    def exact(self) -> bool:
        return self.a == self.b

    def __repr__(self) -> str:
        if self.exact:
            return f"RootInterval({self.a})"
        return f"RootInterval(({self.a}, {self.b}))"

    def refine(self) -> None:
        if self.exact:
            return
        m = (self.a + self.b) / 2
        v = evaluate(self.poly, m)
        # sign just to the right of a; the polynomial is squarefree
        left = sign(evaluate(self.poly, self.a)) or sign(evaluate(derivative(self.poly), self.a))
        if v == 0:
            self.a = self.b = m
        elif sign(v) == left:
            self.a = m
        else:
            self.b = m

    def approx(self) -> float:
        return float((self.a + self.b) / 2)


def isolate_roots(p: UPoly) -> List[RootInterval]:
    """Isolating intervals of the distinct real roots, sorted and disjoint.

    Interval endpoints are never roots; exact rational roots found during
    bisection are returned as degenerate intervals.
    """
    chain = sturm_chain(p)
    if not chain or len(chain[0]) <= 1:
        return []
    sf = chain[0]
    B = cauchy_bound(sf)
    out: List[RootInterval] = []

    def rec(a: Fraction, b: Fraction, k: int) -> None:
        # k roots in (a, b), neither endpoint a root
        if k == 0:
            return
        if k == 1:
            out.append(RootInterval(sf, a, b))
            return
        m = (a + b) / 2
        if evaluate(sf, m) == 0:
            left = sturm_count(sf, a, m, chain) - 1
            rec(a, m, left)
            out.append(RootInterval(sf, m, m))
            rec(m, b, k - left - 1)
            return
        left = sturm_count(sf, a, m, chain)
        rec(a, m, left)
        rec(m, b, k - left)

    rec(-B, B, sturm_count(sf, -B, B, chain))
    out.sort(key=lambda r: r.a)
    return out


def separating_points(roots: Sequence[RootInterval]) -> List[Fraction]:
    """Rational points strictly below, between and above the given sorted roots.

    Intervals may be refined in place.
    """
    if not roots:
        return [Fraction(0)]
    pts = [roots[0].a - 1]
    for r, nxt in zip(roots, roots[1:]):
        while r.b == nxt.a and (r.exact or nxt.exact):
            (nxt if r.exact else r).refine()
        pts.append(r.b if r.b == nxt.a else (r.b + nxt.a) / 2)
    pts.append(roots[-1].b + 1)
    return pts


# -- resultants ------------------------------------------------------------


def sylvester(p: Sequence, q: Sequence) -> List[List]:
    """Sylvester matrix of p and q of formal degrees len(p)-1 and len(q)-1."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(p: UPoly, q: UPoly) -> Fraction:
    from ..linalg import bareiss_det

    p, q = strip(p), strip(q)
    if not p or not q:
        return Fraction(0)
    if len(p) == 1 and len(q) == 1:
        return Fraction(1)
    return Fraction(bareiss_det(sylvester(p, q)))


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UPoly:
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out: UPoly = []
    for i in range(n - 1, -1, -1):
        out = add(mul(out, [-Fraction(xs[i]), Fraction(1)]), [coef[i]])
    return strip(out)
