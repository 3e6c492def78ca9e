"""Real algebraic numbers and polynomials over the number fields they generate.

A real algebraic number is an irreducible polynomial over Q together with an
isolating interval.  Signs of field elements q(alpha) are decided exactly:
q(alpha) = 0 iff the minimal polynomial divides q, otherwise the interval is
shrunk until q has no root in it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from . import univariate as up
from .univariate import RootInterval, UPoly


class RealAlgebraic:
    def __init__(self, minpoly: UPoly, interval: RootInterval):
        self.minpoly = up.monic(minpoly)
        self.root = RootInterval(self.minpoly, interval.a, interval.b)
        if len(self.minpoly) == 2:
            r = -self.minpoly[0]
            self.root.a = self.root.b = r

    @classmethod
    def rational(cls, r) -> "RealAlgebraic":
        r = Fraction(r)
        return cls([-r, Fraction(1)], RootInterval([-r, Fraction(1)], r, r))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("irrational algebraic number")
        return self.root.a

    def approx(self) -> float:
        return self.root.approx()

    def reduce(self, q: UPoly) -> UPoly:
        return up.rem(up.strip(q), self.minpoly)

    def sign_of(self, q: UPoly) -> int:
        """Sign of q(alpha)."""
        q = self.reduce(q)
        if not q:
            return 0
        if self.root.exact:
            return up.sign(up.evaluate(q, self.root.a))
        chain = up.sturm_chain(q)
        while up.sturm_count(q, self.root.a, self.root.b, chain):
            self.root.refine()
            if self.root.exact:
                return up.sign(up.evaluate(q, self.root.a))
        return up.sign(up.evaluate(q, self.root.b))

    def magnitude_bounds(self, q: UPoly) -> Tuple[Fraction, Fraction]:
        """Rational 0 < lo <= |q(alpha)| <= hi, for q(alpha) != 0."""
        q = self.reduce(q)
        if not q:
            raise ZeroDivisionError("element is zero")
        while True:
            lo, hi = _interval_eval(q, self.root.a, self.root.b)
            if lo > 0 or hi < 0:
                return min(abs(lo), abs(hi)), max(abs(lo), abs(hi))
            self.root.refine()

    def __repr__(self) -> str:
        if self.is_rational:
            return f"RealAlgebraic({self.value()})"
        return f"RealAlgebraic({up.to_string(self.minpoly)}, ({self.root.a}, {self.root.b}))"


def _interval_eval(q: UPoly, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for c in reversed(q):
        prods = (lo * a, lo * b, hi * a, hi * b)
        lo, hi = min(prods) + c, max(prods) + c
    return lo, hi


# -- arithmetic in Q(alpha) --------------------------------------------------


def _field_inverse(q: UPoly, m: UPoly) -> UPoly:
    r0, r1 = list(m), up.rem(q, m)
    s0, s1 = [], [Fraction(1)]
    while r1:
        quo, r = up.divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, up.sub(s0, up.mul(quo, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo the minimal polynomial")
    return up.scale(s0, 1 / r0[0])


class KPoly:
    """Polynomial in y over Q(alpha); coefficients are reduced UPolys in alpha."""

    def __init__(self, alpha: RealAlgebraic, coeffs: Sequence[UPoly]):
        self.alpha = alpha
        cs = [alpha.reduce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _mul_k(self, a: UPoly, b: UPoly) -> UPoly:
        return self.alpha.reduce(up.mul(a, b))

    def derivative(self) -> "KPoly":
        return KPoly(self.alpha, [up.scale(c, i) for i, c in enumerate(self.coeffs)][1:])

    def neg(self) -> "KPoly":
        return KPoly(self.alpha, [up.scale(c, -1) for c in self.coeffs])

    def divmod(self, other: "KPoly") -> Tuple["KPoly", "KPoly"]:
        m = self.alpha.minpoly
        inv = _field_inverse(other.coeffs[-1], m)
        r = [list(c) for c in self.coeffs]
        q: List[UPoly] = [[] for _ in range(max(0, len(r) - len(other.coeffs) + 1))]
        while len(r) >= len(other.coeffs) and r:
            c = self._mul_k(r[-1], inv)
            k = len(r) - len(other.coeffs)
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[i + k] = self.alpha.reduce(up.sub(r[i + k], up.mul(c, b)))
            while r and not r[-1]:
                r.pop()
        return KPoly(self.alpha, q), KPoly(self.alpha, r)

    def gcd(self, other: "KPoly") -> "KPoly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a

    def squarefree(self) -> "KPoly":
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        return self.divmod(g)[0]

    def eval_rational(self, y: Fraction) -> UPoly:
        acc: UPoly = []
        for c in reversed(self.coeffs):
            acc = up.add(up.scale(acc, y), c)
        return acc

    def sign_at(self, y) -> int:
        if y == "-inf":
            return self.alpha.sign_of(self.coeffs[-1]) * (-1 if self.degree % 2 else 1)
        if y == "+inf":
            return self.alpha.sign_of(self.coeffs[-1])
        return self.alpha.sign_of(self.eval_rational(Fraction(y)))

    def cauchy_bound(self) -> Fraction:
        lo, _ = self.alpha.magnitude_bounds(self.coeffs[-1])
        best = Fraction(0)
        for c in self.coeffs[:-1]:
            if c:
                best = max(best, _interval_eval(c, self.alpha.root.a, self.alpha.root.b)[1],
                           -_interval_eval(c, self.alpha.root.a, self.alpha.root.b)[0])
        return 1 + best / lo


def _k_sturm_chain(p: KPoly) -> List[KPoly]:
    p = p.squarefree()
    chain = [p, p.derivative()]
    while chain[-1]:
        chain.append(chain[-2].divmod(chain[-1])[1].neg())
    chain.pop()
    return chain


def _k_count(chain: List[KPoly], a, b) -> int:
    def var(x):
        s = [v for v in (q.sign_at(x) for q in chain) if v]
        return sum(1 for u, w in zip(s, s[1:]) if u != w)

    return var(a) - var(b)


class KRoot:
    """Real root of a squarefree KPoly: exact rational (a == b) or isolated in (a, b)."""

    __slots__ = ("poly", "a", "b")

    def __init__(self, poly: KPoly, a: Fraction, b: Fraction):
        self.poly = poly
        self.a = a
        self.b = b

    @property
    def exact(self) -> bool:
        return self.a == self.b

    def refine(self) -> None:
        if self.exact:
            return
        m = (self.a + self.b) / 2
        s = self.poly.sign_at(m)
        left = self.poly.sign_at(self.a) or self.poly.derivative().sign_at(self.a)
        if s == 0:
            self.a = self.b = m
        elif s == left:
            self.a = m
        else:
            self.b = m

    def approx(self) -> float:
        return float((self.a + self.b) / 2)


def real_roots_over(p: KPoly) -> List[KRoot]:
    """Sorted isolated real roots of p (distinct)."""
    if p.degree <= 0:
        return []
    chain = _k_sturm_chain(p)
    sf = chain[0]
    if sf.degree <= 0:
        return []
    B = sf.cauchy_bound()
    out: List[KRoot] = []

    def rec(a: Fraction, b: Fraction, k: int) -> None:
        if k == 0:
            return
        if k == 1:
            out.append(KRoot(sf, a, b))
            return
        m = (a + b) / 2
        if sf.sign_at(m) == 0:
            left = _k_count(chain, a, m) - 1
            rec(a, m, left)
            out.append(KRoot(sf, m, m))
            rec(m, b, k - left - 1)
            return
        left = _k_count(chain, a, m)
        rec(a, m, left)
        rec(m, b, k - left)

    rec(-B, B, _k_count(chain, -B, B))
    out.sort(key=lambda r: r.a)
    return out
