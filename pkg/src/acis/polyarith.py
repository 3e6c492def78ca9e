"""Exact multivariate polynomials over the rationals with weighted gradings.

A :class:`Ring` fixes an ordered list of variable names and positive integer
weights.  A :class:`Polynomial` is an immutable map from exponent tuples to
nonzero :class:`fractions.Fraction` coefficients.  Everything is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Exps = Tuple[int, ...]
Terms = Dict[Exps, Fraction]
Scalar = Union[int, Fraction]


class PolynomialError(ValueError):
    """Raised for ring mismatches and invalid polynomial constructions."""


class ParseError(PolynomialError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Ring:
    """Ordered variables with positive integer weights."""

    __slots__ = ("names", "weights", "_index")

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise PolynomialError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise PolynomialError(f"invalid variable name {name!r}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise PolynomialError("one weight per variable is required")
        if any(w < 1 for w in weights):
            raise PolynomialError("weights must be positive integers")
        self.names = names
        self.weights = weights
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    def degree(self, exps: Exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(n) for n in self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        c = Fraction(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def __call__(self, text: str) -> "Polynomial":
        return parse(text, self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def __repr__(self) -> str:
        if all(w == 1 for w in self.weights):
            return f"Ring({','.join(self.names)})"
        ws = ",".join(map(str, self.weights))
        return f"Ring({','.join(self.names)}; weights {ws})"


# Name kept close to the data model used in reports.
VarSet = Ring


def grevlex_key(exps: Exps, weights: Sequence[int]) -> tuple:
    """Sort key for (weighted) graded reverse lexicographic order."""
    deg = 0
    for w, e in zip(weights, exps):
        deg += w * e
    return (deg,) + tuple(-e for e in reversed(exps))


class Polynomial:
    """Immutable polynomial in a :class:`Ring`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exps, Scalar] | None = None):
        self.ring = ring
        clean: Terms = {}
        if terms:
            n = ring.nvars
            for e, c in terms.items():
                if len(e) != n:
                    raise PolynomialError("exponent length does not match ring")
                if c:
                    clean[tuple(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: Terms) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.degree(e) for e in self.terms)

    def degrees(self) -> set:
        return {self.ring.degree(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def sorted_terms(self) -> list:
        """Terms in descending grevlex order (the canonical printing order)."""
        w = self.ring.weights
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0], w), reverse=True)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(
            self.ring, {e: c for e, c in self.terms.items() if self.ring.degree(e) == d}
        )

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def variables(self) -> set:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.ring.names[i])
        return used

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise PolynomialError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._raw(self.ring, mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("only non-negative integer powers are supported")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def evaluate(self, values: Mapping[str, Scalar] | Sequence[Scalar]) -> Fraction:
        if isinstance(values, Mapping):
            vals = [Fraction(values[n]) for n in self.ring.names]
        else:
            vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def subs(self, assignments: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Substitute polynomials (in the same ring) for some variables."""
        ring = self.ring
        images = []
        for name in ring.names:
            v = assignments.get(name)
            if v is None:
                images.append(ring.gen(name))
            elif isinstance(v, Polynomial):
                images.append(v)
            else:
                images.append(ring.const(v))
        return compose(self, images, ring)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def mul_terms(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def compose(p: Polynomial, images: Sequence[Polynomial], ring: Ring) -> Polynomial:
    """Replace the i-th variable of ``p`` by ``images[i]`` (all in ``ring``)."""
    result = ring.zero()
    cache: Dict[Tuple[int, int], Polynomial] = {}

    def power(i: int, k: int) -> Polynomial:
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] ** k
        return cache[key]

    for e, c in p.terms.items():
        t = ring.const(c)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        result = result + t
    return result


# ---------------------------------------------------------------------------
# printing and parsing


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    names = p.ring.names
    parts = []
    for e, c in p.sorted_terms():
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.ring = ring
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # pragma: no cover - the pattern always matches non-space
                raise ParseError("unexpected character", pos)
            start = m.start(m.lastindex)
            if m.group(1) is not None:
                self.tokens.append(("num", m.group(1), start))
            elif m.group(2) is not None:
                self.tokens.append(("var", m.group(2), start))
            else:
                ch = m.group(3)
                if ch not in "+-*^()":
                    raise ParseError(f"unexpected character {ch!r}", start)
                self.tokens.append(("op", ch, start))
            pos = m.end()
        self.end = len(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", self.end)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value or tok[0] != "op":
            raise ParseError(f"expected {value!r}", tok[2])

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                p = p * self.factor()
            elif tok[0] in ("num", "var") or (tok[0] == "op" and tok[1] == "("):
                raise ParseError("implicit multiplication is not allowed", tok[2])
            else:
                return p

    def factor(self) -> Polynomial:
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num" or "/" in exp[1]:
                raise ParseError("exponent must be a natural number", exp[2])
            return base ** int(exp[1])
        return base

    def base(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            return self.ring.const(Fraction(value))
        if kind == "var":
            if value not in self.ring.names:
                raise ParseError(f"unknown variable {value!r}", pos)
            return self.ring.gen(value)
        if kind == "op" and value == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "eof":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into an expanded polynomial of ``ring``."""
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# calculus and constructions


def partial(p: Polynomial, var: str) -> Polynomial:
    i = p.ring.index(var)
    out: Terms = {}
    for e, c in p.terms.items():
        k = e[i]
        if k:
            ne = list(e)
            ne[i] = k - 1
            out[tuple(ne)] = c * k
    return Polynomial._raw(p.ring, out)


def gradient(p: Polynomial) -> Tuple[Polynomial, ...]:
    return tuple(partial(p, v) for v in p.ring.names)


def determinant(matrix: Sequence[Sequence[Polynomial]], ring: Ring) -> Polynomial:
    """Determinant by Laplace expansion with memoised minors (n <= ~6 here)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise PolynomialError("determinant of a non-square matrix")
    memo: Dict[Tuple[int, frozenset], Polynomial] = {}

    def minor(row: int, cols: frozenset) -> Polynomial:
        if row == n:
            return ring.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = ring.zero()
        sign = 1
        for j in sorted(cols):
            entry = matrix[row][j]
            if entry:
                sub = minor(row + 1, cols - {j})
                if sub:
                    total = total + entry * sub if sign > 0 else total - entry * sub
            sign = -sign
        memo[key] = total
        return total

    return minor(0, frozenset(range(n)))


def jacobian_matrix(fs: Sequence[Polynomial]) -> list:
    return [[partial(f, v) for v in f.ring.names] for f in fs]


def jacobian_det(fs: Sequence[Polynomial]) -> Polynomial:
    """Determinant of (d f_i / d x_j)."""
    if not fs:
        raise PolynomialError("empty sequence")
    ring = fs[0].ring
    if len(fs) != ring.nvars:
        raise PolynomialError(
            f"jacobian_det needs {ring.nvars} polynomials, got {len(fs)}"
        )
    return determinant(jacobian_matrix(fs), ring)


def hessian_det(f: Polynomial) -> Polynomial:
    return jacobian_det(gradient(f))


def extend_ring(ring: Ring, name: str, weight: int = 1) -> Ring:
    if name in ring.names:
        raise PolynomialError(f"variable {name!r} already in ring")
    return Ring(ring.names + (name,), ring.weights + (weight,))


def embed(p: Polynomial, target: Ring) -> Polynomial:
    """Map ``p`` into a ring whose variables include all of p's variables."""
    pos = [target.index(n) for n in p.ring.names]
    for n, w in zip(p.ring.names, p.ring.weights):
        if target.weights[target.index(n)] != w:
            raise PolynomialError(f"weight of {n!r} differs between rings")
    out: Terms = {}
    nt = target.nvars
    for e, c in p.terms.items():
        ne = [0] * nt
        for i, k in zip(pos, e):
            ne[i] = k
        out[tuple(ne)] = c
    return Polynomial._raw(target, out)


def homogenize(p: Polynomial, new_var: str, target_degree: int | None = None) -> Polynomial:
    """Multiply each term by ``new_var`` to reach ``target_degree``.

    If ``new_var`` is not yet in the ring it is appended with weight 1.
    """
    ring = p.ring
    if new_var in ring.names:
        idx = ring.index(new_var)
        if ring.weights[idx] != 1:
            raise PolynomialError("homogenizing variable must have weight 1")
        if any(e[idx] for e in p.terms):
            raise PolynomialError(f"{new_var!r} already occurs in the polynomial")
        target = ring
    else:
        target = extend_ring(ring, new_var)
        idx = target.nvars - 1
    d = p.degree()
    if target_degree is None:
        target_degree = max(d, 0)
    if target_degree < d:
        raise PolynomialError(
            f"target degree {target_degree} is below the degree {d} of the polynomial"
        )
    q = embed(p, target) if target is not ring else p
    out: Terms = {}
    for e, c in q.terms.items():
        ne = list(e)
        ne[idx] += target_degree - target.degree(e)
        out[tuple(ne)] = c
    return Polynomial._raw(target, out)


def dehomogenize(p: Polynomial, var: str) -> Polynomial:
    """Set ``var`` = 1 and drop it from the ring."""
    ring = p.ring
    idx = ring.index(var)
    names = ring.names[:idx] + ring.names[idx + 1 :]
    weights = ring.weights[:idx] + ring.weights[idx + 1 :]
    target = Ring(names, weights)
    out: Terms = {}
    for e, c in p.terms.items():
        ne = e[:idx] + e[idx + 1 :]
        v = out.get(ne, 0) + c
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return Polynomial._raw(target, out)


def direct_sum(f: Polynomial, g: Polynomial) -> Polynomial:
    """Thom-Sebastiani sum f(x) + g(y) over the union of two disjoint rings."""
    overlap = set(f.ring.names) & set(g.ring.names)
    if overlap:
        raise PolynomialError(f"overlapping variables {sorted(overlap)}")
    ring = Ring(f.ring.names + g.ring.names, f.ring.weights + g.ring.weights)
    return embed(f, ring) + embed(g, ring)


def substitute_linear(p: Polynomial, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
    """Return p(A x): variable i is replaced by sum_j A[i][j] x_j.

    ``A`` must be invertible and may only mix variables of equal weight.
    """
    from .linalg import rank  # local import keeps polyarith dependency-free

    ring = p.ring
    n = ring.nvars
    A = [[Fraction(v) for v in row] for row in matrix]
    if len(A) != n or any(len(row) != n for row in A):
        raise PolynomialError(f"substitution matrix must be {n}x{n}")
    if rank(A) != n:
        raise PolynomialError("substitution matrix is singular")
    for i in range(n):
        for j in range(n):
            if A[i][j] and ring.weights[i] != ring.weights[j]:
                raise PolynomialError(
                    "substitution mixes variables of different weight"
                )
    gens = ring.gens()
    images = []
    for i in range(n):
        img = ring.zero()
        for j in range(n):
            if A[i][j]:
                img = img + gens[j] * A[i][j]
        images.append(img)
    return compose(p, images, ring)


def permutation_matrix(perm: Sequence[int]) -> list:
    """Matrix sending variable i to variable perm[i]."""
    n = len(perm)
    return [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]


def all_permutations(n: int) -> Iterable[Tuple[int, ...]]:
    return permutations(range(n))
