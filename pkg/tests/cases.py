"""Shared polynomials used across the test modules."""

from acis.polyarith import Ring, homogenize, parse

XYZ = Ring(["x", "y", "z"])
XY = Ring(["x", "y"])

FIRST_QUARTIC = "(x^2+y^2)^2+(3*x^2*y-y^3)*z"
SECOND_QUARTIC_AFFINE = "2*(x^2+y^2)^2+10*y*(3*x^2-y^2)+11*(x^2+y^2)-3"
SEXTIC = "(x^2+y^2)^3-4*x^2*y^2*z^2"


def first_quartic():
    return parse(FIRST_QUARTIC, XYZ)


def second_quartic():
    return homogenize(parse(SECOND_QUARTIC_AFFINE, XY), "z")


def sextic():
    return parse(SEXTIC, XYZ)


def two_circles(a):
    return parse(f"(x^2+y^2-4*z^2)*((x-({a})*z)^2+y^2-z^2)", XYZ)


def line_cubic(t):
    return parse(f"(y^2*z-x^3+x*z^2)*(y-({t})*z)", XYZ)


def _random_form(rng, ring, degree):
    from acis.groebner.modules import monomials_of_degree
    from acis.polyarith import Polynomial

    mons = monomials_of_degree(ring.weights, degree)
    return Polynomial(ring, {m: rng.randint(-3, 3) for m in mons})


def generated_aci(seed):
    """A homogeneous sequence of n forms in n = 2 or 3 variables with one-dimensional zero set.

    n = 2: (l*a, l*b) with a common linear factor l.
    n = 3: the partials of L1*L2*Q for a random conic or line Q.
    Only sequences with a nonzero module I/J are returned.
    """
    import random

    from acis.gorenstein import jacobian_module
    from acis.groebner.ideal import Ideal, krull_dimension
    from acis.polyarith import gradient

    rng = random.Random(seed)
    while True:
        if seed % 2 == 0:
            l = _random_form(rng, XY, 1)
            fs = [l * _random_form(rng, XY, rng.randint(1, 2)), l * _random_form(rng, XY, rng.randint(1, 2))]
        else:
            f = _random_form(rng, XYZ, 1) * _random_form(rng, XYZ, 1) * _random_form(rng, XYZ, rng.randint(1, 2))
            fs = list(gradient(f))
        if all(fs) and krull_dimension(Ideal(fs[0].ring, fs)) == 1 and jacobian_module(fs).dim:
            return fs
