import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acis.gorenstein import (
    GorensteinError,
    c_e,
    conjecture_check,
    ev_levine,
    h0m_general,
    jacobian_module,
    pairing_hessian,
    pairing_homological,
    pencil_signature,
    primitive_ideal_truncated,
    real_branches,
    signature,
)
from acis.groebner.ideal import Ideal
from acis.polyarith import Ring, gradient, parse, substitute_linear

from cases import XY, XYZ, first_quartic, generated_aci, second_quartic, sextic

x, y = XY.gens()
X, Y, Z = XYZ.gens()
W = Ring(["x", "y", "z"], [1, 2, 2])


def test_module_of_xy_x2():
    M = jacobian_module([x * y, x * x])
    assert [str(g) for g in M.I.gens] == ["x"]
    assert M.dim == 1 and M.labels() == ["[x]"] and M.socle_degree == 2


def test_module_of_x2y_equals_that_of_xy_x2():
    M = jacobian_module(x * x * y)
    assert M.I == Ideal(XY, [x]) and M.dim == 1


def test_sextic_module():
    M = jacobian_module(sextic(), check_oracle=True)
    assert M.hilbert.polynomial() == "2t^5+3t^6+2t^7"
    assert M.dim == 7 and M.socle_degree == 12 and M.is_symmetric()


@pytest.mark.parametrize("make", [first_quartic, second_quartic])
def test_quartic_modules_agree_with_oracle(make):
    M = jacobian_module(make(), check_oracle=True)
    assert M.socle_degree == 6 and M.is_symmetric()


def test_preconditions():
    with pytest.raises(GorensteinError) as exc:
        jacobian_module(x * x + y * y)
    assert exc.value.reason == "zero-dimensional"
    with pytest.raises(GorensteinError) as exc:
        jacobian_module(parse("x^2*y+x", XY))
    assert exc.value.reason == "inhomogeneous"
    with pytest.raises(GorensteinError) as exc:
        jacobian_module([x * y])
    assert exc.value.reason == "input"
    R4 = Ring(["x", "y", "u", "v"])
    with pytest.raises(GorensteinError) as exc:
        jacobian_module(parse("x^2*y^2+u^3*v", R4))
    assert exc.value.reason == "dimension"


# -- pairings ------------------------------------------------------------------


def test_pairing_values_on_xy_x2():
    M = jacobian_module([x * y, x * x])
    # residue normalised positive on the Jacobian determinant of the regular sequence
    assert pairing_homological(M).matrix == [[Fraction(-1)]]
    assert pairing_hessian(M).matrix == [[Fraction(-1, 2)]]


def test_homological_pairing_is_independent_of_the_seed():
    M = jacobian_module(sextic())
    grams = {str(pairing_homological(M, seed=s).matrix) for s in range(3)}
    assert len(grams) == 1


def test_sextic_hessian_mode_refused_and_homological_value():
    with pytest.raises(GorensteinError) as exc:
        signature(sextic(), mode="hessian")
    assert exc.value.reason == "socle"
    assert "2t^10+2t^11" in str(exc.value) and "12" in str(exc.value)
    rep = signature(sextic(), mode="auto")
    assert rep.mode == "homological" and "hessian_fallback" in rep.checks
    assert (rep.n_plus, rep.n_minus) == (2, 5)


@pytest.mark.parametrize("make,sigma", [(first_quartic, -3), (second_quartic, -4)])
def test_quartic_signatures_both_modes(make, sigma):
    M = jacobian_module(make())
    h = pairing_hessian(M)
    k = pairing_homological(M)
    assert h.signature() == k.signature() == sigma
    assert h.rank() == k.rank() == M.dim


@pytest.mark.parametrize("seed", range(6))
def test_gram_structure_on_generated_examples(seed):
    fs = generated_aci(seed)
    M = jacobian_module(fs)
    k = pairing_homological(M, seed=seed)
    assert k.is_symmetric() and k.is_graded_antidiagonal(M.socle_degree)
    p, m, z = k.inertia()
    assert z == 0 and (p - m - M.dim) % 2 == 0
    try:
        h = pairing_hessian(M)
    except GorensteinError:
        return
    assert h.inertia() == k.inertia()


# -- sign laws -------------------------------------------------------------------

SIGN_CASES = [
    (parse("x^2*y", XY), -1),
    (parse("x^2*y+z^2", W), -1),
    (parse("x^2*y-z^2", W), 1),
]


@pytest.mark.parametrize("f,sigma", SIGN_CASES)
def test_sign_law_under_negation(f, sigma):
    n = f.ring.nvars
    assert signature(f).signature == sigma
    assert signature(-f).signature == (-1) ** n * sigma


def test_thom_sebastiani_with_a_square():
    base = signature(parse("x^2*y", XY)).signature
    assert signature(parse("x^2*y+z^2", W)).signature == base
    assert signature(parse("x^2*y-z^2", W)).signature == -base
    W4 = Ring(["x", "y", "z", "w"], [1, 2, 2, 2])
    assert signature(parse("x^2*y+z^2+w^2", W4)).signature == base


@pytest.mark.parametrize("f,sigma", SIGN_CASES)
def test_permutation_invariance(f, sigma):
    rng = random.Random(7)
    for _ in range(3):
        perm = list(range(f.ring.nvars))
        rng.shuffle(perm)
        R = Ring([f.ring.names[i] for i in perm], [f.ring.weights[i] for i in perm])
        assert signature(parse(str(f), R)).signature == sigma


@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
@settings(max_examples=8, deadline=None)
def test_module_dimension_under_linear_substitution(entries):
    A = [entries[0:3], entries[3:6], entries[6:9]]
    from acis.linalg import bareiss_det

    if bareiss_det(A) == 0:
        return
    f = first_quartic()
    g = substitute_linear(f, A)
    assert jacobian_module(g).dim == jacobian_module(f).dim


# -- zero-dimensional baseline and branches ------------------------------------


@pytest.mark.parametrize(
    "fs,sigma,dim",
    [(gradient(x * x + y * y), 1, 1), (gradient(x * x - y * y), -1, 1), ([x * x, y], 0, 2)],
)
def test_eisenbud_levine(fs, sigma, dim):
    form = ev_levine(list(fs))
    assert form.signature == sigma and form.dim == dim
    assert form.socle_ok
    J = Ideal(XY, list(fs))
    assert not J.contains(form.h)
    assert all(J.contains(form.h * v) for v in XY.gens())


def test_eisenbud_levine_gram_for_x2_y():
    form = ev_levine([x * x, y])
    # basis {x, 1}; h = 2x and the functional takes the value 1 on h
    assert form.labels == ["x", "1"]
    assert form.gram == [[0, Fraction(1, 2)], [Fraction(1, 2), 0]]


def test_eisenbud_levine_preconditions():
    with pytest.raises(GorensteinError):
        ev_levine([x * y, x * x])
    with pytest.raises(GorensteinError):
        ev_levine([x - 1, y])


@pytest.mark.parametrize("eq,count", [("x", 2), ("x^2-y^2", 4), ("x*y", 4), ("x^3-3*x*y^2", 6), ("y*(x^2+2*y^2)", 2)])
def test_real_branches_plane(eq, count):
    assert real_branches([parse(eq, XY)]) == count


def test_real_branches_space_curve():
    assert real_branches([X * Y, Z]) == 4


# -- non-Gorenstein torsion and the conjecture checker ----------------------------


def test_h0m_small_cases():
    assert h0m_general(Ideal(XY, [x * y, x * x])).hilbert.polynomial() == "t"
    assert h0m_general(Ideal(XY, [x, y])).hilbert.polynomial() == "1"
    with pytest.raises(GorensteinError):
        h0m_general(Ideal(XY, [x * y, x * x]), degree_bound=1)


def test_h0m_two_plane_quintic():
    R4 = Ring(["x", "y", "u", "v"])
    f = parse("(x+y)*(x*u)^2+(u+v)*(x*v)^2+(x+u+v)*(y*u)^2+(y+u)*(y*v)^2", R4)
    rep = h0m_general(Ideal(R4, gradient(f)))
    assert rep.hilbert.polynomial() == "6t^4+13t^5+15t^6+9t^7"
    assert not rep.symmetric and rep.dimension == 2


def test_conjecture_holds_for_xy_x2():
    rep = conjecture_check([x * y, x * x])
    assert all(rep.parts.values())
    assert rep.socle_hilbert.polynomial() == "t^2" and rep.hessian_in_socle


def test_conjecture_fails_for_sextic():
    rep = conjecture_check(sextic())
    assert rep.module_hilbert.polynomial() == "2t^5+3t^6+2t^7"
    assert rep.quotient_hilbert.polynomial() == "2t^10+2t^11"
    assert rep.socle_hilbert.polynomial() == "2t^11"
    assert rep.hessian_degree == 12
    assert not any(rep.parts.values())
    assert not rep.dims_equal


def test_conjecture_for_the_cubic_family():
    rep = conjecture_check(parse("(x^3+y^3)^2-x^2*y^2*z^2", XYZ))
    assert rep.module_hilbert.polynomial() == "3t^5+4t^6+3t^7"
    assert rep.quotient_hilbert.polynomial() == "5t^10+2t^11"
    assert not any(rep.parts.values())


@pytest.mark.parametrize("make", [first_quartic, second_quartic])
def test_conjecture_holds_for_quartics(make):
    rep = conjecture_check(make())
    assert all(rep.parts.values()) and rep.dims_equal


# -- primitive ideal -------------------------------------------------------------------


def test_primitive_ideal_complete_intersection():
    prim = primitive_ideal_truncated(Ideal(XY, [x, y]), 3)
    I2 = Ideal(XY, [x, y]).power(2)
    for d in range(4):
        assert len(prim[d]) == len(I2.piece_basis(d))
        assert all(I2.contains(p) for p in prim[d])


def test_primitive_ideal_of_three_axes():
    I = Ideal(XYZ, [X * Y, Y * Z, Z * X])
    prim = primitive_ideal_truncated(I, 4)
    I2 = I.power(2)
    extra = [d for d in range(5) if len(prim[d]) != len(I2.piece_basis(d))]
    assert extra == [3]
    assert [str(p) for p in prim[3]] == ["x*y*z"]


def test_primitive_ideal_of_a_line():
    assert "x^2" in [str(p) for p in primitive_ideal_truncated(Ideal(XY, [x]), 2)[2]]


def test_extended_codimension():
    I = Ideal(XYZ, [X, Y])
    # int I = I^2; J_f = (xz, y^2, x^2) misses only xy in degree 2
    rep = c_e(parse("x^2*z+y^3", XYZ), I, 6)
    assert rep.value == 1 and rep.per_degree[2] == 1 and rep.stabilized
    assert c_e(parse("x^2*y", XYZ), Ideal(XYZ, [X]), 5).value == 0


# -- pencils -------------------------------------------------------------------------


def test_pencil_of_identical_forms_is_constant():
    f = first_quartic()
    rows = pencil_signature(f, f, [0, Fraction(1, 3), 1])
    assert {r.signature for r in rows} == {-3}


def test_pencil_reports_invalid_samples():
    f = parse("z^2*(x^2+y^2)+x^4+y^4", XYZ)
    rows = pencil_signature(f, -f, [Fraction(1, 2), 1])
    assert rows[0].signature is None and rows[0].reason == "inhomogeneous"
    assert rows[1].signature is not None


@pytest.mark.parametrize("A", [[[1, 0, 0], [0, -1, 0], [0, 0, 1]], [[2, 1, 1], [1, -1, 0], [0, 1, 3]]])
def test_signature_under_orientation_reversing_substitution(A):
    # determinants -1 and -8; the Euler characteristics of the sign regions do not see orientation
    f = first_quartic()
    assert signature(substitute_linear(f, A)).signature == signature(f).signature
