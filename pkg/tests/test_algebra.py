import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from connect4 import (
    GF,
    QQ,
    FieldMismatch,
    InvalidBasis,
    LexPolynomial,
    ReducedGB,
    ValidationError,
    extend_basis,
    normal_form,
    vanishing_ideal_gb,
)
from connect4.fields import GFp2Element, ModP, QuadraticExtension, is_prime, parse_field
from connect4.generators import random_point_set, realize_points
from connect4.polynomial import is_groebner, is_reduced
from connect4.staircase import random_standard_set

from conftest import TETRA, ss


def x(i, dim=2, field=QQ):
    return LexPolynomial.variable(field, dim, i)


def one_var_basis(coeffs, field=QQ):
    """Basis {x^r + c_{r-1} x^{r-1} + ... + c_0} in one variable."""
    r = len(coeffs)
    terms = {(r,): 1, **{(k,): c for k, c in enumerate(coeffs)}}
    return ReducedGB(ss(*[(k,) for k in range(r)]), {(r,): LexPolynomial(field, 1, terms)}, field)


# -- scalars -------------------------------------------------------------------


def test_prime_field_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(3) / F(5) == F(2)
    assert F(2) ** -1 == F(4)
    assert F(-1) == F(6)
    assert int(F(10)) == 3


def test_no_mixing_of_moduli_or_rationals():
    with pytest.raises(FieldMismatch):
        ModP(1, 7) + ModP(1, 11)
    with pytest.raises(FieldMismatch):
        ModP(1, 7) + Fraction(1, 2)


def test_field_parsing():
    assert parse_field("Q") == QQ
    assert parse_field("F101") == GF(101)
    assert parse_field("Fp:13") == GF(13)
    with pytest.raises(ValidationError):
        parse_field("F100")
    assert is_prime(101) and not is_prime(91)


def test_rational_coefficient_json():
    assert QQ.coef_to_json(Fraction(-3, 4)) == "-3/4"
    assert QQ.coef_to_json(Fraction(5)) == 5
    assert QQ.coef_from_json("-3/4") == Fraction(-3, 4)


def test_quadratic_extension_frobenius():
    K = QuadraticExtension(7)
    a = K(2, 3)
    assert a.frobenius().frobenius() == a
    assert (a * a.frobenius()).frobenius() == a * a.frobenius()
    assert a * a.inverse() == K.one
    assert a ** 48 == K.one


# -- polynomials -----------------------------------------------------------------


def test_difference_of_squares():
    x1 = x(1, 1)
    assert (x1 + 1) * (x1 - 1) == x1 * x1 - 1


def test_add_zero():
    p = x(1) * x(2) + 3
    assert p + LexPolynomial.zero(QQ, 2) == p


def test_characteristic_two():
    F = GF(2)
    assert (x(2, field=F) * 2).is_zero()


def test_field_mismatch_in_arithmetic():
    with pytest.raises(FieldMismatch):
        x(1) + x(1, field=GF(5))


def test_terms_are_lex_ordered():
    q = x(2) * x(2) * x(2) + x(1) + 1
    assert q.leading_exponent() == (1, 0)
    assert list(q.support()) == [(1, 0), (0, 3), (0, 0)]


def test_string_form():
    p = x(1) * x(1) - x(2) * 3 + Fraction(1, 2)
    assert str(p) == "x1^2 - 3*x2 + 1/2"
    assert str(-x(2)) == "-x2"


def test_json_round_trip_polynomial():
    p = x(1) * x(2) - Fraction(7, 3)
    assert LexPolynomial.from_json(p.to_json()) == p


# -- normal forms ------------------------------------------------------------------


def test_cube_mod_square_minus_one():
    G = one_var_basis([-1, 0])
    x1 = x(1, 1)
    assert normal_form(x1 * x1 * x1, G) == x1
    assert extend_basis(G, (3,)) == x1 * x1 * x1 - x1


def test_members_reduce_to_zero_and_staircase_is_fixed():
    A = random_point_set(random.Random(3), QQ, 3, 7)
    G = vanishing_ideal_gb(A)
    for f in G.polynomials():
        assert normal_form(f, G).is_zero()
    for b in G.delta:
        m = LexPolynomial.monomial(QQ, b)
        assert normal_form(m, G) == m
    for a, f in G.entries.items():
        assert extend_basis(G, a) is f


def test_extend_basis_rejects_staircase_exponent():
    G = one_var_basis([-1, 0])
    with pytest.raises(ValidationError):
        extend_basis(G, (1,))


def test_invalid_basis_shapes():
    delta = ss((0,), (1,))
    with pytest.raises(InvalidBasis):
        ReducedGB(delta, {(3,): LexPolynomial.monomial(QQ, (3,))}, QQ)
    with pytest.raises(InvalidBasis):
        ReducedGB(delta, {(2,): LexPolynomial(QQ, 1, {(2,): 2})}, QQ)
    with pytest.raises(InvalidBasis):
        ReducedGB(delta, {(2,): LexPolynomial(QQ, 1, {(2,): 1, (3,): 1})}, QQ)


def random_poly(rng, dim, field=QQ, terms=6, top=4):
    return LexPolynomial(
        field,
        dim,
        {tuple(rng.randint(0, top) for _ in range(dim)): rng.randint(-5, 5) for _ in range(terms)},
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_normal_form_idempotent_and_linear(seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 3)
    delta = random_standard_set(rng, dim, rng.randint(1, 7))
    G = vanishing_ideal_gb(realize_points(rng, QQ, delta))
    p, q = random_poly(rng, dim), random_poly(rng, dim)
    a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    nf = normal_form(p, G)
    assert normal_form(nf, G) == nf
    assert all(e in G.delta for e in nf.terms)
    assert normal_form(p * a + q, G) == nf * a + normal_form(q, G)
    assert normal_form(p - nf, G).is_zero()


def test_point_ideal_bases_are_reduced_groebner():
    rng = random.Random(11)
    for _ in range(20):
        G = vanishing_ideal_gb(random_point_set(rng, QQ, rng.randint(1, 3), rng.randint(1, 8)))
        assert is_reduced(G)
        assert is_groebner(G)


def test_non_groebner_shape_is_detected():
    # x1^2, x1*x2 - x1... shape-valid data that is not a Groebner basis
    delta = ss((0, 0), (0, 1), (1, 0))
    F = {
        (0, 2): LexPolynomial(QQ, 2, {(0, 2): 1}),
        (1, 1): LexPolynomial(QQ, 2, {(1, 1): 1, (0, 1): 1}),
        (2, 0): LexPolynomial(QQ, 2, {(2, 0): 1, (0, 0): 1}),
    }
    assert not is_groebner(ReducedGB(delta, F, QQ))


def vandermonde_extension(points, delta, alpha):
    """Solve for x^alpha - sum_b c_b x^b vanishing on the points (sympy)."""
    M = sympy.Matrix([[sympy.prod([sympy.Rational(c) ** k for c, k in zip(p, b)]) for b in delta] for p in points])
    v = sympy.Matrix([sympy.prod([sympy.Rational(c) ** k for c, k in zip(p, alpha)]) for p in points])
    sol = M.LUsolve(v)
    return {b: Fraction(int(s.p), int(s.q)) for b, s in zip(delta, sol) if s != 0}


def test_extend_basis_matches_linear_solve():
    rng = random.Random(5)
    for _ in range(15):
        dim = rng.randint(1, 3)
        A = random_point_set(rng, QQ, dim, rng.randint(1, 6))
        G = vanishing_ideal_gb(A)
        elems = list(G.delta.elements)
        alphas = list(G.entries) + [tuple(rng.randint(0, 3) for _ in range(dim)) for _ in range(3)]
        for alpha in alphas:
            if alpha in G.delta:
                continue
            want = vandermonde_extension(A.points, elems, alpha)
            got = extend_basis(G, alpha)
            assert {e: -c for e, c in got.tail().terms.items()} == want


def test_rational_and_prime_staircases_agree():
    rng = random.Random(9)
    F = GF(10007)
    for _ in range(30):
        A = random_point_set(rng, QQ, rng.randint(1, 3), rng.randint(1, 9))
        B = type(A)(A.dim, F, tuple(tuple(int(c) for c in p) for p in A.points))
        assert vanishing_ideal_gb(A).delta == vanishing_ideal_gb(B).delta
