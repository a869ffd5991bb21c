from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superweyl.catalog import AlgebraSpec, Family, build_catalog
from superweyl.rootspace import (
    GramForm,
    Scalar,
    is_isotropic,
    pairing,
    rank,
    solve_coefficients,
)

from conftest import catalog, vec

small_q = st.fractions(min_value=-8, max_value=8, max_denominator=6)
scalars = st.builds(Scalar, small_q, small_q)
consts = st.builds(Scalar, small_q)


@given(scalars, scalars, scalars)
def test_scalar_addition_is_associative_and_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == Scalar()


@given(scalars, consts, consts)
def test_scalar_distributes_over_constants(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert b * c == c * b


@given(scalars, small_q)
def test_scalar_evaluation_is_a_homomorphism(a, t):
    assert (a + a).evaluate(t) == 2 * a.evaluate(t)
    assert (-a).evaluate(t) == -a.evaluate(t)


def test_scalar_zero_needs_both_parts():
    assert Scalar().is_zero()
    assert not Scalar(0, 1).is_zero()
    assert not Scalar(1, 0).is_zero()
    # 1 + alpha vanishes only at alpha = -1, which generic alpha never is
    assert not Scalar(1, 1).is_zero()


def test_product_of_two_alpha_terms_is_refused():
    with pytest.raises(ArithmeticError):
        Scalar(0, 1) * Scalar(1, 1)


def test_ratio():
    assert Scalar(2, 4).ratio(Scalar(1, 2)) == 2
    assert Scalar(3).ratio(Scalar(-6)) == Fraction(-1, 2)
    with pytest.raises(ArithmeticError):
        Scalar(1, 1).ratio(Scalar(1, 2))
    with pytest.raises(ZeroDivisionError):
        Scalar(1).ratio(Scalar())


def test_rootvector_arithmetic_and_pairs():
    u, v = vec(1, Fraction(1, 2)), vec(-1, Fraction(1, 2))
    assert u + v == vec(0, 1)
    assert u - v == vec(2, 0)
    assert (-u).coords == (-1, Fraction(-1, 2))
    assert u.as_pairs() == [[1, 1], [1, 2]]
    assert vec(0, 3).support() == [1]
    with pytest.raises(ValueError):
        u + vec(1, 2, 3)


def test_gram_form_rejects_asymmetric():
    with pytest.raises(ValueError):
        GramForm(((Scalar(1), Scalar(2)), (Scalar(3), Scalar(1))))


def test_pairing_dimension_mismatch():
    form = GramForm.diagonal([1, -1])
    with pytest.raises(ValueError):
        pairing(form, vec(1, 0), vec(1, 0, 0))


def test_gl_form_signs():
    cat = catalog("gl(1|2)")
    d, e = vec(1, 0, 0), vec(0, 1, 0)
    assert pairing(cat.form, d, d) == Scalar(1)
    assert pairing(cat.form, e, e) == Scalar(-1)
    assert is_isotropic(cat.form, d - e)


ALGEBRAS = ("gl(2|2)", "spo(4|3)", "spo(2|4)", "D(2,1)", "F(4)", "G(3)")


@pytest.mark.parametrize("name", ALGEBRAS)
def test_pairing_symmetric_on_roots(name):
    cat = catalog(name)
    roots = cat.sorted_roots()
    for u in roots:
        for v in roots:
            assert pairing(cat.form, u, v) == pairing(cat.form, v, u)


@pytest.mark.parametrize("name", ALGEBRAS)
@given(data=st.data())
def test_pairing_is_bilinear(name, data):
    cat = catalog(name)
    roots = cat.sorted_roots()
    u, v, w = (data.draw(st.sampled_from(roots)) for _ in range(3))
    c = data.draw(small_q)
    f = cat.form
    assert pairing(f, u + v, w) == pairing(f, u, w) + pairing(f, v, w)
    assert pairing(f, u.scale(c), w) == pairing(f, u, w) * c


@pytest.mark.parametrize("name", ("gl(2|3)", "spo(4|5)", "F(4)", "G(3)"))
def test_alpha_part_vanishes_outside_d21(name):
    cat = catalog(name)
    roots = cat.sorted_roots()
    assert all(pairing(cat.form, u, v).is_constant() for u in roots for v in roots)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(lambda a: a not in (0, -1)))
def test_generic_alpha_evaluates_like_concrete_alpha(alpha):
    gen = build_catalog(AlgebraSpec(Family.D21A))
    conc = build_catalog(AlgebraSpec(Family.D21A, alpha=alpha))
    assert gen.dimension == conc.dimension
    for u in gen.sorted_roots():
        for v in gen.standard_pi:
            assert pairing(gen.form, u, v).evaluate(alpha) == pairing(conc.form, u, v).evaluate(0)


def test_rank_and_solve():
    a, b = vec(1, -1, 0), vec(0, 1, -1)
    assert rank([a, b, a + b]) == 2
    assert rank([]) == 0
    assert solve_coefficients([a, b], a.scale(2) - b) == [2, -1]
    assert solve_coefficients([a, b], vec(1, 0, 0)) is None


@pytest.mark.parametrize("name", ("gl(2|3)", "spo(4|5)", "spo(2|4)", "F(4)", "G(3)", "D(2,1)"))
def test_root_denominators_are_at_most_two(name):
    for r in catalog(name).roots:
        assert all(c.denominator in (1, 2) for c in r.coords)
