import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperaut.cyclo import rational, root_of_unity
from hyperaut.poly import (
    HomogPoly,
    NotHomogeneousError,
    NotSemiInvariantError,
    ParseError,
    monomials_of_degree,
    parse,
    parse_scalar,
)

from conftest import fermat


def test_parse_fermat_cubic():
    F = parse("X0^3 + X1^3 + X2^3 + X3^3", 4)
    assert F.degree == 3 and F.num_vars == 4
    assert len(F.terms) == 4


def test_parse_klein_support(klein_quartic):
    assert klein_quartic.degree == 4
    assert set(klein_quartic.support()) == {(3, 1, 0), (0, 3, 1), (1, 0, 3)}


def test_parse_not_homogeneous():
    with pytest.raises(NotHomogeneousError) as info:
        parse("X0^2 + X1^3", 2)
    assert set(info.value.witness) == {(2, 0), (0, 3)}


def test_parse_coefficients_and_errors():
    F = parse("2/3*X0^2 - (1 + z3)*X0*X1 + X1^2", 2)
    assert F.coeff((2, 0)) == rational(2) / 3
    assert F.coeff((1, 1)) == -(rational(1) + root_of_unity(3, 1))
    with pytest.raises(ParseError):
        parse("X0^2 + X5^2", 2)
    with pytest.raises(ParseError):
        parse("X0^2 ++", 2)
    with pytest.raises(ParseError):
        parse("X0 / X1", 2)
    assert parse_scalar("z12^4") == root_of_unity(3, 1)
    assert parse_scalar("3/4 * z2") == rational(-3) / 4


def test_str_round_trip():
    text = "X0^3*X1 - 2*X1^4 + z5^2*X2^4"
    F = parse(text, 3)
    assert parse(str(F), 3) == F


def test_apply_diagonal_identity_and_fermat():
    F = fermat(4, 4)
    lam = [root_of_unity(4, 1), rational(1), rational(1), rational(1)]
    assert F.apply_diagonal(lam) == F
    assert F.apply_diagonal([rational(1)] * 4) == F


def test_apply_diagonal_single_term():
    F = parse("X0*X3^3", 5)
    lam = [root_of_unity(12, 4), root_of_unity(12, 4), root_of_unity(12, 1),
           rational(1), rational(1)]
    G = F.apply_diagonal(lam)
    assert G.coeff((1, 0, 0, 3, 0)) == root_of_unity(12, 4)


def test_apply_diagonal_rejects_zero():
    F = fermat(3, 3)
    with pytest.raises(ZeroDivisionError):
        F.apply_diagonal([rational(0), rational(1), rational(1)])


def test_semi_invariance_multiplier():
    F = fermat(4, 4)
    lam = [root_of_unity(4, 1)] + [rational(1)] * 3
    assert F.semi_invariance_multiplier(lam) == 1

    W = parse("X0^4+X1^4+X2^4+X0*X3^3+X1*X4^3", 5)
    lam = [root_of_unity(12, 4), root_of_unity(12, 4), root_of_unity(12, 1),
           rational(1), rational(1)]
    assert W.semi_invariance_multiplier(lam) == root_of_unity(12, 4)

    G = parse("X0^3 + X1^3", 3)
    with pytest.raises(NotSemiInvariantError) as info:
        G.semi_invariance_multiplier(
            [root_of_unity(3, 1), root_of_unity(5, 1), rational(1)]
        )
    assert set(info.value.witness) == {(3, 0, 0), (0, 3, 0)}


def test_multiplier_round_trip():
    W = parse("X0^4+X1^4+X2^4+X0*X3^3+X1*X4^3", 5)
    lam = [root_of_unity(12, 4), root_of_unity(12, 4), root_of_unity(12, 1),
           rational(1), rational(1)]
    t = W.semi_invariance_multiplier(lam)
    assert W.apply_diagonal(lam) == W * t


def test_scalars_act_by_degree_power():
    F = parse("X0^3*X1 + X2^4", 3)
    s = root_of_unity(8, 3)
    assert F.semi_invariance_multiplier([s, s, s]) == s ** 4


def test_support_queries(klein_quartic):
    prof = fermat(4, 4).support_queries()
    assert not any(prof.on_hypersurface)

    prof = klein_quartic.support_queries()
    assert all(prof.on_hypersurface)
    assert [sorted(p) for p in prof.partners] == [[1], [2], [0]]
    assert prof.missing_near_power == ()

    W = parse("X0^4+X1^4+X2^4+X0*X3^3+X1*X4^3", 5)
    prof = W.support_queries()
    assert prof.on_hypersurface == (False, False, False, True, True)
    assert sorted(prof.partners[3]) == [0]
    assert sorted(prof.partners[4]) == [1]

    cone = parse("X0^3+X1^3+X2^3", 4)
    assert cone.support_queries().missing_near_power == (3,)


def test_restrict():
    F = fermat(4, 4)
    R = F.restrict({0})
    assert set(R.support()) == {(0, 4, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4)}

    W = parse("X0^4+X1^4+X2^4+X0*X3^3+X1*X4^3", 5)
    assert W.restrict({0, 1, 2}).is_zero()

    P = parse("X0^3", 2)
    assert P.restrict({1}) == P
    with pytest.raises(ValueError):
        P.restrict({0, 1})


def test_partial():
    F = parse("X0^4", 2)
    assert F.partial(0) == parse("4*X0^3", 2)
    assert parse("X0^3*X1", 2).partial(1) == parse("X0^3", 2)
    assert parse("X1^4", 2).partial(0).is_zero()


def test_euler_relation():
    fixtures = [
        fermat(4, 4),
        parse("X0^3*X1 + X1^3*X2 + X2^3*X0", 3),
        parse("X0^4+X1^4+X2^4+X0*X3^3+X1*X4^3", 5),
        parse("2*X0^2*X1 - z3*X1^3 + X2^3", 3),
    ]
    for F in fixtures:
        total = HomogPoly.zero(F.num_vars, F.degree)
        for i in range(F.num_vars):
            xi = [0] * F.num_vars
            xi[i] = 1
            mono = HomogPoly(F.num_vars, 1, {tuple(xi): rational(1)})
            total = total + mono * F.partial(i)
        assert total == F * rational(F.degree)


def test_permute_variables():
    F = parse("X0^2*X1 + X2^3", 3)
    G = F.permute_variables((2, 0, 1))
    assert G == parse("X1^2*X2 + X0^3", 3)


def test_monomials_of_degree():
    assert len(monomials_of_degree(3, 2)) == 6
    assert monomials_of_degree(2, 3)[0] == (3, 0)
    for mon in monomials_of_degree(4, 5):
        assert sum(mon) == 5


@st.composite
def support_and_lambdas(draw):
    num_vars = draw(st.integers(min_value=2, max_value=4))
    degree = draw(st.integers(min_value=2, max_value=4))
    mons = draw(
        st.sets(
            st.sampled_from(monomials_of_degree(num_vars, degree)),
            min_size=1, max_size=4,
        )
    )
    def lam(_):
        lvl = draw(st.sampled_from([1, 2, 3, 4, 6]))
        return root_of_unity(lvl, draw(st.integers(min_value=0, max_value=lvl - 1)))
    lams = [lam(i) for i in range(num_vars)]
    mus = [lam(i) for i in range(num_vars)]
    return HomogPoly.from_support(sorted(mons), num_vars), lams, mus


@settings(max_examples=40, deadline=None)
@given(support_and_lambdas())
def test_apply_diagonal_multiplicative(data):
    F, lams, mus = data
    prod = [a * b for a, b in zip(lams, mus)]
    assert F.apply_diagonal(lams).apply_diagonal(mus) == F.apply_diagonal(prod)
