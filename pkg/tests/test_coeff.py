"""Tests for the exact coefficient arithmetic layer.

Covers the rational / prime-field scalars, the rational-function field
K(x) with its canonical (monic-denominator) form, the Laurent-expansion
helpers around x = 0, quantum integers, and the parameter container with
its deformation (x-shifted) and specialization maps.
"""

import fractions

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclohecke.coeff import (
    QQ,
    GenericParams,
    LocalSplit,
    PoleAtZeroError,
    PrimeField,
    RatFunc,
    RationalField,
    RationalFunctionField,
    laurent_coeff,
    order_at_zero,
    principal_coeff,
    quantum_integer,
    scalar_from_json,
    scalar_to_json,
    specialize_at_zero,
    split_at_zero,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
).map(lambda f: QQ(f))


# ---------------------------------------------------------------------------
# base fields
# ---------------------------------------------------------------------------


def test_rational_field_construction():
    assert QQ(3) + QQ("1/2") == QQ("7/2")
    assert QQ(fractions.Fraction(2, 4)) == QQ("1/2")
    assert QQ.zero == QQ(0) and QQ.one == QQ(1)


def test_rational_field_is_exact():
    third = QQ(1) / QQ(3)
    assert third * QQ(3) == QQ.one
    assert third + third + third == QQ.one


def test_prime_field_arithmetic():
    F = PrimeField(5)
    a = F(7)
    assert a == F(2)
    assert a + F(3) == F.zero
    assert F(2) * F(3) == F.one
    assert F(4) ** 2 == F.one


def test_prime_field_inverse():
    F = PrimeField(7)
    for k in range(1, 7):
        assert F(k) * (F.one / F(k)) == F.one


def test_prime_field_rejects_nonprime():
    with pytest.raises(ValueError):
        PrimeField(6)


@given(a=rationals, b=rationals, c=rationals)
@settings(max_examples=60, deadline=None)
def test_rational_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


# ---------------------------------------------------------------------------
# rational function field
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def KX():
    return RationalFunctionField(RationalField())


def test_ratfunc_canonical_monic_denominator(KX):
    x = KX.x
    f = (x + KX(1)) / (KX(2) * x + KX(2))
    # (x+1)/(2x+2) reduces to 1/2 with denominator 1.
    assert f == KX("1/2")
    assert f.den == (QQ(1),)


def test_ratfunc_reduction_cancels_common_factors(KX):
    x = KX.x
    f = (x * x - KX(1)) / (x - KX(1))
    assert f == x + KX(1)


def test_ratfunc_parse_and_eq(KX):
    assert KX("3/4") == KX(3) / KX(4)
    assert KX([0, 1]) == KX.x
    assert KX(RatFunc((QQ(1),), (QQ(1),), KX)) == KX.one


def test_ratfunc_zero_divisor_guard(KX):
    with pytest.raises(ZeroDivisionError):
        KX.one / KX.zero


@given(
    p=st.lists(rationals, min_size=1, max_size=4),
    q=st.lists(rationals, min_size=1, max_size=4),
)
@settings(max_examples=50, deadline=None)
def test_ratfunc_field_axioms(p, q):
    KX = RationalFunctionField(RationalField())
    f, g = KX(p), KX(q)
    assert f + g == g + f
    assert f * g == g * f
    assert f - f == KX.zero
    if not g == KX.zero:
        assert (f / g) * g == f


# ---------------------------------------------------------------------------
# behaviour at x = 0
# ---------------------------------------------------------------------------


def test_order_at_zero(KX):
    x = KX.x
    assert order_at_zero(x * x * (KX(1) + x)) == 2
    assert order_at_zero((KX(1) + x) / x) == -1
    assert order_at_zero(KX(5)) == 0


def test_laurent_coefficients_of_simple_pole(KX):
    x = KX.x
    f = (KX(1) + x) / (x * x)  # = x^-2 + x^-1 exactly
    assert laurent_coeff(f, -2) == QQ(1)
    assert laurent_coeff(f, -1) == QQ(1)
    assert laurent_coeff(f, 0) == QQ(0)
    assert laurent_coeff(f, 3) == QQ(0)


def test_laurent_coefficients_of_geometric_series(KX):
    x = KX.x
    f = KX.one / (KX.one - x)  # = 1 + x + x^2 + ...
    for k in range(5):
        assert laurent_coeff(f, k) == QQ(1)
    assert laurent_coeff(f, -1) == QQ(0)


def test_split_at_zero_parts(KX):
    x = KX.x
    f = (KX(1) + x) / (x * x) + x
    parts = split_at_zero(f)
    assert isinstance(parts, LocalSplit)
    assert parts.principal == KX.one / x + KX.one / (x * x)
    assert parts.regular == x
    assert parts.principal + parts.regular == f


def test_principal_coeff_matches_laurent(KX):
    x = KX.x
    f = KX(3) / (x * x) + KX(7) / x + KX(11)
    assert principal_coeff(f, 1) == QQ(7)
    assert principal_coeff(f, 2) == QQ(3)
    assert laurent_coeff(f, 0) == QQ(11)


def test_specialize_at_zero_regular_point(KX):
    x = KX.x
    f = (KX(2) + x) / (KX(1) + x)
    assert specialize_at_zero(f) == QQ(2)


def test_specialize_at_zero_raises_on_pole(KX):
    x = KX.x
    with pytest.raises(PoleAtZeroError):
        specialize_at_zero(KX.one / x)


@given(st.lists(rationals, min_size=1, max_size=5))
@settings(max_examples=50, deadline=None)
def test_split_recomposes(coeffs):
    KX = RationalFunctionField(RationalField())
    x = KX.x
    f = KX(coeffs) / (x * x)
    parts = split_at_zero(f)
    assert parts.principal + parts.regular == f
    assert parts.regular == KX.zero or order_at_zero(parts.regular) >= 0


# ---------------------------------------------------------------------------
# quantum integers
# ---------------------------------------------------------------------------


def test_quantum_integer_generic_point():
    xi = QQ(2)
    assert quantum_integer(0, xi) == QQ(0)
    assert quantum_integer(1, xi) == QQ(1)
    assert quantum_integer(3, xi) == QQ(7)  # 1 + 2 + 4
    assert quantum_integer(-1, xi) == QQ("-1/2")


def test_quantum_integer_degenerates_to_k_at_one():
    xi = QQ(1)
    for k in range(-4, 5):
        assert quantum_integer(k, xi) == QQ(k)


def test_quantum_integer_symbolic():
    KX = RationalFunctionField(RationalField())
    xi = KX.x + KX(1)
    expected = xi + KX.one  # [2] = 1 + xi
    assert quantum_integer(2, xi) == expected


# ---------------------------------------------------------------------------
# parameter container
# ---------------------------------------------------------------------------


def test_params_plain_point():
    p = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)))
    assert p.n == 2 and p.ell == 2
    assert p.xi == QQ(3)
    assert p.Q == (QQ(1), QQ(2))
    assert not p.generic


def test_params_deformed_shifts_by_x_powers():
    p = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)), generic=True)
    x = p.field.x
    assert p.xi == x + p.field(3)
    # the i-th cyclotomic parameter is shifted by x^(i*n)
    assert p.Q[0] == x ** 2 + p.field(1)
    assert p.Q[1] == x ** 4 + p.field(2)


def test_params_specialize_scalar_undoes_deformation():
    p = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)), generic=True)
    assert p.specialize_scalar(p.xi) == QQ(3)
    assert p.specialize_scalar(p.Q[0]) == QQ(1)
    assert p.specialize_scalar(p.Q[1]) == QQ(2)


def test_params_version_roundtrip():
    p = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)))
    up = p.generic_version()
    assert up.generic
    assert up.specialized_version() == p
    assert up.xi0 == p.xi and up.Q0 == p.Q


def test_params_embed_base():
    plain = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)))
    deformed = plain.generic_version()
    assert plain.embed_base(QQ("1/2")) == QQ("1/2")
    assert deformed.embed_base(QQ("1/2")) == deformed.field("1/2")


def test_params_equality_and_hash():
    a = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)))
    b = GenericParams(2, 2, QQ(3), (QQ(1), QQ(2)))
    c = GenericParams(2, 2, QQ(3), (QQ(1), QQ(3)))
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert a != a.generic_version()


def test_params_prime_field_base():
    F = PrimeField(5)
    p = GenericParams(2, 2, F(1), (F(2), F(3)), base=F)
    assert p.xi == F(1)
    assert p.embed_base(F(4)) == F(4)


# ---------------------------------------------------------------------------
# scalar JSON round-trip
# ---------------------------------------------------------------------------


def test_scalar_json_rational():
    v = QQ("-7/3")
    data = scalar_to_json(v)
    assert scalar_from_json(data, RationalField()) == v


def test_scalar_json_prime_field():
    F = PrimeField(7)
    v = F(5)
    assert scalar_from_json(scalar_to_json(v), F) == v


def test_scalar_json_rational_function():
    KX = RationalFunctionField(RationalField())
    x = KX.x
    v = (x * x - KX(3)) / (x + KX(7))
    assert scalar_from_json(scalar_to_json(v), KX) == v


@given(
    p=st.lists(rationals, min_size=1, max_size=4),
    q=st.lists(rationals, min_size=1, max_size=4),
)
@settings(max_examples=40, deadline=None)
def test_scalar_json_roundtrip_property(p, q):
    KX = RationalFunctionField(RationalField())
    den = KX(q)
    if den == KX.zero:
        den = KX.one
    v = KX(p) / den
    assert scalar_from_json(scalar_to_json(v), KX) == v
