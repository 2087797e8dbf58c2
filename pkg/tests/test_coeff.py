from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from contrakit.coeff import QQ, field_make, prime_field, quadratic_ext, rationals, scalar_invert
from contrakit.errors import FieldError, NotInvertibleError


def test_rational_inverse_of_two():
    assert scalar_invert(rationals()(2)) == Fraction(1, 2)


def test_prime_field_inverse():
    F = prime_field(7)
    assert scalar_invert(F(3)) == F(5)
    assert F(3) * F(5) == F.one


@pytest.mark.parametrize("spec", ["GF(2)", {"kind": "prime", "p": 2}])
def test_characteristic_two_rejected(spec):
    with pytest.raises(FieldError):
        field_make(spec)


def test_nonprime_modulus_rejected():
    with pytest.raises(FieldError):
        prime_field(9)


def test_zero_t0_rejected():
    with pytest.raises(FieldError):
        quadratic_ext(QQ, 0)


def test_invert_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_invert(QQ(0))
    with pytest.raises(ZeroDivisionError):
        scalar_invert(prime_field(5)(0))


def test_quadratic_inverse_of_generator():
    K = quadratic_ext(QQ, 2, "x")
    inv = scalar_invert(K.gen)
    assert inv == K.gen * K(Fraction(1, 2))
    assert K.gen * inv == K.one


def test_split_extension_reports_factor():
    K = quadratic_ext(QQ, 1, "x")
    with pytest.raises(NotInvertibleError) as info:
        scalar_invert(K.one + K.gen)
    # (1 + x)(1 - x) = 0
    assert info.value.factor * (K.one + K.gen) == K.zero


def test_quadratic_printing():
    K = quadratic_ext(QQ, 3, "r")
    assert str(K(2) - K.gen * 3) == "(2 - 3*r)"
    assert str(-K.gen) == "-r"


def test_field_round_trip_json():
    for spec in ["QQ", "GF(7)", {"kind": "quadratic", "base": "GF(5)", "t0": 2, "gen": "i"}]:
        F = field_make(spec)
        assert field_make(F.to_json()) == F


def test_sqrt_in_prime_field():
    F = prime_field(7)
    r = F.sqrt(F(2))
    assert r * r == F(2)
    assert F.sqrt(F(3)) is None


fracs = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10**6)


@given(fracs, fracs, fracs)
def test_rational_field_axioms(a, b, c):
    F = QQ
    a, b, c = F(a), F(b), F(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * scalar_invert(a) == F.one
    # canonical form
    assert (a * b).denominator > 0


@given(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_prime_field_axioms(x, y, z):
    F = prime_field(11)
    a, b, c = F(x), F(y), F(z)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if a != F.zero:
        assert a * scalar_invert(a) == F.one


@given(fracs, fracs, st.sampled_from([2, 3, -1, 5]))
def test_quadratic_norm_identity(a, b, t0):
    K = quadratic_ext(QQ, t0, "x")
    z = K(a) + K.gen * K(b)
    zbar = K(a) - K.gen * K(b)
    assert z * zbar == K(a * a - t0 * b * b)
    if z != K.zero:
        assert z * scalar_invert(z) == K.one


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_quadratic_over_prime_field_associative(a, b, c, d):
    F = prime_field(7)
    K = quadratic_ext(F, 3, "x")  # 3 is a non-square mod 7
    u = K(F(a)) + K.gen * K(F(b))
    v = K(F(c)) + K.gen * K(F(d))
    assert u * v == v * u
    assert (u * v) * u == u * (v * u)
    if u != K.zero:
        assert u * scalar_invert(u) == K.one
