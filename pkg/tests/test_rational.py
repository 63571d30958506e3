from fractions import Fraction

import pytest

from bergspace.rational import GaussianRational, PiRational, sum_fractions


def test_gaussian_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(3, 4))
    b = GaussianRational(Fraction(-2), Fraction(1, 3))
    assert a + b == GaussianRational(Fraction(-3, 2), Fraction(13, 12))
    assert a - a == GaussianRational()
    assert a * GaussianRational.of(2) == GaussianRational(Fraction(1), Fraction(3, 2))
    # (1/2 + 3/4 i)(-2 + 1/3 i) = -1 - 1/4 + (1/6 - 3/2) i
    assert a * b == GaussianRational(Fraction(-5, 4), Fraction(-4, 3))


def test_gaussian_division_and_conjugate():
    a = GaussianRational(Fraction(3), Fraction(-4))
    assert a.abs_sq() == 25
    assert a.conjugate() == GaussianRational(Fraction(3), Fraction(4))
    assert (a / a) == GaussianRational.of(1)
    inv = GaussianRational.of(1) / a
    assert inv * a == GaussianRational.of(1)
    with pytest.raises(ZeroDivisionError):
        a / GaussianRational()


def test_gaussian_one_norm_bounds_modulus():
    a = GaussianRational(Fraction(3, 7), Fraction(-5, 11))
    assert float(a.one_norm()) ** 2 >= float(a.abs_sq())


def test_gaussian_rejects_floats():
    with pytest.raises(TypeError):
        GaussianRational(0.5)  # type: ignore[arg-type]


def test_gaussian_json_round_trip():
    a = GaussianRational(Fraction(-7, 3), Fraction(0, 5))
    assert GaussianRational.from_json(a.to_json()) == a


def test_pi_rational_ordering_and_float():
    third = PiRational(Fraction(1, 3))
    half = PiRational(Fraction(1, 2))
    assert third < half and half > third and third <= third
    assert float(half) == pytest.approx(1.5707963267948966)
    assert (half - half).is_zero


def test_pi_rational_complex_guard():
    twisted = PiRational(Fraction(1), Fraction(1, 2))
    assert not twisted.is_real
    with pytest.raises(ValueError):
        float(twisted)
    with pytest.raises(ValueError):
        _ = twisted < PiRational(Fraction(2))
    assert complex(twisted).imag == pytest.approx(1.5707963267948966)


def test_pi_rational_json_round_trip():
    real = PiRational(Fraction(7, 8))
    assert real.to_json() == {"pi_coeff": [7, 8]}
    assert PiRational.from_json(real.to_json()) == real
    twisted = PiRational(Fraction(1, 3), Fraction(-2, 5))
    assert PiRational.from_json(twisted.to_json()) == twisted


def test_sum_fractions_matches_fold():
    terms = [Fraction(1, n) for n in range(1, 500)]
    assert sum_fractions(terms) == sum(terms)
    assert sum_fractions([]) == 0
