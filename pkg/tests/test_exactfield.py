"""Field arithmetic: golden-ratio relations, axioms, sign, sqrt, io."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from helpers import rand_nonzero_scalar, rand_scalar
from spinroots.exactfield import (ONE, SIGMA, SQRT2, SQRT5, SQRT10, TAU, ZERO,
                                  FieldScalar)


def test_tau_sigma_encodings():
    assert TAU.to_json() == ["1/2", "0/1", "1/2", "0/1"]
    assert SIGMA.to_json() == ["1/2", "0/1", "-1/2", "0/1"]


def test_addition_basics():
    assert TAU + SIGMA == ONE
    x = FieldScalar(3, Fraction(-2, 7), 1, 0)
    assert ZERO + x == x
    half_sqrt2 = FieldScalar(0, Fraction(1, 2))
    assert half_sqrt2 + half_sqrt2 == SQRT2


def test_multiplication_basics():
    assert TAU * TAU == TAU + ONE
    assert SIGMA * SIGMA == SIGMA + ONE
    assert SQRT2 * SQRT2 == FieldScalar(2)
    assert SQRT5 * SQRT5 == FieldScalar(5)
    assert SQRT2 * SQRT5 == SQRT10
    assert SQRT10 * SQRT10 == FieldScalar(10)
    # ((1+sqrt5)/2)((1-sqrt5)/2) = (1-5)/4
    assert TAU * SIGMA == -ONE


def test_inverse_values():
    assert SQRT2.inverse() == FieldScalar(0, Fraction(1, 2))
    assert TAU.inverse() == TAU - ONE
    assert ONE.inverse() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_sign_values():
    assert SIGMA.sign() == -1
    assert ZERO.sign() == 0
    assert (TAU - ONE).sign() == 1
    assert (SQRT2 - FieldScalar(Fraction(141421, 100000))).sign() == 1
    assert (SQRT2 - FieldScalar(Fraction(141422, 100000))).sign() == -1


def test_field_axioms_randomized():
    rng = random.Random(20120526)
    for _ in range(1000):
        x = rand_scalar(rng)
        y = rand_scalar(rng)
        z = rand_scalar(rng)
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inverse() == ONE


def test_order_total_and_compatible():
    rng = random.Random(7)
    for _ in range(300):
        x = rand_scalar(rng, 5)
        y = rand_scalar(rng, 5)
        assert (x < y) + (x == y) + (y < x) == 1
        if x.sign() > 0 and y.sign() > 0:
            assert (x + y).sign() > 0
            assert (x * y).sign() > 0


def test_sqrt_known_values():
    assert FieldScalar(4).sqrt() == FieldScalar(2)
    assert FieldScalar(2).sqrt() == SQRT2
    assert FieldScalar(5).sqrt() == SQRT5
    assert FieldScalar(10).sqrt() == SQRT10
    assert FieldScalar(Fraction(1, 2)).sqrt() == FieldScalar(0, Fraction(1, 2))
    assert (TAU + ONE).sqrt() == TAU        # tau^2 = tau + 1
    assert ZERO.sqrt() == ZERO
    assert FieldScalar(3).sqrt() is None
    assert FieldScalar(-1).sqrt() is None
    assert TAU.sqrt() is None


def test_sqrt_of_squares_randomized():
    rng = random.Random(11)
    for _ in range(300):
        x = rand_scalar(rng, 5)
        root = (x * x).sqrt()
        assert root is not None
        assert root == (x if x.sign() >= 0 else -x)


def test_division():
    rng = random.Random(13)
    for _ in range(200):
        x = rand_scalar(rng, 5)
        y = rand_nonzero_scalar(rng, 5)
        assert (x / y) * y == x
    assert 1 / TAU == TAU - ONE


def test_galois_conjugations():
    x = FieldScalar(1, 2, 3, 4)
    assert x.conj_sqrt2() == FieldScalar(1, -2, 3, -4)
    assert x.conj_sqrt5() == FieldScalar(1, 2, -3, -4)
    rng = random.Random(17)
    for _ in range(100):
        a = rand_scalar(rng, 5)
        b = rand_scalar(rng, 5)
        assert (a * b).conj_sqrt2() == a.conj_sqrt2() * b.conj_sqrt2()
        assert (a * b).conj_sqrt5() == a.conj_sqrt5() * b.conj_sqrt5()


def test_json_round_trip():
    rng = random.Random(19)
    for _ in range(200):
        x = rand_scalar(rng)
        assert FieldScalar.from_json(x.to_json()) == x
    assert FieldScalar.from_json(["1/2", "0/1", "1/2", "0/1"]) == TAU
    with pytest.raises(ValueError):
        FieldScalar.from_json(["1/2"])


def test_hash_consistency():
    assert hash(FieldScalar(Fraction(2, 4))) == hash(FieldScalar(Fraction(1, 2)))
    assert len({TAU, FieldScalar(Fraction(1, 2), 0, Fraction(1, 2), 0)}) == 1


def test_str_rendering():
    assert str(TAU) == "τ"
    assert str(-TAU) == "-τ"
    assert str(SIGMA) == "σ"
    assert str(ZERO) == "0"
    assert str(FieldScalar(Fraction(1, 2), 0, Fraction(3, 2), 0)) \
        == "1/2 + 3/2·√5"
    assert str(-SQRT2) == "-√2"


def test_approx_display_only():
    assert abs(TAU.approx() - 1.618033988749895) < 1e-12
    assert abs(SQRT10.approx() - 10 ** 0.5) < 1e-12


def test_immutability():
    with pytest.raises(AttributeError):
        TAU.a = Fraction(1)
