"""Coefficient ring tests: field axioms, coercion, serialization."""

import random
from fractions import Fraction

import pytest

from freeconv.errors import (
    DomainError,
    NotInvertibleError,
    ParseError,
    RingMismatchError,
)
from freeconv.rings import QQ, RingDescriptor, mod_ring


def test_descriptor_identity():
    assert mod_ring(7) is mod_ring(7)
    assert QQ == RingDescriptor(None)
    assert mod_ring(7) != mod_ring(11)
    assert QQ != mod_ring(7)


def test_descriptor_serialize_parse():
    assert QQ.serialize() == "rational"
    assert mod_ring(101).serialize() == "mod:101"
    assert RingDescriptor.parse("rational") is QQ
    assert RingDescriptor.parse("mod:101") is mod_ring(101)
    with pytest.raises(DomainError):
        RingDescriptor.parse("mod:10")  # not prime
    with pytest.raises(ParseError):
        RingDescriptor.parse("gf:7")  # unknown scheme


def test_q_algebra_flag():
    assert QQ.is_q_algebra
    assert not mod_ring(5).is_q_algebra


def test_rational_coercion():
    assert QQ(2) + QQ(3) == QQ(5)
    assert QQ("3/4") * QQ(4) == QQ(3)
    assert QQ(Fraction(1, 3)).serialize() == "1/3"
    with pytest.raises(DomainError):
        QQ(0.5)


def test_modp_coercion():
    R = mod_ring(7)
    assert R(10) == R(3)
    assert R("3/4") == R(3) / R(4)
    # 1/7 has no image mod 7
    with pytest.raises(NotInvertibleError):
        R(Fraction(1, 7))


def test_division():
    assert QQ(1) / QQ(3) == QQ("1/3")
    with pytest.raises(NotInvertibleError):
        QQ(1) / QQ(0)
    R = mod_ring(11)
    assert R(1) / R(3) == R(4)  # 3*4 = 12 = 1 mod 11
    with pytest.raises(NotInvertibleError):
        R(5) / R(0)


def test_pow():
    assert QQ(2) ** 10 == QQ(1024)
    assert QQ(2) ** -2 == QQ("1/4")
    R = mod_ring(13)
    assert R(2) ** 12 == R(1)  # Fermat
    assert R(5) ** -1 == R(8)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        QQ(1) + mod_ring(7)(1)
    with pytest.raises(RingMismatchError):
        mod_ring(5)(1) * mod_ring(7)(1)


def test_predicates():
    assert QQ(0).is_zero and not QQ(0).is_unit
    assert QQ(1).is_one
    assert QQ("2/3").is_unit and not QQ("2/3").is_integer
    assert QQ(-4).is_integer
    R = mod_ring(3)
    assert R(2).is_unit and R(0).is_zero


def test_serialize_roundtrip():
    for text in ["0", "1", "-7", "3/4", "-22/7"]:
        assert QQ(QQ(text).serialize()) == QQ(text)
    R = mod_ring(97)
    for text in ["0", "45", "96"]:
        assert R(R(text).serialize()) == R(text)


def test_field_axioms_randomized():
    # a few thousand random triples over both kinds of ring
    rng = random.Random(20260822)
    rings = [QQ, mod_ring(2), mod_ring(97), mod_ring(10**9 + 7)]

    def sample(R):
        if R is QQ:
            num = rng.randint(-50, 50)
            den = rng.randint(1, 20)
            return R(Fraction(num, den))
        return R(rng.randrange(R.modulus))

    for R in rings:
        zero, one = R(0), R(1)
        for _ in range(250):
            a, b, c = sample(R), sample(R), sample(R)
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + zero == a
            assert a * one == a
            assert a + (-a) == zero
            assert a - b == a + (-b)
            if not b.is_zero:
                assert (a / b) * b == a
                assert b * b.inverse() == one
