"""Truncated series tests: linear structure, Hadamard product, coordinate
functionals, serialization."""

import random

import pytest

from freeconv.errors import (
    DomainError,
    OrderError,
    ParseError,
    RingMismatchError,
    ShapeMismatchError,
)
from freeconv.partitions import NCPartition
from freeconv.randgen import rand_series
from freeconv.rings import QQ, mod_ring
from freeconv.series import (
    TruncSeries,
    all_words,
    coeff_block_product,
    hadamard_1d,
    scalar_mul,
    series_add,
)


def S(coeffs, s=1, order=4, ring=QQ):
    return TruncSeries(s, order, ring, coeffs)


def test_construction_and_coeff():
    f = S({(1,): 1, (1, 1): 5})
    assert f.coeff((1,)) == QQ(1)
    assert f.coeff((1, 1)) == QQ(5)
    assert f.coeff((1, 1, 1)) == QQ(0)  # absent within order
    with pytest.raises(OrderError):
        f.coeff((1, 1, 1, 1, 1))  # beyond order
    with pytest.raises(DomainError):
        f.coeff((2,))  # letter out of range for s=1
    with pytest.raises(DomainError):
        f.coeff(())


def test_zero_coefficients_dropped():
    f = S({(1,): 0, (1, 1): 3})
    g = S({(1, 1): 3})
    assert f == g
    assert f.support() == [(1, 1)]


def test_construction_errors():
    with pytest.raises(OrderError):
        TruncSeries(1, 2, QQ, {(1, 1, 1): 1})
    with pytest.raises(DomainError):
        TruncSeries(2, 3, QQ, {(3,): 1})
    with pytest.raises(DomainError):
        TruncSeries(0, 3, QQ)
    with pytest.raises(DomainError):
        TruncSeries(1, 0, QQ)


def test_add_basic():
    f = S({(1,): 1, (1, 2): 2}, s=2, order=2)
    z = TruncSeries.zero(2, 2, QQ)
    assert series_add(f, z) == f
    assert series_add(f, f) == S({(1,): 2, (1, 2): 4}, s=2, order=2)
    assert series_add(f, -f).is_zero()
    g = S({(1,): -1, (2,): 7}, s=2, order=2)
    assert series_add(f, g) == S({(2,): 7, (1, 2): 2}, s=2, order=2)


def test_shape_and_ring_mismatch():
    f = S({(1,): 1})
    with pytest.raises(ShapeMismatchError):
        series_add(f, S({(1,): 1}, order=3))
    with pytest.raises(ShapeMismatchError):
        series_add(f, S({(1,): 1}, s=2))
    with pytest.raises(RingMismatchError):
        series_add(f, S({(1,): 1}, ring=mod_ring(7)))


def test_hadamard_pinned():
    f = S({(1,): 1, (1, 1): 2}, order=2)
    g = S({(1,): 3, (1, 1): 5}, order=2)
    assert hadamard_1d(f, g) == S({(1,): 3, (1, 1): 10}, order=2)
    ones = TruncSeries.ones(1, 2, QQ)
    assert hadamard_1d(f, ones) == f
    assert hadamard_1d(f, TruncSeries.zero(1, 2, QQ)).is_zero()


def test_scalar_mul():
    f = S({(1,): 1, (1, 2): 3}, s=2, order=2)
    assert scalar_mul(QQ(1), f) == f
    assert scalar_mul(QQ(0), f).is_zero()
    assert scalar_mul(QQ(2), f) == S({(1,): 2, (1, 2): 6}, s=2, order=2)


def test_abelian_group_and_hadamard_randomized():
    rng = random.Random(101)
    for ring in (QQ, mod_ring(97)):
        for _ in range(40):
            s = rng.choice([1, 2, 3])
            order = rng.choice([1, 2, 3])
            f = rand_series(rng, s, order, ring, density=0.7)
            g = rand_series(rng, s, order, ring, density=0.7)
            h = rand_series(rng, s, order, ring, density=0.7)
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert f + TruncSeries.zero(s, order, ring) == f
            assert (f + (-f)).is_zero()
            assert f.hadamard(g) == g.hadamard(f)
            assert f.hadamard(g).hadamard(h) == f.hadamard(g.hadamard(h))
            assert f.hadamard(TruncSeries.ones(s, order, ring)) == f
            for w in f.support():
                assert (f + g).coeff(w) == f.coeff(w) + g.coeff(w)


def test_coeff_block_product_pinned():
    f = S({(1,): 1, (1, 1): 2}, order=2)
    assert coeff_block_product(f, (1, 1), NCPartition.discrete(2)) == QQ(1)
    assert coeff_block_product(f, (1, 1), NCPartition.full(2)) == QQ(2)
    g = S({(1, 1): 2}, order=2)  # degree-1 coefficient is 0
    assert coeff_block_product(g, (1, 1), NCPartition.discrete(2)) == QQ(0)
    with pytest.raises(ShapeMismatchError):
        coeff_block_product(f, (1,), NCPartition.discrete(2))


def test_membership_predicates():
    f = S({(1,): 1, (2,): 1, (2, 1): 5}, s=2, order=2)
    assert f.in_unit_group() and f.in_unipotent_part()
    g = S({(1,): 2, (2,): 1}, s=2, order=2)
    assert g.in_unit_group() and not g.in_unipotent_part()
    h = S({(1,): 1}, s=2, order=2)  # z2 coefficient is 0
    assert not h.in_unit_group()


def test_truncate():
    f = S({(1,): 1, (1, 1): 2, (1, 1, 1): 3}, order=3)
    g = f.truncate(2)
    assert g.order == 2
    assert g == S({(1,): 1, (1, 1): 2}, order=2)
    with pytest.raises(OrderError):
        f.truncate(4)


def test_json_roundtrip_bit_exact():
    rng = random.Random(55)
    for ring in (QQ, mod_ring(101)):
        for _ in range(20):
            f = rand_series(rng, rng.choice([1, 2]), rng.choice([2, 3]), ring, 0.6)
            text = f.dumps()
            g = TruncSeries.loads(text)
            assert g == f
            assert g.dumps() == text


def test_json_canonical_order():
    f = S({(1, 1): 1, (1,): 1, (1, 2): 1, (2,): 1}, s=2, order=2)
    obj = f.to_obj()
    words = [tuple(c["word"]) for c in obj["coeffs"]]
    assert words == [(1,), (2,), (1, 1), (1, 2)]
    assert list(obj) == ["s", "order", "ring", "coeffs"]


def test_json_errors():
    with pytest.raises(ParseError):
        TruncSeries.loads("not json")
    with pytest.raises(ParseError):
        TruncSeries.loads('{"s": 1}')
    with pytest.raises(ParseError):
        TruncSeries.loads("[1, 2]")


def test_all_words_order():
    ws = list(all_words(2, 2))
    assert ws == [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]


def test_str_display():
    f = S({(1,): 1, (1, 2): QQ("-3/2")}, s=2, order=2)
    assert str(f) == "z1 + (-3/2)*z1*z2"
    assert str(TruncSeries.zero(1, 1, QQ)) == "0"
