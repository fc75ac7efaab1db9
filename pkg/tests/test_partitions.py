"""Non-crossing partition tests, checked against brute-force oracles.

The enumeration oracle filters all set partitions by the four-point crossing
condition; the Kreweras oracle maximizes block count over the interleaved
non-crossing condition directly.  Both are exponential and only run for
small n.
"""

import random
from itertools import combinations

import pytest

from freeconv.errors import DomainError
from freeconv.partitions import (
    MAX_GROUND_SET,
    NCPartition,
    enumerate_nc,
    is_noncrossing,
    kreweras,
    restrict_word,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def all_set_partitions(n):
    """Every set partition of {1..n} as a sorted tuple of sorted tuples."""
    if n == 0:
        yield ()
        return
    for rest in all_set_partitions(n - 1):
        yield rest + ((n,),)
        for i, block in enumerate(rest):
            yield rest[:i] + (tuple(sorted(block + (n,))),) + rest[i + 1 :]


def crossing_free(blocks):
    """Direct four-point test: no a<b<c<d with a,c and b,d split over two blocks."""
    owner = {}
    for bi, block in enumerate(blocks):
        for x in block:
            owner[x] = bi
    points = sorted(owner)
    for a, b, c, d in combinations(points, 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return False
    return True


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_bruteforce(n):
    expected = sorted(
        tuple(sorted(bl, key=lambda b: b[0]))
        for bl in all_set_partitions(n)
        if crossing_free(bl)
    )
    got = sorted(p.blocks for p in enumerate_nc(n))
    assert got == expected
    assert len(got) == CATALAN[n]


def test_enumeration_counts_larger():
    assert len(enumerate_nc(10)) == CATALAN[10]
    assert len(enumerate_nc(12)) == CATALAN[12]


def test_enumeration_cap():
    with pytest.raises(DomainError):
        enumerate_nc(MAX_GROUND_SET + 1)
    with pytest.raises(DomainError):
        enumerate_nc(0)


def test_constructor_validation():
    NCPartition(3, [[1, 3], [2]])  # fine: 2 sits in the gap
    with pytest.raises(DomainError):
        NCPartition(4, [[1, 3], [2, 4]])  # crossing
    with pytest.raises(DomainError):
        NCPartition(3, [[1, 2]])  # misses 3
    with pytest.raises(DomainError):
        NCPartition(3, [[1, 2], [2, 3]])  # duplicate
    with pytest.raises(DomainError):
        NCPartition(3, [[1, 2], [3], []])  # empty block


def test_is_noncrossing():
    assert is_noncrossing([[1, 4], [2, 3]])
    assert not is_noncrossing([[1, 3], [2, 4]])
    assert is_noncrossing([[1, 2, 5], [3, 4], [6]])
    assert not is_noncrossing([[1, 5], [2, 4, 6], [3]])
    with pytest.raises(DomainError):
        is_noncrossing([[1, 2], [4]])  # not a partition of 1..4


def test_parse_and_str():
    p = NCPartition.parse("{1,3}{2}")
    assert p == NCPartition(3, [[2], [1, 3]])
    assert str(p) == "{1,3}{2}"
    assert NCPartition.parse("{2}{1,3}", n=3) == p
    with pytest.raises(DomainError):
        NCPartition.parse("1,3}{2")


def test_kreweras_pinned():
    # the three standard witnesses
    assert kreweras(NCPartition.discrete(3)) == NCPartition.full(3)
    assert kreweras(NCPartition.full(3)) == NCPartition.discrete(3)
    assert kreweras(NCPartition(3, [[1, 2], [3]])) == NCPartition(3, [[1], [2, 3]])


def kreweras_bruteforce(p):
    """Coarsest sigma with pi on odds and sigma on evens jointly non-crossing
    in the interleaving 1, 1', 2, 2', ..., n, n'."""
    n = p.n
    pi_blocks = [tuple(2 * x - 1 for x in block) for block in p.blocks]
    best = None
    for bl in all_set_partitions(n):
        sigma = [tuple(2 * x for x in block) for block in bl]
        if crossing_free(pi_blocks + sigma):
            if best is None or len(bl) < len(best):
                best = bl
    return NCPartition(n, best)


def test_kreweras_matches_bruteforce():
    for n in range(1, 6):
        for p in enumerate_nc(n):
            got = kreweras(p)
            want = kreweras_bruteforce(p)
            assert got == want, (p, got, want)


def test_kreweras_interleaving_property():
    # for larger n, check directly that p joined with its complement is
    # non-crossing on the interleaved points (maximality is covered by the
    # brute-force comparison at small n and the block-count identity)
    for n in range(6, 9):
        for p in enumerate_nc(n):
            k = kreweras(p)
            merged = [tuple(2 * x - 1 for x in b) for b in p.blocks]
            merged += [tuple(2 * x for x in b) for b in k.blocks]
            assert crossing_free(merged)


def test_kreweras_block_count_and_involution():
    for n in range(1, 9):
        for p in enumerate_nc(n):
            k = kreweras(p)
            assert len(p) + len(k) == n + 1
            # K(K(pi)) is pi rotated; K is a bijection, so applying it twice
            # preserves block count
            assert len(kreweras(k)) == len(p)


def test_kreweras_is_bijection():
    for n in range(1, 8):
        images = {kreweras(p) for p in enumerate_nc(n)}
        assert len(images) == len(enumerate_nc(n))


def test_restrict_word():
    p = NCPartition(4, [[1, 4], [2, 3]])
    assert restrict_word((7, 8, 9, 10), p) == [(7, 10), (8, 9)]
    assert restrict_word("abcd", p) == [("a", "d"), ("b", "c")]
    with pytest.raises(DomainError):
        restrict_word((1, 2, 3), p)


def test_random_consistency():
    # canonical form survives shuffling the presentation of the blocks
    rng = random.Random(7)
    for p in enumerate_nc(6):
        blocks = [list(b) for b in p.blocks]
        rng.shuffle(blocks)
        for b in blocks:
            rng.shuffle(b)
        assert NCPartition(6, blocks) == p
