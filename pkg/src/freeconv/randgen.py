"""Seeded random generators for coefficients and series.

Used by the verification suites and by the test suite, so both sample the
same distributions.  All functions take a ``random.Random`` instance and are
deterministic given its state.
"""

from __future__ import annotations

import random
from typing import Sequence

from .distributions import JointDistribution
from .rings import RingDescriptor, RingElement
from .series import TruncSeries, all_words

__all__ = [
    "rand_element",
    "rand_unit",
    "rand_series",
    "rand_unit_series",
    "rand_unipotent_series",
    "rand_distribution",
]


def rand_element(rng: random.Random, ring: RingDescriptor, span: int = 9) -> RingElement:
    """A small random element: integers in [-span, span], with occasional
    denominators up to 7 in the rational case; uniform residue mod p."""
    if ring.modulus is not None:
        return ring(rng.randrange(ring.modulus))
    num = rng.randint(-span, span)
    if rng.random() < 0.3:
        den = rng.randint(2, 7)
        return ring(f"{num}/{den}")
    return ring(num)


def rand_unit(rng: random.Random, ring: RingDescriptor, span: int = 9) -> RingElement:
    while True:
        x = rand_element(rng, ring, span)
        if x.is_unit:
            return x


def rand_series(
    rng: random.Random,
    s: int,
    order: int,
    ring: RingDescriptor,
    density: float = 1.0,
    span: int = 9,
) -> TruncSeries:
    """A random series; each word keeps its coefficient with probability
    ``density`` (possibly zero anyway)."""
    data = {}
    for w in all_words(s, order):
        if density >= 1.0 or rng.random() < density:
            v = rand_element(rng, ring, span)
            if not v.is_zero:
                data[w] = v
    return TruncSeries._trusted(s, order, ring, data)


def _with_degree_one(base: TruncSeries, firsts: Sequence[RingElement]) -> TruncSeries:
    data = dict(base._coeffs)
    for i, v in enumerate(firsts, start=1):
        if v.is_zero:
            data.pop((i,), None)
        else:
            data[(i,)] = v
    return TruncSeries._trusted(base.s, base.order, base.ring, data)


def rand_unit_series(
    rng: random.Random, s: int, order: int, ring: RingDescriptor, span: int = 9
) -> TruncSeries:
    """Random series with every degree-1 coefficient a unit."""
    base = rand_series(rng, s, order, ring, span=span)
    firsts = [rand_unit(rng, ring, span) for _ in range(s)]
    return _with_degree_one(base, firsts)


def rand_unipotent_series(
    rng: random.Random, s: int, order: int, ring: RingDescriptor, span: int = 9
) -> TruncSeries:
    """Random series with every degree-1 coefficient equal to 1."""
    base = rand_series(rng, s, order, ring, span=span)
    return _with_degree_one(base, [ring.one] * s)


def rand_distribution(
    rng: random.Random,
    names: Sequence[str],
    order: int,
    ring: RingDescriptor,
    density: float = 1.0,
    span: int = 9,
) -> JointDistribution:
    """A random moment table over the given generator names."""
    gens = tuple(names)
    table = {}
    level = [()]
    for _ in range(order):
        level = [w + (g,) for w in level for g in gens]
        for w in level:
            if density >= 1.0 or rng.random() < density:
                v = rand_element(rng, ring, span)
                if not v.is_zero:
                    table[w] = v
    return JointDistribution._trusted(gens, order, ring, table)
