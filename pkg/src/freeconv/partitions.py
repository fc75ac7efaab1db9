"""Non-crossing partitions of {1..n}: enumeration, Kreweras complement,
and word restriction.

A partition is *non-crossing* when no four indices a < b < c < d put a, c in
one block and b, d in another.  The number of non-crossing partitions of an
n-set is the Catalan number C_n.

The Kreweras complement K(pi) is the coarsest partition sigma on the
interleaved copies 1', ..., n' such that pi together with sigma is
non-crossing on 1, 1', 2, 2', ..., n, n'.  It is computed here through the
permutation model: writing each block of pi as a cyclic permutation (each
element maps to the next larger one in its block, the largest back to the
smallest), the blocks of K(pi) are the cycles of sigma_pi^{-1} followed by
the long cycle (1 2 ... n).  The interleaving characterisation is kept as a
brute-force test oracle.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "NCPartition",
    "MAX_GROUND_SET",
    "enumerate_nc",
    "kreweras",
    "restrict_word",
    "is_noncrossing",
]

MAX_GROUND_SET = 12
"""Largest supported ground-set size for enumeration; C_12 = 208012."""


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    # empty blocks sort first and are rejected by validation
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[:1]))


def _check_partition(n: int, blocks: Sequence[Sequence[int]]) -> None:
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise DomainError("empty block")
        for x in block:
            if not isinstance(x, int) or not 1 <= x <= n:
                raise DomainError(f"element {x!r} outside 1..{n}")
            if x in seen:
                raise DomainError(f"element {x} appears twice")
            seen.add(x)
    if len(seen) != n:
        raise DomainError(f"blocks cover {len(seen)} of {n} elements")


class NCPartition:
    """A non-crossing partition in canonical form.

    Blocks are sorted ascending, and listed by their minimum element; two
    partitions are equal iff their canonical block tuples are equal.  The
    constructor validates that the blocks partition {1..n} and are
    non-crossing.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        canon = _canonical_blocks(blocks)
        _check_partition(n, canon)
        if not _blocks_noncrossing(canon):
            raise DomainError(f"blocks {canon} cross")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def _trusted(cls, n: int, canon: tuple[tuple[int, ...], ...]) -> "NCPartition":
        # internal fast path for enumeration output, already canonical and NC
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("NCPartition is immutable")

    def __len__(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        return f"NCPartition({self.n}, {list(map(list, self.blocks))})"

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    @staticmethod
    def parse(text: str, n: int | None = None) -> "NCPartition":
        """Parse the textual form ``{1,3}{2}``."""
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise DomainError(f"bad partition text {text!r}")
        blocks = []
        for part in text[1:-1].split("}{"):
            try:
                blocks.append([int(x) for x in part.split(",")])
            except ValueError as exc:
                raise DomainError(f"bad partition text {text!r}") from exc
        size = n if n is not None else max(x for b in blocks for x in b)
        return NCPartition(size, blocks)

    @staticmethod
    def discrete(n: int) -> "NCPartition":
        """0_n: all singletons."""
        return NCPartition._trusted(n, tuple((i,) for i in range(1, n + 1)))

    @staticmethod
    def full(n: int) -> "NCPartition":
        """1_n: the single block {1..n}."""
        return NCPartition._trusted(n, (tuple(range(1, n + 1)),))


def _blocks_noncrossing(blocks: Sequence[Sequence[int]]) -> bool:
    # pairwise check: B crosses A iff B meets both the inside and the
    # outside of some gap of A
    for i, a in enumerate(blocks):
        aset = set(a)
        for b in blocks[i + 1 :]:
            inside = outside = False
            lo, hi = a[0], a[-1]
            for x in b:
                if lo < x < hi and x not in aset:
                    # between which consecutive elements of a does x sit?
                    inside = True
                elif x < lo or x > hi:
                    outside = True
            if inside and outside:
                return False
            if inside:
                # all of b inside a's span: must fit within one gap of a
                gaps = set()
                for x in b:
                    # index of the gap (a[k], a[k+1]) containing x
                    k = 0
                    while a[k + 1] < x:
                        k += 1
                    gaps.add(k)
                if len(gaps) > 1:
                    return False
    return True


def is_noncrossing(blocks: Iterable[Iterable[int]], n: int | None = None) -> bool:
    """True iff ``blocks`` is a non-crossing partition of {1..n}.

    Raises :class:`DomainError` if the blocks do not partition {1..n}.
    """
    canon = _canonical_blocks(blocks)
    size = n if n is not None else max((x for b in canon for x in b), default=0)
    _check_partition(size, canon)
    return _blocks_noncrossing(canon)


def _nc_blocklists(points: tuple[int, ...]):
    """All non-crossing partitions of an increasing point tuple, as block lists."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    m = len(rest)
    # choose the rest of first's block as a subset of the remaining points;
    # the chosen elements cut the remainder into independent gap problems
    for mask in range(1 << m):
        indices = [i for i in range(m) if mask >> i & 1]
        block = (first, *(rest[i] for i in indices))
        gaps = []
        prev = -1
        for i in indices:
            gaps.append(rest[prev + 1 : i])
            prev = i
        gaps.append(rest[prev + 1 :])
        yield from _combine_gaps(block, gaps, 0, ())


def _combine_gaps(block, gaps, i, acc):
    if i == len(gaps):
        yield (block, *acc)
        return
    for sub in _nc_blocklists(gaps[i]):
        yield from _combine_gaps(block, gaps, i + 1, acc + sub)


@lru_cache(maxsize=None)
def enumerate_nc(n: int) -> tuple[NCPartition, ...]:
    """All non-crossing partitions of {1..n}, in canonical encoding order.

    The count is the Catalan number C_n.  Results are cached; ``n`` is
    limited to :data:`MAX_GROUND_SET`.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"ground-set size must be a positive integer, got {n!r}")
    if n > MAX_GROUND_SET:
        raise DomainError(f"ground-set size {n} exceeds cap {MAX_GROUND_SET}")
    parts = [
        NCPartition._trusted(n, _canonical_blocks(bl))
        for bl in _nc_blocklists(tuple(range(1, n + 1)))
    ]
    parts.sort(key=lambda p: p.blocks)
    return tuple(parts)


def kreweras(p: NCPartition) -> NCPartition:
    """The Kreweras complement, relabeled from the interleaved copies back
    to {1..n}.  Satisfies ``len(p) + len(kreweras(p)) == n + 1``."""
    n = p.n
    # sigma_pi as an array: each element -> next element of its block, cyclically
    succ = [0] * (n + 1)
    for block in p.blocks:
        for i, x in enumerate(block):
            succ[x] = block[(i + 1) % len(block)]
    inv = [0] * (n + 1)
    for x in range(1, n + 1):
        inv[succ[x]] = x
    # sigma_K = sigma_pi^{-1} o (1 2 ... n); its cycles are the blocks of K(pi)
    seen = [False] * (n + 1)
    blocks = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = inv[x % n + 1]
        blocks.append(tuple(sorted(cycle)))
    return NCPartition._trusted(n, _canonical_blocks(blocks))


def restrict_word(word: Sequence, p: NCPartition) -> list[tuple]:
    """Subwords of ``word`` along the blocks of ``p``, in canonical block order.

    ``word`` may hold any letters (integers or generator names); only its
    length has to match the ground-set size.
    """
    if len(word) != p.n:
        raise DomainError(f"word length {len(word)} != ground-set size {p.n}")
    return [tuple(word[i - 1] for i in block) for block in p.blocks]
