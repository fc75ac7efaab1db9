"""Joint distributions as finite moment tables, free cumulants, freeness
testing, the free-product construction, and the standard one-variable laws.

A distribution of an s-tuple is the linear functional phi on words over the
generator names, recorded up to a truncation order; the empty word has
phi = 1 implicitly.  Free cumulants are related to moments through the
non-crossing partition expansion

    phi(w) = sum over pi in NC(|w|) of prod over blocks V of kappa(w|V),

inverted degree by degree.  A family of generator groups is combinatorially
free when every mixed cumulant vanishes; the free product glues tables by
decreeing exactly that.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import (
    DomainError,
    NameClashError,
    OrderError,
    ParseError,
    RingMismatchError,
    ShapeMismatchError,
)
from .partitions import enumerate_nc
from .rings import QQ, RingDescriptor, RingElement
from .series import TruncSeries

__all__ = [
    "JointDistribution",
    "CumulantTable",
    "cumulants_of",
    "moments_of",
    "r_transform",
    "m_transform",
    "is_combinatorially_free",
    "free_product",
    "tuple_add",
    "tuple_mul",
    "law_dirac",
    "law_semicircle",
    "law_free_poisson",
    "hadamard_law_mul",
]


@lru_cache(maxsize=None)
def _nc_blocks0(n: int):
    """Blocks of every NC(n) partition, 0-based, full partition last."""
    parts = []
    for p in enumerate_nc(n):
        parts.append(tuple(tuple(i - 1 for i in b) for b in p.blocks))
    parts.sort(key=len, reverse=True)  # singletons first, 1_n last
    return tuple(parts)


def _gen_words(names: Sequence[str], max_len: int):
    """All words over the generator names with length 1..max_len."""
    level = [()]
    for _ in range(max_len):
        level = [w + (g,) for w in level for g in names]
        yield from level


class _GenTable:
    """Shared container for word-indexed tables over named generators."""

    __slots__ = ("generators", "order", "ring", "_table")

    def __init__(self, generators: Sequence[str], order: int,
                 ring: RingDescriptor, entries=None):
        gens = tuple(generators)
        if not gens:
            raise DomainError("at least one generator required")
        if len(set(gens)) != len(gens):
            raise NameClashError(f"duplicate generator in {gens}")
        for g in gens:
            if not isinstance(g, str) or not g:
                raise DomainError(f"bad generator name {g!r}")
        if not isinstance(order, int) or order < 1:
            raise DomainError(f"order must be a positive integer, got {order!r}")
        known = set(gens)
        table: dict[tuple, RingElement] = {}
        items: Iterable
        if entries is None:
            items = ()
        elif isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        for word, value in items:
            w = (word,) if isinstance(word, str) else tuple(word)
            if not w:
                raise DomainError("the empty word is implicit and cannot be set")
            if len(w) > order:
                raise OrderError(f"word {w} longer than order {order}")
            for g in w:
                if g not in known:
                    raise DomainError(f"unknown generator {g!r}")
            v = ring(value)
            if v.is_zero:
                table.pop(w, None)
            else:
                table[w] = v
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_table", table)

    @classmethod
    def _trusted(cls, gens, order, ring, table):
        self = object.__new__(cls)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_table", table)
        return self

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _entry(self, word) -> RingElement:
        w = (word,) if isinstance(word, str) else tuple(word)
        if len(w) > self.order:
            raise OrderError(f"word {w} beyond order {self.order}")
        known = set(self.generators)
        for g in w:
            if g not in known:
                raise DomainError(f"unknown generator {g!r}")
        got = self._table.get(w)
        return got if got is not None else self.ring.zero

    def terms(self):
        return sorted(self._table.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.generators == other.generators
            and self.order == other.order
            and self.ring == other.ring
            and self._table == other._table
        )

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(generators={list(self.generators)}, "
            f"order={self.order}, ring={self.ring.serialize()!r}, "
            f"entries={len(self._table)})"
        )

    def to_obj(self) -> dict:
        return {
            "generators": list(self.generators),
            "order": self.order,
            "ring": self.ring.serialize(),
            "coeffs": [
                {"word": list(w), "value": v.serialize()} for w, v in self.terms()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=2)

    @classmethod
    def from_obj(cls, obj):
        if not isinstance(obj, dict):
            raise ParseError("table JSON must be an object")
        try:
            gens = obj["generators"]
            order = obj["order"]
            ring = RingDescriptor.parse(obj["ring"])
            entries = [(tuple(c["word"]), c["value"]) for c in obj["coeffs"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed table JSON: {exc}") from exc
        return cls(gens, order, ring, entries)

    @classmethod
    def loads(cls, text: str):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_obj(obj)


class JointDistribution(_GenTable):
    """Moment table: phi on words over the generators, empty word -> 1."""

    def phi(self, word) -> RingElement:
        if not isinstance(word, str) and len(tuple(word)) == 0:
            return self.ring.one
        return self._entry(word)


class CumulantTable(_GenTable):
    """Free cumulant table over the same index set."""

    def kappa(self, word) -> RingElement:
        return self._entry(word)


def cumulants_of(d: JointDistribution) -> CumulantTable:
    """Invert the moment-cumulant expansion degree by degree."""
    zero = d.ring.zero
    phi = d._table
    kap: dict[tuple, RingElement] = {}
    level: list[tuple] = [()]
    for n in range(1, d.order + 1):
        level = [w + (g,) for w in level for g in d.generators]
        for w in level:
            total = phi.get(w, zero)
            for blocks in _nc_blocks0(n):
                if len(blocks) == 1:
                    continue  # the 1_n term is the unknown itself
                prod = None
                for b in blocks:
                    v = kap.get(tuple(w[i] for i in b))
                    if v is None:
                        prod = None
                        break
                    prod = v if prod is None else prod * v
                if prod is not None:
                    total = total - prod
            if not total.is_zero:
                kap[w] = total
    return CumulantTable._trusted(d.generators, d.order, d.ring, kap)


def moments_of(k: CumulantTable) -> JointDistribution:
    """The NC expansion: phi(w) = sum over pi of the block product of kappa."""
    kap = k._table
    phi: dict[tuple, RingElement] = {}
    for w in _gen_words(k.generators, k.order):
        n = len(w)
        total = None
        for blocks in _nc_blocks0(n):
            prod = None
            for b in blocks:
                v = kap.get(tuple(w[i] for i in b))
                if v is None:
                    prod = None
                    break
                prod = v if prod is None else prod * v
            if prod is not None:
                total = prod if total is None else total + prod
        if total is not None and not total.is_zero:
            phi[w] = total
    return JointDistribution._trusted(k.generators, k.order, k.ring, phi)


def _series_from_table(table: _GenTable, names: Sequence[str]) -> TruncSeries:
    gens = tuple(names)
    known = set(table.generators)
    for g in gens:
        if g not in known:
            raise DomainError(f"unknown generator {g!r}")
    s = len(gens)
    src = table._table
    zero = table.ring.zero
    data = {}
    for w in _gen_words(tuple(range(1, s + 1)), table.order):
        v = src.get(tuple(gens[i - 1] for i in w))
        if v is not None and not v.is_zero:
            data[w] = v
    return TruncSeries._trusted(s, table.order, table.ring, data)


def m_transform(d: JointDistribution, names: Sequence[str] | None = None) -> TruncSeries:
    """Moment series of the chosen generator tuple (defaults to all)."""
    return _series_from_table(d, d.generators if names is None else names)


def r_transform(d: JointDistribution, names: Sequence[str] | None = None) -> TruncSeries:
    """Cumulant series of the chosen generator tuple (defaults to all)."""
    return _series_from_table(
        cumulants_of(d), d.generators if names is None else names
    )


def is_combinatorially_free(d: JointDistribution,
                            groups: Sequence[Sequence[str]]) -> bool:
    """True iff every cumulant whose word mixes two groups vanishes.

    ``groups`` are disjoint subsets of the generators; words using
    generators outside every group are ignored.
    """
    owner: dict[str, int] = {}
    known = set(d.generators)
    for gi, group in enumerate(groups):
        for g in group:
            if g not in known:
                raise DomainError(f"unknown generator {g!r}")
            if g in owner:
                raise DomainError(f"generator {g!r} in two groups")
            owner[g] = gi
    kap = cumulants_of(d)
    for w, v in kap._table.items():
        owners = {owner.get(g) for g in w}
        if None in owners:
            continue
        if len(owners) > 1 and not v.is_zero:
            return False
    return True


def free_product(d1: JointDistribution, d2: JointDistribution) -> JointDistribution:
    """Joint table over the disjoint union of generators, with the two input
    tables kept and all mixed cumulants set to zero."""
    if set(d1.generators) & set(d2.generators):
        clash = sorted(set(d1.generators) & set(d2.generators))
        raise NameClashError(f"generators {clash} appear on both sides")
    if d1.ring != d2.ring:
        raise RingMismatchError("free product over different rings")
    if d1.order != d2.order:
        raise ShapeMismatchError(f"order {d1.order} vs {d2.order}")
    k1 = cumulants_of(d1)
    k2 = cumulants_of(d2)
    merged = dict(k1._table)
    merged.update(k2._table)
    gens = d1.generators + d2.generators
    kap = CumulantTable._trusted(gens, d1.order, d1.ring, merged)
    return moments_of(kap)


def tuple_add(d: JointDistribution, a_names: Sequence[str],
              b_names: Sequence[str], order: int | None = None) -> JointDistribution:
    """Distribution of the component-wise sum (a_1+b_1, ..., a_s+b_s)."""
    a = tuple(a_names)
    b = tuple(b_names)
    if len(a) != len(b):
        raise ShapeMismatchError(f"tuple sizes {len(a)} vs {len(b)}")
    known = set(d.generators)
    for g in a + b:
        if g not in known:
            raise DomainError(f"unknown generator {g!r}")
    target = d.order if order is None else order
    if not isinstance(target, int) or target < 1:
        raise DomainError(f"bad order {target!r}")
    if target > d.order:
        raise OrderError(f"table order {d.order} below requested {target}")
    s = len(a)
    names = tuple(f"{x}+{y}" for x, y in zip(a, b))
    src = d._table
    zero = d.ring.zero
    phi: dict[tuple, RingElement] = {}
    for w in _gen_words(tuple(range(s)), target):
        n = len(w)
        total = zero
        for mask in range(1 << n):
            expanded = tuple(
                a[w[j]] if mask >> j & 1 else b[w[j]] for j in range(n)
            )
            total = total + src.get(expanded, zero)
        if not total.is_zero:
            phi[tuple(names[i] for i in w)] = total
    return JointDistribution._trusted(names, target, d.ring, phi)


def tuple_mul(d: JointDistribution, a_names: Sequence[str],
              b_names: Sequence[str], order: int | None = None) -> JointDistribution:
    """Distribution of the component-wise product (a_1 b_1, ..., a_s b_s).

    Words of the product expand to interleaved words of twice the length, so
    the source table must hold at least twice the requested order.
    """
    a = tuple(a_names)
    b = tuple(b_names)
    if len(a) != len(b):
        raise ShapeMismatchError(f"tuple sizes {len(a)} vs {len(b)}")
    known = set(d.generators)
    for g in a + b:
        if g not in known:
            raise DomainError(f"unknown generator {g!r}")
    target = d.order // 2 if order is None else order
    if not isinstance(target, int) or target < 1:
        raise DomainError(f"bad order {target!r}")
    if d.order < 2 * target:
        raise OrderError(
            f"table order {d.order} cannot support product order {target}: "
            f"needs {2 * target}"
        )
    s = len(a)
    names = tuple(f"{x}*{y}" for x, y in zip(a, b))
    src = d._table
    phi: dict[tuple, RingElement] = {}
    for w in _gen_words(tuple(range(s)), target):
        expanded = tuple(g for i in w for g in (a[i], b[i]))
        v = src.get(expanded)
        if v is not None and not v.is_zero:
            phi[tuple(names[i] for i in w)] = v
    return JointDistribution._trusted(names, target, d.ring, phi)


def _law_from_cumulants(name: str, kappas: Mapping[int, RingElement],
                        order: int, ring: RingDescriptor) -> JointDistribution:
    table = {}
    for n, v in kappas.items():
        if 1 <= n <= order and not ring(v).is_zero:
            table[(name,) * n] = ring(v)
    kap = CumulantTable._trusted((name,), order, ring, table)
    return moments_of(kap)


def law_dirac(a, order: int, ring: RingDescriptor = QQ,
              name: str = "x") -> JointDistribution:
    """Point mass at a: the n-th moment is a^n."""
    a = ring(a)
    phi = {}
    power = ring.one
    for n in range(1, order + 1):
        power = power * a
        if not power.is_zero:
            phi[(name,) * n] = power
    return JointDistribution._trusted((name,), order, ring, phi)


def law_semicircle(a, r2, order: int, ring: RingDescriptor = QQ,
                   name: str = "x") -> JointDistribution:
    """Semicircle law with mean a and squared radius r2: the only nonzero
    cumulants are kappa_1 = a and kappa_2 = r2/4."""
    return _law_from_cumulants(
        name, {1: ring(a), 2: ring(r2) / ring(4)}, order, ring
    )


def law_free_poisson(lam, alpha, order: int, ring: RingDescriptor = QQ,
                     name: str = "x") -> JointDistribution:
    """Free Poisson law with rate lam and jump alpha: kappa_n = lam*alpha^n."""
    lam = ring(lam)
    alpha = ring(alpha)
    kappas = {}
    power = ring.one
    for n in range(1, order + 1):
        power = power * alpha
        kappas[n] = lam * power
    return _law_from_cumulants(name, kappas, order, ring)


def hadamard_law_mul(d1: JointDistribution, d2: JointDistribution) -> JointDistribution:
    """The law whose cumulant sequence is the entry-wise product of the two
    input cumulant sequences (single-generator tables only); the free
    Poisson law with rate and jump 1 is the unit."""
    for d in (d1, d2):
        if len(d.generators) != 1:
            raise DomainError("entry-wise cumulant product needs one generator")
    if d1.ring != d2.ring:
        raise RingMismatchError("laws over different rings")
    if d1.order != d2.order:
        raise ShapeMismatchError(f"order {d1.order} vs {d2.order}")
    k1 = cumulants_of(d1)
    k2 = cumulants_of(d2)
    g1 = d1.generators[0]
    g2 = d2.generators[0]
    name = g1
    kappas = {
        n: k1.kappa((g1,) * n) * k2.kappa((g2,) * n)
        for n in range(1, d1.order + 1)
    }
    return _law_from_cumulants(name, kappas, d1.order, d1.ring)
