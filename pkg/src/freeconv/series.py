"""Truncated non-commutative power series without constant term.

A series in s variables up to order n stores a sparse map from words over
{1..s} (length 1..n) to ring elements; absent words mean zero.  Coefficients
beyond the truncation order are unknown, so asking for one raises rather
than returning zero.

Distinguished subsets, used as group carriers elsewhere:

* the unit group: every degree-1 coefficient is a unit;
* the unipotent part: every degree-1 coefficient equals 1.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DomainError,
    OrderError,
    ParseError,
    RingMismatchError,
    ShapeMismatchError,
)
from .rings import RingDescriptor, RingElement

__all__ = [
    "Word",
    "check_word",
    "word_key",
    "all_words",
    "TruncSeries",
    "series_add",
    "hadamard_1d",
    "scalar_mul",
    "coeff",
    "coeff_block_product",
]

Word = tuple  # tuple[int, ...]; letters 1..s


def check_word(word: Sequence[int], s: int) -> Word:
    """Validate and normalize a word to a tuple of letters in 1..s."""
    w = tuple(word)
    if not w:
        raise DomainError("empty word")
    for x in w:
        if not isinstance(x, int) or not 1 <= x <= s:
            raise DomainError(f"letter {x!r} outside 1..{s}")
    return w


def word_key(word: Word):
    """Canonical sort key: by length, then lexicographic."""
    return (len(word), word)


def all_words(s: int, max_len: int, min_len: int = 1) -> Iterator[Word]:
    """All words over {1..s} with min_len <= length <= max_len, canonical order."""
    letters = range(1, s + 1)
    level: list[Word] = [()]
    for length in range(1, max_len + 1):
        level = [w + (a,) for w in level for a in letters]
        if length >= min_len:
            yield from level


class TruncSeries:
    """Immutable sparse truncated series.

    ``coeffs`` may be a mapping or an iterable of (word, value) pairs; values
    are coerced into ``ring`` and zeros are dropped.
    """

    __slots__ = ("s", "order", "ring", "_coeffs")

    def __init__(self, s: int, order: int, ring: RingDescriptor, coeffs=None):
        if not isinstance(s, int) or s < 1:
            raise DomainError(f"variable count must be a positive integer, got {s!r}")
        if not isinstance(order, int) or order < 1:
            raise DomainError(f"order must be a positive integer, got {order!r}")
        data: dict[Word, RingElement] = {}
        items: Iterable
        if coeffs is None:
            items = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        for word, value in items:
            w = check_word(word, s)
            if len(w) > order:
                raise OrderError(f"word {w} longer than order {order}")
            v = ring(value)
            if v.is_zero:
                data.pop(w, None)
            else:
                data[w] = v
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_coeffs", data)

    @classmethod
    def _trusted(cls, s, order, ring, data: dict) -> "TruncSeries":
        # internal: data already validated, zero-free, with tuple keys
        self = object.__new__(cls)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_coeffs", data)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # -- basic queries ---------------------------------------------------

    def coeff(self, word: Sequence[int]) -> RingElement:
        """The coefficient of ``word``; raises beyond the truncation order."""
        w = check_word(word, self.s)
        if len(w) > self.order:
            raise OrderError(
                f"coefficient of {w} not determined at order {self.order}"
            )
        got = self._coeffs.get(w)
        return got if got is not None else self.ring.zero

    def terms(self) -> list[tuple[Word, RingElement]]:
        """Nonzero terms in canonical (length, lex) order."""
        return sorted(self._coeffs.items(), key=lambda kv: word_key(kv[0]))

    def support(self) -> list[Word]:
        return sorted(self._coeffs, key=word_key)

    def is_zero(self) -> bool:
        return not self._coeffs

    def in_unit_group(self) -> bool:
        """All degree-1 coefficients are units."""
        return all(self.coeff((i,)).is_unit for i in range(1, self.s + 1))

    def in_unipotent_part(self) -> bool:
        """All degree-1 coefficients equal 1."""
        return all(self.coeff((i,)).is_one for i in range(1, self.s + 1))

    # -- algebra ---------------------------------------------------------

    def _like(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise DomainError(f"expected a series, got {type(other).__name__}")
        if self.s != other.s or self.order != other.order:
            raise ShapeMismatchError(
                f"shape ({self.s},{self.order}) vs ({other.s},{other.order})"
            )
        if self.ring != other.ring:
            raise RingMismatchError("series over different rings")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._like(other)
        data = dict(self._coeffs)
        for w, v in other._coeffs.items():
            acc = data.get(w)
            total = v if acc is None else acc + v
            if total.is_zero:
                data.pop(w, None)
            else:
                data[w] = total
        return TruncSeries._trusted(self.s, self.order, self.ring, data)

    def __neg__(self) -> "TruncSeries":
        data = {w: -v for w, v in self._coeffs.items()}
        return TruncSeries._trusted(self.s, self.order, self.ring, data)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def scale(self, c) -> "TruncSeries":
        c = self.ring(c)
        if c.is_zero:
            return TruncSeries._trusted(self.s, self.order, self.ring, {})
        data = {w: c * v for w, v in self._coeffs.items()}
        return TruncSeries._trusted(self.s, self.order, self.ring, data)

    def hadamard(self, other: "TruncSeries") -> "TruncSeries":
        """Word-wise product."""
        self._like(other)
        a, b = self._coeffs, other._coeffs
        if len(b) < len(a):
            a, b = b, a
        data = {}
        for w, v in a.items():
            u = b.get(w)
            if u is not None:
                prod = v * u
                if not prod.is_zero:
                    data[w] = prod
        return TruncSeries._trusted(self.s, self.order, self.ring, data)

    def truncate(self, new_order: int) -> "TruncSeries":
        """Forget coefficients above ``new_order`` (must not exceed order)."""
        if not isinstance(new_order, int) or new_order < 1:
            raise DomainError(f"bad order {new_order!r}")
        if new_order > self.order:
            raise OrderError(
                f"cannot extend order {self.order} to {new_order}"
            )
        data = {w: v for w, v in self._coeffs.items() if len(w) <= new_order}
        return TruncSeries._trusted(self.s, new_order, self.ring, data)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(s: int, order: int, ring: RingDescriptor) -> "TruncSeries":
        return TruncSeries(s, order, ring)

    @staticmethod
    def ones(s: int, order: int, ring: RingDescriptor) -> "TruncSeries":
        """Every coefficient 1: the Hadamard unit."""
        one = ring.one
        data = {w: one for w in all_words(s, order)}
        return TruncSeries._trusted(s, order, ring, data)

    @staticmethod
    def variables(s: int, order: int, ring: RingDescriptor) -> "TruncSeries":
        """z_1 + ... + z_s."""
        one = ring.one
        data = {(i,): one for i in range(1, s + 1)}
        return TruncSeries._trusted(s, order, ring, data)

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.s == other.s
            and self.order == other.order
            and self.ring == other.ring
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        return (
            f"TruncSeries(s={self.s}, order={self.order}, "
            f"ring={self.ring.serialize()!r}, terms={len(self._coeffs)})"
        )

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for w, v in self.terms():
            mono = "*".join(f"z{i}" for i in w)
            if v.is_one:
                parts.append(mono)
            else:
                parts.append(f"({v.serialize()})*{mono}")
        return " + ".join(parts)

    # -- serialization ---------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "s": self.s,
            "order": self.order,
            "ring": self.ring.serialize(),
            "coeffs": [
                {"word": list(w), "value": v.serialize()} for w, v in self.terms()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=2)

    @staticmethod
    def from_obj(obj) -> "TruncSeries":
        if not isinstance(obj, dict):
            raise ParseError("series JSON must be an object")
        try:
            s = obj["s"]
            order = obj["order"]
            ring = RingDescriptor.parse(obj["ring"])
            coeffs = [(tuple(c["word"]), c["value"]) for c in obj["coeffs"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed series JSON: {exc}") from exc
        return TruncSeries(s, order, ring, coeffs)

    @staticmethod
    def loads(text: str) -> "TruncSeries":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return TruncSeries.from_obj(obj)


# -- functional wrappers ------------------------------------------------


def series_add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Coefficient-wise sum."""
    return f + g


def hadamard_1d(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Word-wise (Hadamard) product; the all-ones series is the unit."""
    return f.hadamard(g)


def scalar_mul(c, f: TruncSeries) -> TruncSeries:
    """Scale every coefficient by ``c``."""
    return f.scale(c)


def coeff(f: TruncSeries, word: Sequence[int]) -> RingElement:
    """The coordinate functional X_w."""
    return f.coeff(word)


def coeff_block_product(f: TruncSeries, word: Sequence[int], p) -> RingElement:
    """X_{w,p}: the product of X over the subwords of ``word`` along the
    blocks of the partition ``p``."""
    w = check_word(word, f.s)
    if len(w) != p.n:
        raise ShapeMismatchError(
            f"word length {len(w)} != partition ground-set {p.n}"
        )
    if len(w) > f.order:
        raise OrderError(f"word {w} longer than order {f.order}")
    out = f.ring.one
    for block in p.blocks:
        sub = tuple(w[i - 1] for i in block)
        out = out * f._coeffs.get(sub, f.ring.zero)
        if out.is_zero:
            return out
    return out
