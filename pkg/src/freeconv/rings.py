"""Coefficient rings: exact rationals and integers mod a prime.

All kernel arithmetic happens in one of these two rings, selected once per
computation through a :class:`RingDescriptor`.  Elements are immutable and
carry their descriptor; mixing rings raises instead of coercing.

Rationals are backed by ``gmpy2.mpq`` (canonical lowest terms, positive
denominator).  Mod-p elements are canonical residues in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from .errors import DomainError, NotInvertibleError, ParseError, RingMismatchError

__all__ = ["RingDescriptor", "RingElement", "QQ", "mod_ring"]


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RingDescriptor:
    """Identifies a coefficient ring: the rationals, or Z/pZ with p prime.

    Use the module-level :data:`QQ` and :func:`mod_ring` factories; both
    return interned instances so identity checks in hot loops are cheap.
    Calling the descriptor builds an element: ``QQ(3)``, ``QQ("5/6")``,
    ``mod_ring(7)(12)``.
    """

    __slots__ = ("modulus", "zero", "one")

    def __init__(self, modulus: int | None):
        if modulus is not None:
            if not _is_prime(modulus):
                raise DomainError(f"modulus {modulus} is not prime")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "zero", RingElement(self, 0 if modulus else mpq(0)))
        object.__setattr__(self, "one", RingElement(self, 1 if modulus else mpq(1)))

    def __setattr__(self, name, value):
        raise AttributeError("RingDescriptor is immutable")

    @property
    def is_q_algebra(self) -> bool:
        """True iff every nonzero integer multiple of 1 is invertible."""
        return self.modulus is None

    def __call__(self, value) -> RingElement:
        """Coerce an int, string, Fraction, mpq, or same-ring element."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError("element from a different ring")
            return value
        if isinstance(value, float):
            raise DomainError("floating point is not allowed in exact rings")
        p = self.modulus
        if p is not None:
            if isinstance(value, str):
                try:
                    value = int(value) if "/" not in value else mpq(value)
                except ValueError as exc:
                    raise ParseError(f"bad mod-{p} residue {value!r}") from exc
            if isinstance(value, (mpq, Fraction)):
                den = int(value.denominator)
                if den == 1:
                    value = int(value.numerator)
                else:
                    try:
                        value = int(value.numerator) * pow(den, -1, p)
                    except ValueError as exc:
                        raise NotInvertibleError(
                            f"denominator {den} not invertible mod {p}"
                        ) from exc
            if not isinstance(value, int):
                raise DomainError(f"cannot coerce {type(value).__name__} into Z/{p}")
            return RingElement(self, value % p)
        if isinstance(value, str):
            try:
                q = mpq(value)
            except ValueError as exc:
                raise ParseError(f"bad rational literal {value!r}") from exc
            return RingElement(self, q)
        if isinstance(value, (int, Fraction)):
            return RingElement(self, mpq(value))
        if isinstance(value, mpq):
            return RingElement(self, value)
        raise DomainError(f"cannot coerce {type(value).__name__} into Q")

    def serialize(self) -> str:
        return "rational" if self.modulus is None else f"mod:{self.modulus}"

    @staticmethod
    def parse(text: str) -> RingDescriptor:
        if text == "rational":
            return QQ
        if text.startswith("mod:"):
            try:
                p = int(text[4:])
            except ValueError as exc:
                raise ParseError(f"bad ring descriptor {text!r}") from exc
            return mod_ring(p)
        raise ParseError(f"bad ring descriptor {text!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, RingDescriptor) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("RingDescriptor", self.modulus))

    def __repr__(self) -> str:
        return f"RingDescriptor({self.serialize()!r})"


class RingElement:
    """Immutable element of a :class:`RingDescriptor` ring.

    Supports ``+ - * /``, unary ``-``, and exact equality; ``inverse()``
    raises :class:`NotInvertibleError` on non-units.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: RingDescriptor, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _check(self, other) -> None:
        if not isinstance(other, RingElement):
            raise RingMismatchError(f"expected RingElement, got {type(other).__name__}")
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError(
                f"{self.ring.serialize()} vs {other.ring.serialize()}"
            )

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        p = self.ring.modulus
        if p is None:
            return RingElement(self.ring, self.value + other.value)
        return RingElement(self.ring, (self.value + other.value) % p)

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        p = self.ring.modulus
        if p is None:
            return RingElement(self.ring, self.value - other.value)
        return RingElement(self.ring, (self.value - other.value) % p)

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        p = self.ring.modulus
        if p is None:
            return RingElement(self.ring, self.value * other.value)
        return RingElement(self.ring, (self.value * other.value) % p)

    def __neg__(self) -> RingElement:
        p = self.ring.modulus
        if p is None:
            return RingElement(self.ring, -self.value)
        return RingElement(self.ring, (-self.value) % p)

    def __truediv__(self, other: RingElement) -> RingElement:
        return self * other.inverse()

    def __pow__(self, n: int) -> RingElement:
        if n < 0:
            return self.inverse() ** (-n)
        acc, base = self.ring.one, self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self) -> RingElement:
        p = self.ring.modulus
        if p is not None:
            try:
                return RingElement(self.ring, pow(self.value, -1, p))
            except ValueError as exc:
                raise NotInvertibleError(f"{self.value} has no inverse mod {p}") from exc
        if self.value == 0:
            raise NotInvertibleError("0 has no inverse")
        return RingElement(self.ring, 1 / self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    @property
    def is_unit(self) -> bool:
        return self.value != 0

    @property
    def is_integer(self) -> bool:
        """True if the element lies in the image of Z (always true mod p)."""
        if self.ring.modulus is not None:
            return True
        return self.value.denominator == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.value))

    def serialize(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"<{self.value} in {self.ring.serialize()}>"

    def __str__(self) -> str:
        return str(self.value)


QQ = RingDescriptor(None)
"""The field of rational numbers."""


@lru_cache(maxsize=None)
def mod_ring(p: int) -> RingDescriptor:
    """The field Z/pZ; ``p`` must be prime."""
    return RingDescriptor(p)
