"""One-variable bridge between multiplicative and additive free convolution.

Three truncated carriers appear here:

* ``Series1`` - an ordinary power series c_0 + c_1 z + ... + c_m z^m;
* ``LambdaElement`` - a series with constant term pinned to 1, the carrier
  of two products: the ordinary one and a second product ``*`` defined so
  that the ghost map turns it into the pointwise product of series;
* ``OneDimLaw`` - a moment sequence m_1..m_n of a single variable.

The ghost map is -(d/dz) log f.  The sign is chosen deliberately: the unit
1 - z of the ``*`` product must land on the all-ones series, the unit of
the pointwise product, and the literal derivative of the logarithm lands on
its negative instead.

The S-transform of a law with invertible mean is S(z) = chi(z) (1+z) / z,
with chi the compositional inverse of psi(z) = sum m_k z^k.  For mean-1
laws S has constant term 1, so S-transforms can be multiplied inside the
Lambda carrier; pulling the two Lambda products back through S gives two
operations on mean-1 laws that make them a commutative ring, and the
log/exp pair below is an isomorphism onto the cumulant-side ring where
addition is free additive convolution and multiplication is the pointwise
cumulant product.

Everything here requires a ring containing the rationals, except the plain
S-transform which only divides by the mean.
"""

from __future__ import annotations

import json
from typing import Sequence

from .boxconv import free_add, free_mul, moments_from_cumulants
from .distributions import JointDistribution, hadamard_law_mul
from .errors import (
    DomainError,
    GroupMembershipError,
    ParseError,
    QAlgebraError,
    ShapeMismatchError,
)
from .rings import RingDescriptor, RingElement
from .series import TruncSeries

__all__ = [
    "Series1",
    "LambdaElement",
    "OneDimLaw",
    "s_transform",
    "s_inverse",
    "ghost",
    "ghost_inverse",
    "witt_mul",
    "lambda_mul",
    "log_iso",
    "exp_iso",
    "circled_ast",
    "hadamard_box",
    "law_free_add",
    "law_free_mul",
]


def _require_q(ring: RingDescriptor) -> None:
    if not ring.is_q_algebra:
        raise QAlgebraError(
            f"operation needs a ring containing the rationals, "
            f"got {ring.serialize()}"
        )


class Series1:
    """Dense one-variable series c_0 .. c_order (constant term allowed)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingDescriptor, coeffs: Sequence):
        cs = tuple(ring(c) for c in coeffs)
        if not cs:
            raise DomainError("a series needs at least the constant term")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Series1 is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _like(self, other: "Series1") -> None:
        if not isinstance(other, Series1):
            raise DomainError(f"expected Series1, got {type(other).__name__}")
        if self.ring != other.ring:
            raise ShapeMismatchError("series over different rings")
        if len(self.coeffs) != len(other.coeffs):
            raise ShapeMismatchError(
                f"order {self.order} vs {other.order}"
            )

    def __add__(self, other: "Series1") -> "Series1":
        self._like(other)
        return Series1(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def hadamard(self, other: "Series1") -> "Series1":
        """Pointwise product."""
        self._like(other)
        return Series1(self.ring, [a * b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series1)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"Series1({self.ring.serialize()!r}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            if k == 0:
                parts.append(c.serialize())
            elif k == 1:
                parts.append(f"({c.serialize()})*z")
            else:
                parts.append(f"({c.serialize()})*z^{k}")
        return " + ".join(parts) if parts else "0"

    @staticmethod
    def zeros(order: int, ring: RingDescriptor) -> "Series1":
        return Series1(ring, [ring.zero] * (order + 1))

    @staticmethod
    def ones(order: int, ring: RingDescriptor) -> "Series1":
        return Series1(ring, [ring.one] * (order + 1))

    def to_obj(self) -> dict:
        return {
            "order": self.order,
            "ring": self.ring.serialize(),
            "coeffs": [c.serialize() for c in self.coeffs],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=2)

    @staticmethod
    def from_obj(obj) -> "Series1":
        if not isinstance(obj, dict):
            raise ParseError("series JSON must be an object")
        try:
            ring = RingDescriptor.parse(obj["ring"])
            coeffs = list(obj["coeffs"])
            order = obj["order"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed series JSON: {exc}") from exc
        if order != len(coeffs) - 1:
            raise ParseError(f"order {order} does not match {len(coeffs)} coefficients")
        return Series1(ring, coeffs)

    @staticmethod
    def loads(text: str) -> "Series1":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return Series1.from_obj(obj)


class LambdaElement:
    """A series 1 + c_1 z + ... + c_n z^n; only c_1..c_n are stored."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingDescriptor, coeffs: Sequence):
        cs = tuple(ring(c) for c in coeffs)
        if not cs:
            raise DomainError("order must be at least 1")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("LambdaElement is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coeff(self, k: int) -> RingElement:
        """c_k with c_0 = 1."""
        if k == 0:
            return self.ring.one
        if not 1 <= k <= self.order:
            raise DomainError(f"index {k} outside 0..{self.order}")
        return self.coeffs[k - 1]

    def _like(self, other: "LambdaElement") -> None:
        if not isinstance(other, LambdaElement):
            raise DomainError(f"expected LambdaElement, got {type(other).__name__}")
        if self.ring != other.ring:
            raise ShapeMismatchError("elements over different rings")
        if self.order != other.order:
            raise ShapeMismatchError(f"order {self.order} vs {other.order}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LambdaElement)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return (
            f"LambdaElement({self.ring.serialize()!r}, "
            f"{[str(c) for c in self.coeffs]})"
        )

    def __str__(self) -> str:
        parts = ["1"]
        for k, c in enumerate(self.coeffs, start=1):
            if c.is_zero:
                continue
            z = "z" if k == 1 else f"z^{k}"
            parts.append(f"({c.serialize()})*{z}")
        return " + ".join(parts)

    @staticmethod
    def unit(order: int, ring: RingDescriptor) -> "LambdaElement":
        """The constant series 1."""
        return LambdaElement(ring, [ring.zero] * order)

    @staticmethod
    def one_minus_z(order: int, ring: RingDescriptor) -> "LambdaElement":
        cs = [ring.zero] * order
        cs[0] = -ring.one
        return LambdaElement(ring, cs)

    def to_obj(self) -> dict:
        return {
            "order": self.order,
            "ring": self.ring.serialize(),
            "coeffs": [c.serialize() for c in self.coeffs],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=2)

    @staticmethod
    def from_obj(obj) -> "LambdaElement":
        if not isinstance(obj, dict):
            raise ParseError("element JSON must be an object")
        try:
            ring = RingDescriptor.parse(obj["ring"])
            coeffs = list(obj["coeffs"])
            order = obj["order"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed element JSON: {exc}") from exc
        if order != len(coeffs):
            raise ParseError(f"order {order} does not match {len(coeffs)} coefficients")
        return LambdaElement(ring, coeffs)

    @staticmethod
    def loads(text: str) -> "LambdaElement":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return LambdaElement.from_obj(obj)


class OneDimLaw:
    """Moment sequence m_1..m_n of one non-commutative variable."""

    __slots__ = ("ring", "moments")

    def __init__(self, ring: RingDescriptor, moments: Sequence):
        ms = tuple(ring(m) for m in moments)
        if not ms:
            raise DomainError("a law needs at least the first moment")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "moments", ms)

    def __setattr__(self, name, value):
        raise AttributeError("OneDimLaw is immutable")

    @property
    def order(self) -> int:
        return len(self.moments)

    @property
    def mean(self) -> RingElement:
        return self.moments[0]

    def has_unit_mean(self) -> bool:
        return self.mean.is_one

    def has_invertible_mean(self) -> bool:
        return self.mean.is_unit

    def moment(self, n: int) -> RingElement:
        if not 1 <= n <= self.order:
            raise DomainError(f"moment index {n} outside 1..{self.order}")
        return self.moments[n - 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OneDimLaw)
            and self.ring == other.ring
            and self.moments == other.moments
        )

    def __repr__(self) -> str:
        return f"OneDimLaw({self.ring.serialize()!r}, {[str(m) for m in self.moments]})"

    def to_series(self) -> TruncSeries:
        """One-variable moment series."""
        data = {}
        for n, m in enumerate(self.moments, start=1):
            if not m.is_zero:
                data[(1,) * n] = m
        return TruncSeries._trusted(1, self.order, self.ring, data)

    @staticmethod
    def from_series(m: TruncSeries) -> "OneDimLaw":
        if m.s != 1:
            raise ShapeMismatchError(f"expected one variable, got {m.s}")
        return OneDimLaw(
            m.ring, [m.coeff((1,) * n) for n in range(1, m.order + 1)]
        )

    def to_distribution(self, name: str = "x") -> JointDistribution:
        table = {}
        for n, m in enumerate(self.moments, start=1):
            if not m.is_zero:
                table[(name,) * n] = m
        return JointDistribution._trusted((name,), self.order, self.ring, table)

    @staticmethod
    def from_distribution(d: JointDistribution) -> "OneDimLaw":
        if len(d.generators) != 1:
            raise ShapeMismatchError(
                f"expected one generator, got {len(d.generators)}"
            )
        g = d.generators[0]
        return OneDimLaw(
            d.ring, [d.phi((g,) * n) for n in range(1, d.order + 1)]
        )


# -- compositional inversion --------------------------------------------


def _powers(coeffs, order):
    """coeffs[k] = [z^k] p for a series with p_0 = 0; returns the list of
    truncated powers p^1..p^order in the same dense representation."""
    zero = coeffs[0] - coeffs[0]
    out = [coeffs]
    cur = coeffs
    for _ in range(order - 1):
        nxt = [zero] * (order + 1)
        for i in range(1, order + 1):
            ci = cur[i]
            if ci.is_zero:
                continue
            for j in range(1, order + 1 - i):
                cj = coeffs[j]
                if not cj.is_zero:
                    nxt[i + j] = nxt[i + j] + ci * cj
        cur = nxt
        out.append(cur)
    return out


def _compositional_inverse(a, ring):
    """Dense a[1..n] with a[0] = 0 and a[1] a unit; returns chi with
    chi(a(z)) = z up to z^n."""
    n = len(a) - 1
    a1_inv = a[1].inverse()
    pw = _powers(a, n)
    chi = [ring.zero] * (n + 1)
    chi[1] = a1_inv
    lead_inv = a1_inv
    for k in range(2, n + 1):
        lead_inv = lead_inv * a1_inv
        acc = ring.zero
        for j in range(1, k):
            if not chi[j].is_zero:
                acc = acc + chi[j] * pw[j - 1][k]
        chi[k] = -(lead_inv * acc)
    return chi


# -- S-transform ---------------------------------------------------------


def s_transform(law: OneDimLaw) -> Series1:
    """S(z) = chi(z) (1+z) / z with chi the compositional inverse of the
    moment generating series; defined when the mean is a unit."""
    if not law.has_invertible_mean():
        raise GroupMembershipError(
            f"mean {law.mean.serialize()} is not invertible"
        )
    n = law.order
    ring = law.ring
    psi = [ring.zero] + list(law.moments)
    chi = _compositional_inverse(psi, ring)
    # S_j = chi_{j+1} + chi_j for j = 0..n-1, with chi_0 = 0
    coeffs = []
    prev = ring.zero
    for j in range(n):
        coeffs.append(chi[j + 1] + prev)
        prev = chi[j + 1]
    return Series1(ring, coeffs)


def s_inverse(series: Series1) -> OneDimLaw:
    """Moments of the law with the given S-transform (constant term must be
    a unit); a law of order n comes back from a series of order n-1."""
    ring = series.ring
    if not series.coeffs[0].is_unit:
        raise GroupMembershipError(
            f"constant term {series.coeffs[0].serialize()} is not invertible"
        )
    m = series.order
    n = m + 1
    # reconstruct chi_1..chi_n from S_j = chi_{j+1} + chi_j
    chi = [ring.zero] * (n + 1)
    for j in range(n):
        chi[j + 1] = series.coeffs[j] - chi[j]
    psi = _compositional_inverse(chi, ring)
    return OneDimLaw(ring, psi[1:])


# -- ghost map ------------------------------------------------------------


def ghost(f: LambdaElement) -> Series1:
    """-(d/dz) log f, truncated to order n-1 and indexed from z^0."""
    _require_q(f.ring)
    n = f.order
    c = [f.ring.one, *f.coeffs]
    h = []
    for j in range(n):
        acc = f.ring(-(j + 1)) * c[j + 1]
        for i in range(1, j + 1):
            acc = acc - c[i] * h[j - i]
        h.append(acc)
    return Series1(f.ring, h)


def ghost_inverse(h: Series1) -> LambdaElement:
    """The element with the given ghost; integrates and exponentiates
    degree by degree, so the ring must contain the rationals."""
    _require_q(h.ring)
    ring = h.ring
    n = h.order + 1
    c = [ring.one]
    for k in range(1, n + 1):
        acc = ring.zero
        for i in range(k):
            acc = acc + h.coeffs[i] * c[k - 1 - i]
        c.append(-(acc / ring(k)))
    return LambdaElement(ring, c[1:])


def lambda_mul(f: LambdaElement, g: LambdaElement) -> LambdaElement:
    """Ordinary product of the underlying power series, truncated."""
    f._like(g)
    n = f.order
    a = [f.ring.one, *f.coeffs]
    b = [f.ring.one, *g.coeffs]
    out = []
    for k in range(1, n + 1):
        acc = f.ring.zero
        for i in range(k + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return LambdaElement(f.ring, out)


def witt_mul(f: LambdaElement, g: LambdaElement) -> LambdaElement:
    """The second product on Lambda: pointwise product of the ghosts,
    pulled back.  Unit: 1 - z."""
    f._like(g)
    _require_q(f.ring)
    return ghost_inverse(ghost(f).hadamard(ghost(g)))


# -- the log/exp isomorphism ---------------------------------------------


def _cumulant_seq(law: OneDimLaw) -> list[RingElement]:
    """kappa_1..kappa_n of the law, via the series layer."""
    from .boxconv import cumulants_from_moments

    r = cumulants_from_moments(law.to_series())
    return [r.coeff((1,) * k) for k in range(1, law.order + 1)]


def _law_from_cumulant_seq(kappas: Sequence[RingElement],
                           ring: RingDescriptor) -> OneDimLaw:
    data = {}
    for k, v in enumerate(kappas, start=1):
        if not v.is_zero:
            data[(1,) * k] = v
    r = TruncSeries._trusted(1, len(kappas), ring, data)
    return OneDimLaw.from_series(moments_from_cumulants(r))


def log_iso(law: OneDimLaw) -> OneDimLaw:
    """Carry a mean-1 law of order n to the law of order n-1 whose cumulant
    sequence is the ghost of the S-transform.  Turns the multiplicative
    free convolution into the additive one."""
    _require_q(law.ring)
    if not law.has_unit_mean():
        raise GroupMembershipError(
            f"mean {law.mean.serialize()} is not 1"
        )
    if law.order < 2:
        raise DomainError("need order at least 2: the output is one order lower")
    s = s_transform(law)  # constant term 1 because the mean is 1
    lam = LambdaElement(law.ring, s.coeffs[1:])
    h = ghost(lam)
    return _law_from_cumulant_seq(h.coeffs, law.ring)


def exp_iso(law: OneDimLaw) -> OneDimLaw:
    """Inverse of :func:`log_iso`; raises the order by one."""
    _require_q(law.ring)
    kappas = _cumulant_seq(law)
    lam = ghost_inverse(Series1(law.ring, kappas))
    s = Series1(law.ring, [law.ring.one, *lam.coeffs])
    return s_inverse(s)


def circled_ast(m1: OneDimLaw, m2: OneDimLaw) -> OneDimLaw:
    """Second ring operation on mean-1 laws: multiply S-transforms with the
    pulled-back ghost product."""
    _require_q(m1.ring)
    if m1.ring != m2.ring or m1.order != m2.order:
        raise ShapeMismatchError("laws of different shape")
    for law in (m1, m2):
        if not law.has_unit_mean():
            raise GroupMembershipError(
                f"mean {law.mean.serialize()} is not 1"
            )
    if m1.order == 1:
        return OneDimLaw(m1.ring, [m1.ring.one])
    s1 = s_transform(m1)
    s2 = s_transform(m2)
    prod = witt_mul(
        LambdaElement(m1.ring, s1.coeffs[1:]),
        LambdaElement(m2.ring, s2.coeffs[1:]),
    )
    return s_inverse(Series1(m1.ring, [m1.ring.one, *prod.coeffs]))


def circled_ast_unit(order: int, ring: RingDescriptor) -> OneDimLaw:
    """The law whose S-transform is 1 - z: the unit for circled_ast."""
    _require_q(ring)
    if order == 1:
        return OneDimLaw(ring, [ring.one])
    lam = LambdaElement.one_minus_z(order - 1, ring)
    return s_inverse(Series1(ring, [ring.one, *lam.coeffs]))


def hadamard_box(m1: OneDimLaw, m2: OneDimLaw) -> OneDimLaw:
    """Pointwise product of cumulant sequences, through the table layer."""
    got = hadamard_law_mul(m1.to_distribution(), m2.to_distribution())
    return OneDimLaw.from_distribution(got)


def law_free_add(m1: OneDimLaw, m2: OneDimLaw) -> OneDimLaw:
    """Free additive convolution of one-variable laws."""
    if m1.ring != m2.ring or m1.order != m2.order:
        raise ShapeMismatchError("laws of different shape")
    return OneDimLaw.from_series(free_add(m1.to_series(), m2.to_series()))


def law_free_mul(m1: OneDimLaw, m2: OneDimLaw) -> OneDimLaw:
    """Free multiplicative convolution of one-variable laws."""
    if m1.ring != m2.ring or m1.order != m2.order:
        raise ShapeMismatchError("laws of different shape")
    return OneDimLaw.from_series(free_mul(m1.to_series(), m2.to_series()))
