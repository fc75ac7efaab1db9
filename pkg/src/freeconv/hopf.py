"""Coordinate Hopf algebra of the convolution group and its triangular
matrix representation.

The coordinate ring is the commutative polynomial ring on generators X_w,
one per word, with the degree-1 generators X_i inverted.  Structure maps
come from evaluating coordinates on a boxed convolution:

    Delta X_w = sum over pi of X_{w,pi} (x) X_{w,K(pi)}
    eps(X_w)  = 1 if |w| = 1 else 0
    S(X_i)    = X_i^{-1}
    S(X_w)    = -(X_{i_1}^{-1} ... X_{i_n}^{-1}) *
                sum over pi != discrete of X_{w,pi} * S(X_{w,K(pi)})

with X_{w,pi} the product of generators over the subwords along the blocks
of pi.  All coefficients are plain integers; rings enter only on
evaluation.

The matrix model sends a series f to the matrix of right translation by f
acting on coordinate monomials of bounded total weight: the column of a
basis monomial m lists the coefficients expressing m( . box f) in the
basis.  With the basis ordered by ascending weight and, within a weight, by
descending number of factors, every matrix is upper-triangular; its
diagonal entry at a monomial is the product of degree-1 coefficients of f
over all letters appearing in that monomial.  The map is a homomorphism
and is injective on series truncated at the weight bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iter_product

from .boxconv import _block_prod, _pair_data
from .errors import DomainError, GroupMembershipError, OrderError
from .rings import RingDescriptor, RingElement
from .series import TruncSeries, all_words, word_key

__all__ = [
    "GenPolynomial",
    "TensorPolynomial",
    "RepMatrix",
    "coproduct",
    "counit",
    "antipode",
    "evaluate",
    "hopf_axiom_check",
    "HopfReport",
    "rep_basis",
    "s_transform",
    "verify_s_multiplicativity",
    "SReport",
]


# A monomial is a sorted tuple of (word, exponent) pairs; exponents are
# nonzero, and only degree-1 words may carry negative ones.
Mono = tuple


def _mono_canon(pairs) -> Mono:
    acc: dict[tuple, int] = {}
    for w, e in pairs:
        if e == 0:
            continue
        acc[w] = acc.get(w, 0) + e
    out = []
    for w, e in acc.items():
        if e == 0:
            continue
        if e < 0 and len(w) != 1:
            raise DomainError(f"negative power of non-invertible generator X{w}")
        out.append((w, e))
    out.sort(key=lambda we: word_key(we[0]))
    return tuple(out)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    return _mono_canon([*m1, *m2])


def _mono_weight(m: Mono) -> int:
    return sum(len(w) * e for w, e in m)


def _mono_str(m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for w, e in m:
        base = "X(" + ",".join(map(str, w)) + ")"
        parts.append(base if e == 1 else f"{base}^{e}")
    return "*".join(parts)


def _restriction_mono(word, blocks) -> Mono:
    """Product of generators over the subwords cut out by 0-based blocks."""
    return _mono_canon(
        [(tuple(word[i] for i in b), 1) for b in blocks]
    )


class GenPolynomial:
    """Integer-coefficient polynomial in the generators X_w, with the
    degree-1 generators invertible."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Mono, int] = {}
        if terms:
            for mono, c in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(c, int):
                    raise DomainError(f"coefficient {c!r} is not an integer")
                m = _mono_canon(mono)
                c = data.get(m, 0) + c
                if c:
                    data[m] = c
                else:
                    data.pop(m, None)
        object.__setattr__(self, "terms", data)

    @classmethod
    def _trusted(cls, data: dict) -> "GenPolynomial":
        self = object.__new__(cls)
        object.__setattr__(self, "terms", data)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("GenPolynomial is immutable")

    @staticmethod
    def zero() -> "GenPolynomial":
        return GenPolynomial._trusted({})

    @staticmethod
    def one() -> "GenPolynomial":
        return GenPolynomial._trusted({(): 1})

    @staticmethod
    def gen(word, exponent: int = 1) -> "GenPolynomial":
        w = tuple(word)
        return GenPolynomial([(((w, exponent),), 1)])

    def __add__(self, other: "GenPolynomial") -> "GenPolynomial":
        data = dict(self.terms)
        for m, c in other.terms.items():
            c2 = data.get(m, 0) + c
            if c2:
                data[m] = c2
            else:
                data.pop(m, None)
        return GenPolynomial._trusted(data)

    def __neg__(self) -> "GenPolynomial":
        return GenPolynomial._trusted({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "GenPolynomial") -> "GenPolynomial":
        return self + (-other)

    def __mul__(self, other: "GenPolynomial") -> "GenPolynomial":
        data: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = data.get(m, 0) + c1 * c2
                if c:
                    data[m] = c
                else:
                    data.pop(m, None)
        return GenPolynomial._trusted(data)

    def scale(self, k: int) -> "GenPolynomial":
        if k == 0:
            return GenPolynomial.zero()
        return GenPolynomial._trusted({m: k * c for m, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, GenPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"GenPolynomial({len(self.terms)} terms)"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (_mono_weight(m), m)):
            c = self.terms[m]
            body = _mono_str(m)
            if body == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


class TensorPolynomial:
    """Integer combination of monomial (x) monomial pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[tuple, int] = {}
        if terms:
            for (m1, m2), c in (terms.items() if isinstance(terms, dict) else terms):
                key = (_mono_canon(m1), _mono_canon(m2))
                c = data.get(key, 0) + c
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        object.__setattr__(self, "terms", data)

    @classmethod
    def _trusted(cls, data: dict) -> "TensorPolynomial":
        self = object.__new__(cls)
        object.__setattr__(self, "terms", data)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("TensorPolynomial is immutable")

    def __add__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        data = dict(self.terms)
        for k, c in other.terms.items():
            c2 = data.get(k, 0) + c
            if c2:
                data[k] = c2
            else:
                data.pop(k, None)
        return TensorPolynomial._trusted(data)

    def __mul__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        data: dict[tuple, int] = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                key = (_mono_mul(a1, b1), _mono_mul(a2, b2))
                c = data.get(key, 0) + c1 * c2
                if c:
                    data[key] = c
                else:
                    data.pop(key, None)
        return TensorPolynomial._trusted(data)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorPolynomial) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"TensorPolynomial({len(self.terms)} terms)"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (m1, m2) in sorted(self.terms):
            c = self.terms[(m1, m2)]
            body = f"{_mono_str(m1)}(x){_mono_str(m2)}"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


def coproduct(word) -> TensorPolynomial:
    """Delta X_w as the non-crossing tensor sum."""
    w = tuple(word)
    n = len(w)
    data: dict[tuple, int] = {}
    for blocks, kblocks in _pair_data(n):
        key = (_restriction_mono(w, blocks), _restriction_mono(w, kblocks))
        data[key] = data.get(key, 0) + 1
    return TensorPolynomial._trusted(data)


def _delta_mono(m: Mono) -> TensorPolynomial:
    """Delta extended multiplicatively; degree-1 generators are group-like
    with group-like inverses."""
    out = TensorPolynomial._trusted({((), ()): 1})
    for w, e in m:
        if len(w) == 1:
            gl = TensorPolynomial._trusted({(((w, e),), ((w, e),)): 1})
            out = out * gl
        else:
            dw = coproduct(w)
            for _ in range(e):
                out = out * dw
    return out


def _delta_poly(p: GenPolynomial) -> TensorPolynomial:
    out = TensorPolynomial._trusted({})
    for m, c in p.terms.items():
        d = _delta_mono(m)
        out = out + TensorPolynomial._trusted(
            {k: v * c for k, v in d.terms.items()}
        )
    return out


def counit(p: GenPolynomial) -> int:
    """Evaluate at the unit series: kill every generator of degree >= 2,
    send every X_i^e to 1."""
    total = 0
    for m, c in p.terms.items():
        if all(len(w) == 1 for w, _ in m):
            total += c
    return total


_antipode_memo: dict[tuple, GenPolynomial] = {}


def antipode(word) -> GenPolynomial:
    """S(X_w), unrolled to a canonical polynomial via the standard
    recursion over non-discrete partitions."""
    w = tuple(word)
    got = _antipode_memo.get(w)
    if got is not None:
        return got
    n = len(w)
    if n == 1:
        out = GenPolynomial.gen(w, -1)
        _antipode_memo[w] = out
        return out
    prefactor = _mono_canon([((x,), -1) for x in w])
    total = GenPolynomial.zero()
    for blocks, kblocks in _pair_data(n):
        if len(blocks) == n:
            continue  # discrete partition: that term holds the unknown
        left = GenPolynomial._trusted({_restriction_mono(w, blocks): 1})
        right = _antipode_mono(_restriction_mono(w, kblocks))
        total = total + left * right
    out = GenPolynomial._trusted(
        {_mono_mul(prefactor, m): -c for m, c in total.terms.items()}
    )
    _antipode_memo[w] = out
    return out


def _antipode_mono(m: Mono) -> GenPolynomial:
    """S on a monomial: antipodes of the factors multiplied out (the ring
    is commutative, so S is an algebra homomorphism)."""
    out = GenPolynomial.one()
    for w, e in m:
        base = antipode(w)
        if e < 0:
            # only degree-1 generators get here: S(X_i^{-1}) = X_i
            base = GenPolynomial.gen(w, 1)
            e = -e
        for _ in range(e):
            out = out * base
    return out


def evaluate(p: GenPolynomial, f: TruncSeries) -> RingElement:
    """Substitute X_w -> coeff(f, w) and evaluate in f's ring."""
    ring = f.ring
    total = ring.zero
    for m, c in p.terms.items():
        val = ring(c)
        for w, e in m:
            if val.is_zero:
                break
            val = val * f.coeff(w) ** e
        total = total + val
    return total


@dataclass
class HopfReport:
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def note(self, name: str, word, good: bool) -> None:
        self.checks += 1
        if not good:
            self.failures.append(f"{name} fails at X{tuple(word)}")


def hopf_axiom_check(order: int, s: int) -> HopfReport:
    """Symbolically verify coassociativity, the counit laws, and both
    antipode laws on every generator X_w with |w| <= order."""
    report = HopfReport()
    for w in all_words(s, order):
        d = coproduct(w)

        # coassociativity: expand both ways into triple tensors
        left: dict[tuple, int] = {}
        right: dict[tuple, int] = {}
        for (m1, m2), c in d.terms.items():
            for (a, b), c2 in _delta_mono(m1).terms.items():
                key = (a, b, m2)
                left[key] = left.get(key, 0) + c * c2
            for (a, b), c2 in _delta_mono(m2).terms.items():
                key = (m1, a, b)
                right[key] = right.get(key, 0) + c * c2
        report.note(
            "coassociativity", w,
            {k: v for k, v in left.items() if v}
            == {k: v for k, v in right.items() if v},
        )

        # counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
        xw = GenPolynomial.gen(w)
        lhs = GenPolynomial.zero()
        rhs = GenPolynomial.zero()
        for (m1, m2), c in d.terms.items():
            e1 = counit(GenPolynomial._trusted({m1: 1}))
            e2 = counit(GenPolynomial._trusted({m2: 1}))
            if e1:
                lhs = lhs + GenPolynomial._trusted({m2: c * e1})
            if e2:
                rhs = rhs + GenPolynomial._trusted({m1: c * e2})
        report.note("counit-left", w, lhs == xw)
        report.note("counit-right", w, rhs == xw)

        # antipode laws: m(S (x) id) Delta = eps * 1 = m(id (x) S) Delta
        want = GenPolynomial.one().scale(counit(xw))
        left_p = GenPolynomial.zero()
        right_p = GenPolynomial.zero()
        for (m1, m2), c in d.terms.items():
            left_p = left_p + (
                _antipode_mono(m1) * GenPolynomial._trusted({m2: 1})
            ).scale(c)
            right_p = right_p + (
                GenPolynomial._trusted({m1: 1}) * _antipode_mono(m2)
            ).scale(c)
        report.note("antipode-left", w, left_p == want)
        report.note("antipode-right", w, right_p == want)
    return report


# -- matrix model --------------------------------------------------------


@lru_cache(maxsize=None)
def rep_basis(s: int, n: int):
    """Monomials of total weight 1..n as sorted word tuples, ordered by
    (weight, descending factor count, words)."""
    if n < 1 or s < 1:
        raise DomainError(f"bad basis parameters s={s}, n={n}")
    words = list(all_words(s, n))
    basis = []

    def grow(start: int, acc: tuple, weight: int) -> None:
        if acc:
            basis.append(acc)
        for i in range(start, len(words)):
            w = words[i]
            if weight + len(w) > n:
                continue
            grow(i, acc + (w,), weight + len(w))

    grow(0, (), 0)
    basis.sort(
        key=lambda m: (
            sum(len(w) for w in m),
            -len(m),
            tuple(word_key(w) for w in m),
        )
    )
    return tuple(basis)


def _basis_mono_str(m) -> str:
    return _mono_str(_mono_canon([(w, 1) for w in m]))


class RepMatrix:
    """Square matrix over a ring, carrying its monomial basis."""

    __slots__ = ("s", "n", "ring", "basis", "rows")

    def __init__(self, s, n, ring, basis, rows):
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RepMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.basis)

    def entry(self, i: int, j: int) -> RingElement:
        return self.rows[i][j]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.s != other.s or self.n != other.n or self.ring != other.ring:
            raise DomainError("matrix shapes differ")
        size = self.size
        zero = self.ring.zero
        out = []
        for i in range(size):
            arow = self.rows[i]
            acc = [zero] * size
            for k in range(size):
                a = arow[k]
                if a.is_zero:
                    continue
                brow = other.rows[k]
                for j in range(size):
                    b = brow[j]
                    if not b.is_zero:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return RepMatrix(self.s, self.n, self.ring, self.basis, tuple(out))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RepMatrix)
            and self.s == other.s
            and self.n == other.n
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"RepMatrix(s={self.s}, n={self.n}, size={self.size})"

    def is_upper_triangular(self) -> bool:
        return all(
            self.rows[i][j].is_zero
            for i in range(self.size)
            for j in range(i)
        )

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.size))

    def is_unipotent(self) -> bool:
        return self.is_upper_triangular() and all(
            d.is_one for d in self.diagonal()
        )

    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j].is_zero
            for i in range(self.size)
            for j in range(self.size)
            if i != j
        )

    def restrict(self, m: int) -> "RepMatrix":
        """Leading block on the monomials of weight <= m (a basis prefix)."""
        if m > self.n or m < 1:
            raise DomainError(f"cannot restrict order {self.n} to {m}")
        k = sum(1 for b in self.basis if sum(len(w) for w in b) <= m)
        rows = tuple(tuple(row[:k]) for row in self.rows[:k])
        return RepMatrix(self.s, m, self.ring, self.basis[:k], rows)

    @staticmethod
    def identity(s: int, n: int, ring: RingDescriptor) -> "RepMatrix":
        basis = rep_basis(s, n)
        size = len(basis)
        rows = tuple(
            tuple(ring.one if i == j else ring.zero for j in range(size))
            for i in range(size)
        )
        return RepMatrix(s, n, ring, basis, rows)

    def to_obj(self) -> dict:
        return {
            "s": self.s,
            "n": self.n,
            "ring": self.ring.serialize(),
            "basis": [[list(w) for w in m] for m in self.basis],
            "legend": [_basis_mono_str(m) for m in self.basis],
            "rows": [[v.serialize() for v in row] for row in self.rows],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), indent=2)

    @staticmethod
    def from_obj(obj) -> "RepMatrix":
        from .errors import ParseError
        from .rings import RingDescriptor

        try:
            s, n = obj["s"], obj["n"]
            ring = RingDescriptor.parse(obj["ring"])
            basis = tuple(
                tuple(tuple(w) for w in m) for m in obj["basis"]
            )
            rows = tuple(
                tuple(ring(v) for v in row) for row in obj["rows"]
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad matrix object: {exc}") from exc
        if basis != rep_basis(s, n):
            raise ParseError("basis does not match the stated parameters")
        if len(rows) != len(basis) or any(len(r) != len(basis) for r in rows):
            raise ParseError("matrix is not square on its basis")
        return RepMatrix(s, n, ring, basis, rows)

    @staticmethod
    def loads(text: str) -> "RepMatrix":
        from .errors import ParseError

        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        return RepMatrix.from_obj(obj)


def s_transform(f: TruncSeries, n: int | None = None) -> RepMatrix:
    """Matrix of right translation by f on monomials of weight <= n.

    Homomorphism from the unit group into upper-triangular matrices;
    unipotent inputs land in the unipotent subgroup, purely degree-1 inputs
    in the diagonal torus.
    """
    if n is None:
        n = f.order
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"bad order {n!r}")
    if n > f.order:
        raise OrderError(f"series order {f.order} below requested weight {n}")
    if not f.in_unit_group():
        raise GroupMembershipError(
            "series lies outside the unit group: a degree-1 coefficient "
            "is not invertible"
        )
    basis = rep_basis(f.s, n)
    index = {m: i for i, m in enumerate(basis)}
    ring = f.ring
    zero = ring.zero
    fc = f._coeffs
    size = len(basis)
    cols: list[dict[int, RingElement]] = []
    for mono in basis:
        col: dict[int, RingElement] = {}
        choice_lists = [_pair_data(len(w)) for w in mono]
        for picks in iter_product(*choice_lists):
            fval = None
            ok = True
            for w, (blocks, kblocks) in zip(mono, picks):
                v = _block_prod(fc, w, kblocks)
                if v is None:
                    ok = False
                    break
                fval = v if fval is None else fval * v
            if not ok:
                continue
            target = tuple(
                sorted(
                    (
                        tuple(w[i] for i in b)
                        for w, (blocks, _) in zip(mono, picks)
                        for b in blocks
                    ),
                    key=word_key,
                )
            )
            i = index[target]
            col[i] = col.get(i, zero) + fval
        cols.append(col)
    rows = tuple(
        tuple(cols[j].get(i, zero) for j in range(size)) for i in range(size)
    )
    return RepMatrix(f.s, n, ring, basis, rows)


@dataclass
class SReport:
    ok: bool
    left: RepMatrix
    right: RepMatrix

    def __str__(self) -> str:
        verdict = "holds" if self.ok else "FAILS"
        return (
            f"matrix identity {verdict} at size {self.left.size} "
            f"(s={self.left.s}, n={self.left.n})"
        )


def verify_s_multiplicativity(d, a_names, b_names, n: int) -> SReport:
    """Check that the matrix transform of a free product tuple factors:
    the transform of the component-wise product of two free groups equals
    the product of their transforms."""
    from .distributions import (
        is_combinatorially_free,
        r_transform,
        tuple_mul,
    )

    if not isinstance(n, int) or n < 1:
        raise DomainError(f"bad order {n!r}")
    if d.order < 2 * n:
        raise OrderError(
            f"table order {d.order} below 2n = {2 * n} needed for products"
        )
    if not is_combinatorially_free(d, [list(a_names), list(b_names)]):
        raise DomainError("generator groups are not combinatorially free")
    ra = r_transform(d, a_names).truncate(n)
    rb = r_transform(d, b_names).truncate(n)
    prod = tuple_mul(d, a_names, b_names, order=n)
    rab = r_transform(prod)
    left = s_transform(rab, n)
    right = s_transform(ra, n) @ s_transform(rb, n)
    return SReport(ok=(left == right), left=left, right=right)
