"""The boxed convolution on truncated series, its group structure, and the
derived free convolutions on moment series.

The product is defined coefficient-wise by a sum over non-crossing
partitions,

    X_w(f box g) = sum over pi in NC(|w|) of X_{w,pi}(f) * X_{w,K(pi)}(g),

where X_{w,pi} is the product of coefficients over the subwords cut out by
the blocks of pi and K is the Kreweras complement.  The coefficient of a
word of length n depends only on input coefficients of degree <= n, which
makes the product compatible with truncation and lets inverses be solved
degree by degree.

Series whose degree-1 coefficients are units form a group; the all-ones
series Zeta and its inverse Moeb translate between moment and cumulant
coordinates, giving the free additive and multiplicative convolutions:

    moments = cumulants box Zeta
    f boxplus g  = (f box Moeb + g box Moeb) box Zeta
    f boxtimes g = f box Moeb box g
"""

from __future__ import annotations

from functools import lru_cache

from .errors import GroupMembershipError
from .partitions import enumerate_nc, kreweras
from .rings import RingDescriptor
from .series import TruncSeries, all_words

__all__ = [
    "box_conv",
    "unit_series",
    "zeta_series",
    "moeb_series",
    "box_inverse",
    "semidirect_decompose",
    "free_add",
    "free_mul",
    "moments_from_cumulants",
    "cumulants_from_moments",
]


@lru_cache(maxsize=None)
def _pair_data(n: int):
    """For each pi in NC(n): (blocks of pi, blocks of K(pi)), 0-based."""
    out = []
    for p in enumerate_nc(n):
        k = kreweras(p)
        out.append(
            (
                tuple(tuple(i - 1 for i in b) for b in p.blocks),
                tuple(tuple(i - 1 for i in b) for b in k.blocks),
            )
        )
    return tuple(out)


def _block_prod(coeffs: dict, word, blocks):
    """Product of coefficients over subwords along blocks; None means zero."""
    out = None
    for b in blocks:
        v = coeffs.get(tuple(word[i] for i in b))
        if v is None:
            return None
        out = v if out is None else out * v
    return out


def box_conv(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """The boxed convolution of two series of matching shape."""
    f._like(g)
    fc, gc = f._coeffs, g._coeffs
    data = {}
    for w in all_words(f.s, f.order):
        total = None
        for pib, kib in _pair_data(len(w)):
            a = _block_prod(fc, w, pib)
            if a is None:
                continue
            b = _block_prod(gc, w, kib)
            if b is None:
                continue
            t = a * b
            total = t if total is None else total + t
        if total is not None and not total.is_zero:
            data[w] = total
    return TruncSeries._trusted(f.s, f.order, f.ring, data)


def unit_series(s: int, order: int, ring: RingDescriptor) -> TruncSeries:
    """z_1 + ... + z_s, the two-sided unit for the boxed convolution."""
    return TruncSeries.variables(s, order, ring)


def zeta_series(s: int, order: int, ring: RingDescriptor) -> TruncSeries:
    """All coefficients 1; sends cumulant series to moment series."""
    return TruncSeries.ones(s, order, ring)


def box_inverse(f: TruncSeries) -> TruncSeries:
    """Two-sided inverse for the boxed convolution, solved degree by degree.

    Requires every degree-1 coefficient of ``f`` to be a unit.
    """
    if not f.in_unit_group():
        raise GroupMembershipError(
            "series lies outside the unit group: a degree-1 coefficient "
            "is not invertible"
        )
    fc = f._coeffs
    ring = f.ring
    inv1 = {i: fc[(i,)].inverse() for i in range(1, f.s + 1)}
    data = {(i,): v for i, v in inv1.items()}
    for n in range(2, f.order + 1):
        pairs = _pair_data(n)
        for w in all_words(f.s, n, min_len=n):
            # 0 = X_{w,0_n}(f) g_w + sum over pi != 0_n, and every K(pi)
            # there has all blocks shorter than n, so g is already known
            acc = None
            for pib, kib in pairs:
                if len(pib) == n:
                    continue
                a = _block_prod(fc, w, pib)
                if a is None:
                    continue
                b = _block_prod(data, w, kib)
                if b is None:
                    continue
                t = a * b
                acc = t if acc is None else acc + t
            if acc is not None and not acc.is_zero:
                lead = ring.one
                for x in w:
                    lead = lead * inv1[x]
                data[w] = -(lead * acc)
    return TruncSeries._trusted(f.s, f.order, f.ring, data)


@lru_cache(maxsize=None)
def _moeb_cached(s: int, order: int, ring: RingDescriptor) -> TruncSeries:
    return box_inverse(zeta_series(s, order, ring))


def moeb_series(s: int, order: int, ring: RingDescriptor) -> TruncSeries:
    """The boxed-convolution inverse of Zeta; sends moments to cumulants."""
    return _moeb_cached(s, order, ring)


def semidirect_decompose(f: TruncSeries) -> tuple[TruncSeries, TruncSeries]:
    """Split f = t box u with t in the torus (degree-1 only) and u unipotent
    (degree-1 coefficients all 1)."""
    if not f.in_unit_group():
        raise GroupMembershipError(
            "series lies outside the unit group: a degree-1 coefficient "
            "is not invertible"
        )
    t_data = {(i,): f._coeffs[(i,)] for i in range(1, f.s + 1)}
    t = TruncSeries._trusted(f.s, f.order, f.ring, t_data)
    u = box_conv(box_inverse(t), f)
    return t, u


def free_add(mf: TruncSeries, mg: TruncSeries) -> TruncSeries:
    """Free additive convolution on moment series: add cumulants, then
    return to moments."""
    mf._like(mg)
    moeb = moeb_series(mf.s, mf.order, mf.ring)
    zeta = zeta_series(mf.s, mf.order, mf.ring)
    return box_conv(box_conv(mf, moeb) + box_conv(mg, moeb), zeta)


def free_mul(mf: TruncSeries, mg: TruncSeries) -> TruncSeries:
    """Free multiplicative convolution on moment series."""
    mf._like(mg)
    moeb = moeb_series(mf.s, mf.order, mf.ring)
    return box_conv(box_conv(mf, moeb), mg)


def moments_from_cumulants(r: TruncSeries) -> TruncSeries:
    """M = R box Zeta."""
    return box_conv(r, zeta_series(r.s, r.order, r.ring))


def cumulants_from_moments(m: TruncSeries) -> TruncSeries:
    """R = M box Moeb."""
    return box_conv(m, moeb_series(m.s, m.order, m.ring))
