"""Boxed convolution tests: group laws, special series, free convolutions.

Expected values marked by hand were derived from the defining NC sum:
X_w(f box g) = sum over pi of X_{w,pi}(f) X_{w,K(pi)}(g).
"""

import random

import pytest

from freeconv.boxconv import (
    box_conv,
    box_inverse,
    cumulants_from_moments,
    free_add,
    free_mul,
    moeb_series,
    moments_from_cumulants,
    semidirect_decompose,
    unit_series,
    zeta_series,
)
from freeconv.errors import GroupMembershipError, ShapeMismatchError
from freeconv.randgen import rand_series, rand_unit_series
from freeconv.rings import QQ, mod_ring
from freeconv.series import TruncSeries


def S(coeffs, s=1, order=4, ring=QQ):
    return TruncSeries(s, order, ring, coeffs)


def test_unit_is_two_sided():
    rng = random.Random(3)
    for s, order in [(1, 4), (2, 3)]:
        u = unit_series(s, order, QQ)
        for _ in range(10):
            f = rand_series(rng, s, order, QQ, 0.8)
            assert box_conv(f, u) == f
            assert box_conv(u, f) == f


def test_degree_two_formula():
    # (az + bz^2) box (cz + dz^2) = ac z + (a^2 d + b c^2) z^2
    a, b, c, d = QQ(2), QQ(3), QQ(5), QQ(7)
    f = S({(1,): a, (1, 1): b}, order=2)
    g = S({(1,): c, (1, 1): d}, order=2)
    got = box_conv(f, g)
    assert got.coeff((1,)) == a * c
    assert got.coeff((1, 1)) == a * a * d + b * c * c


def test_not_distributive_witness():
    # (z+z^2) box (2z) = 2z + 4z^2, but splitting 2z as z+z gives 2z + 2z^2
    f = S({(1,): 1, (1, 1): 1}, order=2)
    two_z = S({(1,): 2}, order=2)
    z = S({(1,): 1}, order=2)
    lumped = box_conv(f, two_z)
    split = box_conv(f, z) + box_conv(f, z)
    assert lumped == S({(1,): 2, (1, 1): 4}, order=2)
    assert split == S({(1,): 2, (1, 1): 2}, order=2)
    assert lumped != split


def test_not_commutative_witness_s2():
    # hand expansion of the NC(3) sum at word (1,2,1):
    #   X_w(f box g) = f_12 f_1 g_1 g_21 + f_11 f_2 g_12 g_1 + f_1 f_21 g_11 g_2
    #                  + f_111... (0_3 and 1_3 terms)
    # with f = z1+z2+z1z2, g = z1+z2+z1z1 only the g11 term survives in one
    # order and nothing in the other
    f = S({(1,): 1, (2,): 1, (1, 2): 1}, s=2, order=3)
    g = S({(1,): 1, (2,): 1, (1, 1): 1}, s=2, order=3)
    fg = box_conv(f, g)
    gf = box_conv(g, f)
    assert fg.coeff((1, 2, 1)) == QQ(0)
    assert gf.coeff((1, 2, 1)) == QQ(1)
    assert fg != gf


def test_associativity_randomized():
    rng = random.Random(11)
    for ring in (QQ, mod_ring(97)):
        for _ in range(12):
            s = rng.choice([1, 2])
            order = rng.choice([3, 4, 5])
            f = rand_series(rng, s, order, ring, 0.7)
            g = rand_series(rng, s, order, ring, 0.7)
            h = rand_series(rng, s, order, ring, 0.7)
            assert box_conv(box_conv(f, g), h) == box_conv(f, box_conv(g, h))


def test_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        box_conv(S({}, order=2), S({}, order=3))


def test_zeta_and_moeb_pinned():
    z = zeta_series(1, 3, QQ)
    assert z == S({(1,): 1, (1, 1): 1, (1, 1, 1): 1}, order=3)
    z2 = zeta_series(2, 2, QQ)
    assert all(z2.coeff(w) == QQ(1) for w in [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)])

    m = moeb_series(1, 5, QQ)
    assert [m.coeff((1,) * n) for n in range(1, 6)] == [
        QQ(1), QQ(-1), QQ(2), QQ(-5), QQ(14),
    ]
    m2 = moeb_series(2, 2, QQ)
    for w in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        assert m2.coeff(w) == QQ(-1)


def test_moeb_is_two_sided_inverse_of_zeta():
    for s, order in [(1, 5), (2, 4)]:
        z = zeta_series(s, order, QQ)
        m = moeb_series(s, order, QQ)
        u = unit_series(s, order, QQ)
        assert box_conv(m, z) == u
        assert box_conv(z, m) == u


def test_box_inverse_pinned():
    u = unit_series(1, 3, QQ)
    assert box_inverse(u) == u
    f = S({(1,): 1, (1, 1): 5}, order=2)
    assert box_inverse(f) == S({(1,): 1, (1, 1): -5}, order=2)
    g = S({(1,): 2}, order=1)
    assert box_inverse(g) == S({(1,): QQ("1/2")}, order=1)


def test_box_inverse_randomized():
    rng = random.Random(23)
    for ring in (QQ, mod_ring(101)):
        for _ in range(10):
            s = rng.choice([1, 2])
            order = rng.choice([3, 4, 5])
            f = rand_unit_series(rng, s, order, ring)
            g = box_inverse(f)
            u = unit_series(s, order, ring)
            assert box_conv(f, g) == u
            assert box_conv(g, f) == u


def test_box_inverse_requires_units():
    f = S({(1, 1): 1}, order=2)  # degree-1 coefficient 0
    with pytest.raises(GroupMembershipError):
        box_inverse(f)


def test_semidirect_pinned():
    f = S({(1,): 2, (1, 1): 3}, order=2)
    t, u = semidirect_decompose(f)
    assert t == S({(1,): 2}, order=2)
    assert u == S({(1,): 1, (1, 1): QQ("3/4")}, order=2)
    assert box_conv(t, u) == f


def test_semidirect_randomized():
    rng = random.Random(31)
    for _ in range(10):
        s = rng.choice([1, 2])
        order = rng.choice([2, 3, 4])
        f = rand_unit_series(rng, s, order, QQ)
        t, u = semidirect_decompose(f)
        assert t.support() == [(i,) for i in range(1, s + 1)]
        assert u.in_unipotent_part()
        assert box_conv(t, u) == f
    g = S({(1,): 1, (1, 1): 9}, order=2)
    t, u = semidirect_decompose(g)
    assert t == unit_series(1, 2, QQ) and u == g


def test_degree_locality():
    rng = random.Random(41)
    for _ in range(8):
        s = rng.choice([1, 2])
        f = rand_series(rng, s, 5, QQ, 0.8)
        g = rand_series(rng, s, 5, QQ, 0.8)
        m = rng.choice([1, 2, 3, 4])
        assert box_conv(f, g).truncate(m) == box_conv(f.truncate(m), g.truncate(m))


def test_integrality():
    # integer inputs give integer outputs: the structure constants are in Z
    rng = random.Random(43)
    for _ in range(6):
        s = rng.choice([1, 2])
        f = TruncSeries(s, 4, QQ, {w: rng.randint(-4, 4) for w in
                                   rand_series(rng, s, 4, QQ).support()})
        g = TruncSeries(s, 4, QQ, {w: rng.randint(-4, 4) for w in
                                   rand_series(rng, s, 4, QQ).support()})
        h = box_conv(f, g)
        assert all(v.is_integer for _, v in h.terms())


def test_moment_cumulant_translation_pinned():
    # centered semicircle: single cumulant kappa_2 = 1 gives Catalan moments
    r = S({(1, 1): 1}, order=6)
    m = moments_from_cumulants(r)
    assert [m.coeff((1,) * n) for n in range(1, 7)] == [
        QQ(0), QQ(1), QQ(0), QQ(2), QQ(0), QQ(5),
    ]
    # point mass at a: cumulant series a z gives moments a^n
    a = QQ(3)
    r = S({(1,): a}, order=4)
    m = moments_from_cumulants(r)
    assert [m.coeff((1,) * n) for n in range(1, 5)] == [a, a**2, a**3, a**4]
    # compound Poisson rates: kappa_n = lam * alpha^n
    lam, alpha = QQ(2), QQ(3)
    r = S({(1,): lam * alpha, (1, 1): lam * alpha**2}, order=2)
    m = moments_from_cumulants(r)
    assert m.coeff((1,)) == lam * alpha
    assert m.coeff((1, 1)) == lam * alpha**2 + lam**2 * alpha**2


def test_moment_cumulant_mutually_inverse():
    rng = random.Random(47)
    for ring in (QQ, mod_ring(97)):
        for _ in range(8):
            s = rng.choice([1, 2])
            order = rng.choice([3, 4, 5])
            f = rand_series(rng, s, order, ring, 0.8)
            assert cumulants_from_moments(moments_from_cumulants(f)) == f
            assert moments_from_cumulants(cumulants_from_moments(f)) == f


def dirac_moments(a, order):
    return S({(1,) * n: a**n for n in range(1, order + 1)}, order=order)


def test_free_add_pinned():
    a, b = QQ(2), QQ(-3)
    got = free_add(dirac_moments(a, 4), dirac_moments(b, 4))
    assert got == dirac_moments(a + b, 4)

    # two centered semicircles with kappa_2 = 1 add to kappa_2 = 2
    m1 = moments_from_cumulants(S({(1, 1): 1}, order=4))
    total = free_add(m1, m1)
    assert total.coeff((1, 1)) == QQ(2)
    assert total.coeff((1, 1, 1, 1)) == QQ(8)

    zero = dirac_moments(QQ(0), 4)  # the zero series
    f = S({(1,): 5, (1, 1): 7, (1, 1, 1): 2}, order=4)
    assert free_add(f, zero) == f


def test_free_mul_pinned():
    a, b = QQ(2), QQ(5)
    got = free_mul(dirac_moments(a, 4), dirac_moments(b, 4))
    assert got == dirac_moments(a * b, 4)
    one = dirac_moments(QQ(1), 4)  # equals Zeta at s=1
    assert one == zeta_series(1, 4, QQ)
    f = S({(1,): 5, (1, 1): 7, (1, 1, 1): 2}, order=4)
    assert free_mul(f, one) == f
    assert free_mul(one, f) == f


def test_free_add_commutative_associative():
    rng = random.Random(53)
    for _ in range(8):
        s = rng.choice([1, 2])
        order = rng.choice([3, 4, 5])
        f = rand_series(rng, s, order, QQ, 0.8)
        g = rand_series(rng, s, order, QQ, 0.8)
        h = rand_series(rng, s, order, QQ, 0.8)
        assert free_add(f, g) == free_add(g, f)
        assert free_add(free_add(f, g), h) == free_add(f, free_add(g, h))


def test_free_mul_associative():
    rng = random.Random(59)
    for _ in range(8):
        s = rng.choice([1, 2])
        order = rng.choice([3, 4])
        f = rand_series(rng, s, order, QQ, 0.8)
        g = rand_series(rng, s, order, QQ, 0.8)
        h = rand_series(rng, s, order, QQ, 0.8)
        assert free_mul(free_mul(f, g), h) == free_mul(f, free_mul(g, h))
