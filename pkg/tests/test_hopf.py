"""Structure maps of the coordinate ring and the matrix model."""

import random

import pytest

from freeconv.boxconv import box_conv, box_inverse, moeb_series, unit_series, zeta_series
from freeconv.distributions import JointDistribution, free_product, law_dirac
from freeconv.errors import (
    DomainError,
    GroupMembershipError,
    NotInvertibleError,
    OrderError,
)
from freeconv.hopf import (
    GenPolynomial,
    RepMatrix,
    TensorPolynomial,
    antipode,
    coproduct,
    counit,
    evaluate,
    hopf_axiom_check,
    rep_basis,
    s_transform,
    verify_s_multiplicativity,
)
from freeconv.randgen import rand_distribution, rand_unit, rand_unit_series
from freeconv.rings import QQ, mod_ring
from freeconv.series import TruncSeries


def gen(word, exp=1):
    return GenPolynomial.gen(word, exp)


class TestGenPolynomial:
    def test_algebra_basics(self):
        p = gen((1,)) + gen((1, 2)).scale(3)
        q = gen((2,)) - gen((1,))
        assert p * q == q * p
        assert p * (q + q) == p * q + p * q
        assert (p - p).is_zero()
        assert GenPolynomial.one() * p == p

    def test_exponent_merging(self):
        p = gen((1,)) * gen((1,)) * gen((1,), -1)
        assert p == gen((1,))
        assert gen((1,)) * gen((1,), -1) == GenPolynomial.one()

    def test_negative_power_of_long_word_rejected(self):
        with pytest.raises(DomainError):
            gen((1, 2), -1)

    def test_integer_coefficients_only(self):
        with pytest.raises(DomainError):
            GenPolynomial({(((1,), 1),): 1.5})

    def test_str(self):
        p = gen((1, 1)) - gen((1,), -2).scale(4)
        assert str(p) == "-4*X(1)^-2 + X(1,1)"


class TestCoproduct:
    def test_degree_one_grouplike(self):
        assert coproduct((1,)) == TensorPolynomial(
            {((((1,), 1),), (((1,), 1),)): 1}
        )

    def test_weight_two_same_letter(self):
        x1sq = (((1,), 2),)
        x11 = (((1, 1), 1),)
        want = TensorPolynomial({(x1sq, x11): 1, (x11, x1sq): 1})
        assert coproduct((1, 1)) == want

    def test_weight_two_mixed_letters(self):
        x1x2 = (((1,), 1), ((2,), 1))
        x12 = (((1, 2), 1),)
        want = TensorPolynomial({(x1x2, x12): 1, (x12, x1x2): 1})
        assert coproduct((1, 2)) == want

    def test_term_count_is_catalan(self):
        # one term per non-crossing partition, none collide for (1,2,1)
        assert len(coproduct((1, 2, 1)).terms) == 5
        # for a constant word only the block-size profiles survive: the 14
        # partitions of a 4-chain collapse to 6 profile pairs
        assert len(coproduct((1, 1, 1, 1)).terms) == 6

    def test_matches_convolution_coefficient(self):
        # Delta X_w evaluated on a pair of series is X_w of their product
        rng = random.Random(4)
        f = rand_unit_series(rng, 2, 3, QQ)
        g = rand_unit_series(rng, 2, 3, QQ)
        fg = box_conv(f, g)
        for w in [(1,), (2, 1), (1, 2, 2), (2, 1, 2)]:
            total = QQ(0)
            for (m1, m2), c in coproduct(w).terms.items():
                total = total + QQ(c) * evaluate(
                    GenPolynomial({m1: 1}), f
                ) * evaluate(GenPolynomial({m2: 1}), g)
            assert total == fg.coeff(w)


class TestCounit:
    def test_values_on_generators(self):
        assert counit(gen((1,))) == 1
        assert counit(gen((2,), -3)) == 1
        assert counit(gen((1, 1))) == 0
        assert counit(gen((1, 2, 1))) == 0

    def test_multiplicative_combination(self):
        p = gen((1,), -1) * gen((1, 1)) + gen((1,)).scale(3)
        assert counit(p) == 3


class TestAntipode:
    def test_degree_one(self):
        assert antipode((1,)) == gen((1,), -1)

    def test_weight_two(self):
        want = GenPolynomial({(((1,), -4), ((1, 1), 1)): -1})
        assert antipode((1, 1)) == want
        want12 = GenPolynomial({(((1,), -2), ((2,), -2), ((1, 2), 1)): -1})
        assert antipode((1, 2)) == want12

    @pytest.mark.parametrize("ring", [QQ, mod_ring(101)])
    def test_duality_with_series_inverse(self, ring):
        rng = random.Random(19)
        for s in (1, 2):
            f = rand_unit_series(rng, s, 4, ring)
            g = box_inverse(f)
            words = [w for m in rep_basis(s, 4) if len(m) == 1 for w in m]
            for w in words:
                assert evaluate(antipode(w), f) == g.coeff(w)

    def test_memo_returns_same_object(self):
        assert antipode((2, 2, 1)) is antipode((2, 2, 1))


class TestAxioms:
    def test_all_axioms_one_letter(self):
        report = hopf_axiom_check(4, 1)
        assert report.ok
        assert report.checks == 4 * 5
        assert report.failures == []

    def test_all_axioms_two_letters(self):
        report = hopf_axiom_check(3, 2)
        assert report.ok
        assert report.checks == (2 + 4 + 8) * 5


class TestEvaluate:
    def test_reads_coefficients(self):
        f = TruncSeries(1, 2, QQ, {(1,): QQ(2), (1, 1): QQ(7)})
        p = gen((1, 1)) + gen((1,), -1)
        assert evaluate(p, f) == QQ("15/2")

    def test_negative_power_needs_unit(self):
        f = TruncSeries(1, 2, mod_ring(5), {(1, 1): mod_ring(5)(1)})
        with pytest.raises(NotInvertibleError):
            evaluate(gen((1,), -1), f)

    def test_weight_beyond_order(self):
        f = unit_series(1, 2, QQ)
        with pytest.raises(OrderError):
            evaluate(gen((1, 1, 1)), f)


class TestRepBasis:
    def test_small_basis_pinned(self):
        assert rep_basis(1, 2) == (((1,),), ((1,), (1,)), ((1, 1),))

    def test_sizes(self):
        assert len(rep_basis(1, 1)) == 1
        assert len(rep_basis(1, 3)) == 6
        assert len(rep_basis(1, 5)) == 18
        assert len(rep_basis(2, 1)) == 2
        assert len(rep_basis(2, 4)) == 88

    def test_ordering(self):
        basis = rep_basis(2, 4)
        weights = [sum(len(w) for w in m) for m in basis]
        assert weights == sorted(weights)
        for a, b in zip(basis, basis[1:]):
            wa = sum(len(w) for w in a)
            wb = sum(len(w) for w in b)
            if wa == wb:
                assert len(a) >= len(b)

    def test_prefix_property(self):
        assert rep_basis(2, 3) == rep_basis(2, 4)[: len(rep_basis(2, 3))]


class TestSTransform:
    def test_unit_is_identity(self):
        u = unit_series(2, 3, QQ)
        assert s_transform(u, 3) == RepMatrix.identity(2, 3, QQ)

    def test_pinned_three_by_three(self):
        f = TruncSeries(1, 2, QQ, {(1,): QQ(1), (1, 1): QQ(5)})
        m = s_transform(f, 2)
        rows = [[str(v) for v in row] for row in m.rows]
        assert rows == [["1", "0", "0"], ["0", "1", "5"], ["0", "0", "1"]]
        assert m.is_unipotent()

    def test_torus_is_diagonal(self):
        f = TruncSeries(1, 2, QQ, {(1,): QQ(3)})
        m = s_transform(f, 2)
        assert m.is_diagonal()
        assert [str(v) for v in m.diagonal()] == ["3", "9", "9"]

    def test_triangular_with_predicted_diagonal(self):
        rng = random.Random(31)
        f = rand_unit_series(rng, 2, 3, QQ)
        m = s_transform(f, 3)
        assert m.is_upper_triangular()
        for mono, d in zip(m.basis, m.diagonal()):
            want = QQ(1)
            for w in mono:
                for letter in w:
                    want = want * f.coeff((letter,))
            assert d == want

    def test_unipotent_inputs_give_unipotent_matrices(self):
        rng = random.Random(32)
        from freeconv.randgen import rand_unipotent_series

        f = rand_unipotent_series(rng, 2, 3, QQ)
        assert s_transform(f, 3).is_unipotent()

    @pytest.mark.parametrize("ring", [QQ, mod_ring(101)])
    def test_homomorphism(self, ring):
        rng = random.Random(47)
        for s, n in ((1, 4), (2, 3)):
            f = rand_unit_series(rng, s, n, ring)
            g = rand_unit_series(rng, s, n, ring)
            assert s_transform(box_conv(f, g), n) == s_transform(f, n) @ s_transform(g, n)

    def test_zeta_and_moeb_are_inverse_matrices(self):
        n = 4
        z = s_transform(zeta_series(1, n, QQ), n)
        m = s_transform(moeb_series(1, n, QQ), n)
        assert z @ m == RepMatrix.identity(1, n, QQ)
        assert m @ z == RepMatrix.identity(1, n, QQ)

    def test_faithful(self):
        rng = random.Random(53)
        f = rand_unit_series(rng, 2, 3, QQ)
        basis = rep_basis(2, 3)
        idx = {m: i for i, m in enumerate(basis)}
        m = s_transform(f, 3)
        for w in [(1,), (2, 1), (1, 2, 2), (2, 2, 2)]:
            col = idx[(w,)]
            row = idx[tuple(sorted((x,) for x in w))]
            assert m.entry(row, col) == f.coeff(w)

    def test_distinguishes_distinct_series(self):
        f = TruncSeries(1, 3, QQ, {(1,): QQ(1), (1, 1, 1): QQ(2)})
        g = TruncSeries(1, 3, QQ, {(1,): QQ(1), (1, 1, 1): QQ(3)})
        assert s_transform(f, 3) != s_transform(g, 3)

    def test_restriction_matches_lower_order(self):
        rng = random.Random(59)
        f = rand_unit_series(rng, 2, 4, QQ)
        assert s_transform(f, 4).restrict(2) == s_transform(f, 2)

    def test_default_order_is_series_order(self):
        f = unit_series(1, 3, QQ)
        assert s_transform(f).n == 3

    def test_membership_and_order_errors(self):
        bad = TruncSeries(1, 2, QQ, {(1, 1): QQ(1)})
        with pytest.raises(GroupMembershipError):
            s_transform(bad, 2)
        with pytest.raises(OrderError):
            s_transform(unit_series(1, 2, QQ), 3)

    def test_json_round_trip(self):
        f = TruncSeries(1, 2, QQ, {(1,): QQ(1), (1, 1): QQ(5)})
        m = s_transform(f, 2)
        obj = m.to_obj()
        assert obj["legend"] == ["X(1)", "X(1)^2", "X(1,1)"]
        assert obj["basis"] == [[[1]], [[1], [1]], [[1, 1]]]
        assert obj["rows"][1][2] == "5"
        assert obj["ring"] == "rational"
        assert RepMatrix.loads(m.dumps()) == m


def _free_pair_with_unit_means(rng, a_names, b_names, order, ring):
    da = rand_distribution(rng, a_names, order, ring)
    db = rand_distribution(rng, b_names, order, ring)
    ea = dict(da._table)
    eb = dict(db._table)
    for g in a_names:
        ea[(g,)] = rand_unit(rng, ring)
    for g in b_names:
        eb[(g,)] = rand_unit(rng, ring)
    da = JointDistribution(a_names, order, ring, ea)
    db = JointDistribution(b_names, order, ring, eb)
    return free_product(da, db)


class TestVerifyMultiplicativity:
    def test_dirac_pair(self):
        d = free_product(
            law_dirac(QQ(2), 6, name="a"), law_dirac(QQ(3), 6, name="b")
        )
        report = verify_s_multiplicativity(d, ["a"], ["b"], 3)
        assert report.ok
        assert report.left == report.right
        assert "holds" in str(report)

    def test_random_free_pair_two_letters(self):
        rng = random.Random(71)
        d = _free_pair_with_unit_means(
            rng, ["a1", "a2"], ["b1", "b2"], 6, QQ
        )
        report = verify_s_multiplicativity(d, ["a1", "a2"], ["b1", "b2"], 3)
        assert report.ok

    def test_random_free_pair_mod_p(self):
        rng = random.Random(73)
        d = _free_pair_with_unit_means(rng, ["a"], ["b"], 8, mod_ring(97))
        report = verify_s_multiplicativity(d, ["a"], ["b"], 4)
        assert report.ok

    def test_rejects_non_free_groups(self):
        rng = random.Random(79)
        d = rand_distribution(rng, ["a", "b"], 6, QQ)
        ents = dict(d._table)
        ents[("a",)] = QQ(1)
        ents[("b",)] = QQ(1)
        d = JointDistribution(["a", "b"], 6, QQ, ents)
        with pytest.raises(DomainError):
            verify_s_multiplicativity(d, ["a"], ["b"], 3)

    def test_rejects_insufficient_order(self):
        d = free_product(
            law_dirac(QQ(2), 4, name="a"), law_dirac(QQ(3), 4, name="b")
        )
        with pytest.raises(OrderError):
            verify_s_multiplicativity(d, ["a"], ["b"], 3)
