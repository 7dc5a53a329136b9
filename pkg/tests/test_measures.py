import random
from fractions import Fraction as Q

import pytest
from oracles import iterated_disk_moment, wallis_circle_moment

from orthoball import (
    ExactnessError,
    MultiPoly,
    ball_moment,
    inner_ball,
    inner_mass,
    inner_sphere,
    sphere_ball_ratio,
    sphere_moment,
)
from orthoball.harmonics import _monomials


def exps_upto(dim, total):
    for deg in range(total + 1):
        yield from _monomials(dim, deg)


class TestSphereMoment:
    def test_normalization(self):
        assert sphere_moment((0, 0)) == 1
        assert sphere_moment((0, 0, 0, 0)) == 1

    def test_odd_exponent_vanishes(self):
        assert sphere_moment((1, 2)) == 0
        assert sphere_moment((2, 3, 0)) == 0

    def test_symmetry_value_d3(self):
        assert sphere_moment((2, 0, 0)) == Q(1, 3)

    def test_circle_values_against_wallis(self):
        for a in range(0, 9):
            for b in range(0, 9 - a):
                assert sphere_moment((a, b)) == wallis_circle_moment(a, b)

    def test_consistency_sum_rule(self):
        # sum_i m(nu + 2 e_i) = m(nu) because the coordinates square-sum to 1.
        for d in (2, 3, 4):
            for e in exps_upto(d, 6):
                total = sum(
                    sphere_moment(e[:i] + (e[i] + 2,) + e[i + 1 :]) for i in range(d)
                )
                assert total == sphere_moment(e)


class TestBallMoment:
    def test_normalization(self):
        assert ball_moment((0, 0), Q(1, 2)) == 1
        assert ball_moment((0, 0, 0), Q(3, 2)) == 1

    def test_odd_vanishes(self):
        assert ball_moment((3, 2), Q(1, 2)) == 0

    def test_lebesgue_disk_value(self):
        assert ball_moment((2, 0), Q(1, 2)) == Q(1, 4)

    def test_against_iterated_integral_oracle(self):
        for mu in (Q(1, 2), Q(1), Q(3, 2), Q(5, 2)):
            for a in range(0, 9):
                for b in range(0, 9 - a):
                    assert ball_moment((a, b), mu) == iterated_disk_moment(a, b, mu)

    def test_mu_range(self):
        with pytest.raises(ValueError):
            ball_moment((2, 0), Q(-1, 2))


class TestSphereBallRatio:
    def test_lebesgue_case_is_dimension(self):
        for d in range(2, 7):
            assert sphere_ball_ratio(d, Q(1, 2)) == d

    def test_half_integer_mu(self):
        assert sphere_ball_ratio(2, Q(3, 2)) == 4
        assert sphere_ball_ratio(3, Q(1, 2)) == 3

    def test_general_rational_mu_even_dim(self):
        # 2 * (mu + 1/2) / 0! for d = 2.
        assert sphere_ball_ratio(2, Q(1, 3)) == 2 * (Q(1, 3) + Q(1, 2))

    def test_irrational_case_raises(self):
        with pytest.raises(ExactnessError):
            sphere_ball_ratio(3, Q(1, 3))


class TestInnerProducts:
    def test_unit_masses(self):
        one = MultiPoly.constant(2, 1)
        assert inner_ball(one, one, Q(1, 2)) == 1
        assert inner_sphere(one, one) == 1
        assert inner_mass(one, one, Q(1, 2), Q(1, 4)) == Q(5, 4)

    def test_odd_orthogonality(self):
        x1 = MultiPoly.variable(2, 0)
        x2 = MultiPoly.variable(2, 1)
        assert inner_ball(x1, x2, Q(3, 2)) == 0
        assert inner_sphere(x1, x2) == 0

    def test_sphere_value(self):
        sq = MultiPoly(3, {(2, 0, 0): 1})
        assert inner_sphere(sq, MultiPoly.constant(3, 1)) == Q(1, 3)

    def test_lambda_zero_degrades(self):
        rng = random.Random(3)
        for _ in range(5):
            f = MultiPoly(2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3)})
            g = MultiPoly(2, {(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3)})
            assert inner_mass(f, g, Q(1), 0) == inner_ball(f, g, Q(1))

    def test_symmetry_and_bilinearity(self):
        rng = random.Random(11)

        def rand_poly():
            return MultiPoly(
                3,
                {
                    tuple(rng.randint(0, 2) for _ in range(3)): Q(
                        rng.randint(-4, 4), rng.randint(1, 3)
                    )
                    for _ in range(4)
                },
            )

        for _ in range(10):
            f, g, h = rand_poly(), rand_poly(), rand_poly()
            c = Q(rng.randint(-3, 3), rng.randint(1, 2))
            for inner in (
                lambda u, v: inner_ball(u, v, Q(3, 2)),
                inner_sphere,
                lambda u, v: inner_mass(u, v, Q(1, 2), Q(1, 4)),
            ):
                assert inner(f, g) == inner(g, f)
                assert inner(f + g, h) == inner(f, h) + inner(g, h)
                assert inner(c * f, h) == c * inner(f, h)

    def test_positivity_on_monomials(self):
        for e in exps_upto(2, 4):
            mono = MultiPoly(2, {e: 1})
            assert inner_mass(mono, mono, Q(1, 2), Q(1, 4)) > 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            inner_sphere(MultiPoly.constant(2, 1), MultiPoly.constant(3, 1))

    def test_polar_factorization_shape(self):
        # The ball moment factors through the sphere moment; cross-check the
        # d=2 factorization against the purely iterated oracle on products.
        f = MultiPoly(2, {(2, 0): 1, (0, 0): -1})
        g = MultiPoly(2, {(0, 2): 3, (1, 1): 2})
        mu = Q(3, 2)
        expect = sum(
            cf * cg * iterated_disk_moment(ef[0] + eg[0], ef[1] + eg[1], mu)
            for ef, cf in f.terms.items()
            for eg, cg in g.terms.items()
        )
        assert inner_ball(f, g, mu) == expect
