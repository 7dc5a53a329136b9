import random
from fractions import Fraction as Q
from math import factorial

import pytest
from oracles import gram_schmidt, jacobi_explicit_sum

from orthoball import (
    ExactnessError,
    UniPoly,
    connection_op,
    conjugate_connection_op,
    inner_jacobi_mass,
    inner_jacobi_type,
    jacobi_derivative_residual,
    jacobi_inner,
    jacobi_ode_residual,
    jacobi_polynomial,
    jacobi_type_poly,
    mass_coefficient,
    mass_orthogonal_poly,
    parts_residual,
    type_eigenvalue,
)
from orthoball.exact_gamma import rising_factorial

PARAM_GRID = [Q(0), Q(1, 2), Q(1), Q(3, 2), Q(2)]


class TestClassicalJacobi:
    def test_degree_zero_is_one(self):
        assert jacobi_polynomial(0, Q(5, 2), Q(1, 3)) == UniPoly.constant(1)

    def test_degree_one(self):
        assert jacobi_polynomial(1, 0, 0) == UniPoly.t()

    def test_value_at_one(self):
        assert jacobi_polynomial(2, 1, 0).evaluate(1) == 3  # C(3, 2)
        for a in PARAM_GRID:
            for b in PARAM_GRID:
                for n in range(11):
                    got = jacobi_polynomial(n, a, b).evaluate(1)
                    assert got == rising_factorial(a + 1, n) / factorial(n)

    def test_matches_explicit_sum(self):
        for a in PARAM_GRID:
            for b in PARAM_GRID:
                for n in range(8):
                    assert jacobi_polynomial(n, a, b) == jacobi_explicit_sum(n, a, b)

    def test_parameter_range(self):
        with pytest.raises(ValueError):
            jacobi_polynomial(2, -1, 0)
        with pytest.raises(ValueError):
            jacobi_polynomial(2, 0, Q(-3, 2))

    def test_derivative_identity(self):
        # d/dt P_2^(0,0) = 3t = (3/2) P_1^(1,1)
        assert jacobi_polynomial(2, 0, 0).derivative() == UniPoly([0, 3])
        assert Q(3, 2) * jacobi_polynomial(1, 1, 1) == UniPoly([0, 3])
        assert jacobi_derivative_residual(1, Q(1, 3), Q(7, 2)).is_zero()
        assert jacobi_derivative_residual(5, Q(1, 2), Q(3, 2)).is_zero()
        for a in PARAM_GRID:
            for b in PARAM_GRID:
                for n in range(1, 11):
                    assert jacobi_derivative_residual(n, a, b).is_zero()

    def test_ode(self):
        assert jacobi_ode_residual(0, Q(2, 3), Q(1, 5)).is_zero()
        assert jacobi_ode_residual(3, 0, 2).is_zero()
        assert jacobi_ode_residual(6, 2, 0).is_zero()
        for a in PARAM_GRID:
            for b in PARAM_GRID:
                for n in range(11):
                    assert jacobi_ode_residual(n, a, b).is_zero()

    def test_orthogonality(self):
        for a in PARAM_GRID:
            for b in PARAM_GRID:
                polys = [jacobi_polynomial(n, a, b) for n in range(7)]
                for j in range(7):
                    for k in range(j + 1, 7):
                        assert jacobi_inner(polys[j], polys[k], a, b) == 0
                    assert jacobi_inner(polys[j], polys[j], a, b) > 0

    def test_inner_normalized(self):
        one = UniPoly.constant(1)
        assert jacobi_inner(one, one, Q(1, 2), Q(5, 2)) == 1


class TestMassOrthogonalFamily:
    def test_shift_coefficient_example(self):
        # alpha=0, beta=1, d=2, lam=1/2: first term 2, second term k(k+a+b+1)/(a+1) = 3.
        assert mass_coefficient(1, 0, 1, Q(1, 2), 2) == 5

    def test_degree_zero_is_constant_shift(self):
        lam = Q(1, 3)
        q0 = mass_orthogonal_poly(0, 1, Q(1, 2), lam, 3)
        assert q0.degree == 0
        assert q0.evaluate(0) == mass_coefficient(0, 1, Q(1, 2), lam, 3)

    def test_value_at_one(self):
        for d in (2, 3):
            for lam in (Q(1, 4), Q(1, 2), Q(1)):
                for alpha in (0, 1, 2):
                    for beta in (Q(0), Q(1), Q(3, 2)):
                        for k in range(5):
                            q = mass_orthogonal_poly(k, alpha, beta, lam, d)
                            expect = (
                                rising_factorial(Q(d, 2), alpha + 1)
                                / rising_factorial(beta + k + 1, alpha)
                                / lam
                            )
                            assert q.evaluate(1) == expect

    def test_value_at_one_alpha_zero_is_mass(self):
        # At alpha=0 the value collapses to (1/lam)(d/2) = M.
        for d in (2, 3):
            q = mass_orthogonal_poly(3, 0, Q(1, 2), Q(1, 2), d)
            assert q.evaluate(1) == Q(d, 2) * 2

    def test_orthogonality(self):
        for d in (2, 3):
            for lam in (Q(1, 4), Q(1, 2), Q(1)):
                for beta in (Q(0), Q(1), Q(1, 2), Q(3, 2), Q(2)):
                    qs = [mass_orthogonal_poly(k, 0, beta, lam, d) for k in range(7)]
                    for j in range(7):
                        for k in range(j + 1, 7):
                            assert inner_jacobi_mass(qs[j], qs[k], 0, beta, lam, d) == 0

    def test_exact_degree(self):
        for k in range(7):
            assert mass_orthogonal_poly(k, 0, Q(3, 2), Q(1, 2), 3).degree == k

    def test_gram_schmidt_oracle(self):
        # Orthogonalizing the monomials must reproduce q_k up to a scalar.
        for d, lam, beta in [(2, Q(1, 2), Q(0)), (3, Q(1, 4), Q(3, 2)), (2, Q(1), Q(2))]:
            inner = lambda f, g: inner_jacobi_mass(f, g, 0, beta, lam, d)
            monomials = [UniPoly([0] * k + [1]) for k in range(6)]
            gs = gram_schmidt(monomials, inner)
            for k in range(6):
                q = mass_orthogonal_poly(k, 0, beta, lam, d)
                assert gs[k] * q.leading_coeff() == q * gs[k].leading_coeff()

    def test_fractional_alpha_rejected(self):
        with pytest.raises(ExactnessError):
            mass_orthogonal_poly(2, Q(1, 2), 0, Q(1, 2), 2)
        with pytest.raises(ExactnessError):
            inner_jacobi_mass(UniPoly.t(), UniPoly.t(), Q(1, 4), 0, Q(1, 2), 2)

    def test_mass_inner_example(self):
        one = UniPoly.constant(1)
        assert inner_jacobi_mass(one, one, 0, 0, 1, 2) == 2

    def test_mass_inner_orthogonality_to_one(self):
        q1 = mass_orthogonal_poly(1, 0, 2, Q(1, 2), 3)
        assert inner_jacobi_mass(q1, UniPoly.constant(1), 0, 2, Q(1, 2), 3) == 0


class TestJacobiTypeFamily:
    def test_value_at_one_is_mass(self):
        for k in range(9):
            for beta in (Q(0), Q(1), Q(5, 2)):
                for mass in (Q(1), Q(2), Q(7, 3)):
                    assert jacobi_type_poly(k, beta, mass).evaluate(1) == mass

    def test_degree_zero(self):
        assert jacobi_type_poly(0, Q(5, 2), Q(7, 3)) == UniPoly.constant(Q(7, 3))

    def test_hand_expansion(self):
        assert jacobi_type_poly(1, 0, 2) == UniPoly([-1, 3])

    def test_agrees_with_mass_family_at_alpha_zero(self):
        for d in (2, 3):
            for lam in (Q(1, 4), Q(1, 2)):
                mass = Q(d) / (2 * lam)
                for beta in (Q(0), Q(1, 2), Q(2)):
                    for k in range(6):
                        assert jacobi_type_poly(k, beta, mass) == mass_orthogonal_poly(
                            k, 0, beta, lam, d
                        )

    def test_inner_product_example(self):
        one = UniPoly.constant(1)
        assert inner_jacobi_type(one, one, 0, 2) == Q(3, 2)

    def test_inner_product_two_paths(self):
        # (q_0, t-1) for beta=0: the weighted part is M * (mean of t - 1) = -M,
        # and the point mass contributes nothing since (t-1) vanishes at 1.
        q0 = jacobi_type_poly(0, 0, 2)
        assert inner_jacobi_type(q0, UniPoly([-1, 1]), 0, 2) == -2

    def test_orthogonality(self):
        for beta in (Q(0), Q(1), Q(5, 2)):
            for mass in (Q(1), Q(2), Q(7, 3)):
                qs = [jacobi_type_poly(k, beta, mass) for k in range(7)]
                for j in range(7):
                    for k in range(j + 1, 7):
                        assert inner_jacobi_type(qs[j], qs[k], beta, mass) == 0


class TestConnectionOperators:
    def test_forward_on_constants(self):
        assert connection_op(UniPoly.constant(1), Q(3), Q(2)) == UniPoly.constant(2)

    def test_forward_hand_expansion(self):
        assert connection_op(UniPoly.t(), 0, 1) == UniPoly([-1, 2])

    def test_forward_maps_jacobi_to_type(self):
        for beta in (Q(0), Q(1), Q(2), Q(5, 2)):
            for mass in (Q(1), Q(2), Q(7, 3)):
                for k in range(9):
                    p = jacobi_polynomial(k, 0, beta)
                    assert connection_op(p, beta, mass) == jacobi_type_poly(k, beta, mass)

    def test_backward_on_constants(self):
        assert conjugate_connection_op(UniPoly.constant(1), Q(3), Q(2)) == UniPoly.constant(6)

    def test_backward_maps_type_to_jacobi(self):
        for beta in (Q(0), Q(1), Q(2), Q(5, 2)):
            for mass in (Q(1), Q(2), Q(7, 3)):
                for k in range(9):
                    q = jacobi_type_poly(k, beta, mass)
                    expect = type_eigenvalue(k, beta, mass) * jacobi_polynomial(k, 0, beta)
                    assert conjugate_connection_op(q, beta, mass) == expect

    def test_fourth_order_ode(self):
        for beta in (Q(0), Q(1), Q(2), Q(5, 2)):
            for mass in (Q(1), Q(2), Q(7, 3)):
                for k in range(9):
                    q = jacobi_type_poly(k, beta, mass)
                    composed = connection_op(
                        conjugate_connection_op(q, beta, mass), beta, mass
                    )
                    assert composed == type_eigenvalue(k, beta, mass) * q

    def test_eigenvalue_equals_leading_coefficient_ratio(self):
        for k in range(1, 7):
            beta, mass = Q(1), Q(7, 3)
            q = jacobi_type_poly(k, beta, mass)
            composed = connection_op(conjugate_connection_op(q, beta, mass), beta, mass)
            assert composed.leading_coeff() / q.leading_coeff() == type_eigenvalue(
                k, beta, mass
            )


class TestPartsIdentity:
    def test_constants(self):
        assert parts_residual(UniPoly.constant(1), UniPoly.constant(1), 0, 2) == 0

    def test_hand_case(self):
        assert parts_residual(UniPoly([0, 0, 1]), UniPoly([0, 0, 0, 1]), 1, 3) == 0

    def test_random_sweep(self):
        rng = random.Random(7)
        for beta in (0, 1, 2):
            for _ in range(8):
                f = UniPoly([Q(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)])
                g = UniPoly([Q(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)])
                assert parts_residual(f, g, beta, Q(7, 3)) == 0

    def test_half_integer_weight(self):
        # The normalized moments stay rational even for non-integer weight powers.
        assert parts_residual(UniPoly([1, 2]), UniPoly([0, 1, 1]), Q(5, 2), 2) == 0
