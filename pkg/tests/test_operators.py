import random
from fractions import Fraction as Q

import pytest

from orthoball import (
    MultiPoly,
    UniPoly,
    ball_connection_op,
    ball_conjugate_op,
    beta_shift,
    classical_ball_op,
    classical_basis,
    connection_op,
    connection_residuals,
    conjugate_connection_op,
    euler_op,
    find_element,
    fourth_order_eigenvalue,
    fourth_order_op,
    fourth_order_residual,
    harmonic_basis,
    laplacian,
    mass_basis,
    radial_connection_residuals,
    radius_squared,
    sphere_coupling,
    substitute_radial,
    type_eigenvalue,
)


class TestBasicOperators:
    def test_laplacian_values(self):
        for d in (2, 3, 4):
            assert laplacian(radius_squared(d)) == MultiPoly.constant(d, 2 * d)
        assert laplacian(MultiPoly(2, {(1, 1): 1})).is_zero()
        assert laplacian(MultiPoly(2, {(2, 0): 1, (0, 2): -1})).is_zero()

    def test_euler_grades(self):
        p = MultiPoly(2, {(3, 0): 1})
        assert euler_op(p) == 3 * p
        assert euler_op(MultiPoly.constant(2, 9)).is_zero()
        mixed = MultiPoly(2, {(1, 0): 1, (2, 0): 1})
        assert euler_op(mixed) == MultiPoly(2, {(1, 0): 1, (2, 0): 2})


class TestClassicalSecondOrder:
    def test_coordinate_eigenfunction(self):
        x1 = MultiPoly.variable(2, 0)
        assert classical_ball_op(x1, Q(1, 2)) == -3 * x1

    def test_constant(self):
        # At mu=1/2 the first-order part vanishes on constants.
        assert classical_ball_op(MultiPoly.constant(2, 1), Q(1, 2)).is_zero()
        # General mu: eigenvalue -(0+d)(0+2mu-1) = -d(2mu-1).
        p = MultiPoly.constant(3, 1)
        assert classical_ball_op(p, Q(3, 2)) == -3 * 2 * p

    def test_eigen_identity_on_basis(self):
        for d in (2, 3):
            for mu in (Q(1, 2), Q(1), Q(3, 2)):
                for n in range(5):
                    eig = -(n + d) * (n + 2 * mu - 1)
                    for el in classical_basis(n, d, mu):
                        assert (classical_ball_op(el.poly, mu) - eig * el.poly).is_zero()


class TestBallConnection:
    def test_harmonic_input(self):
        Y = MultiPoly(2, {(1, 1): 1})
        assert ball_connection_op(Y, Q(7, 3)) == Q(7, 3) * Y

    def test_hand_example(self):
        p = MultiPoly(2, {(2, 0): 2, (0, 2): 2, (0, 0): -1})
        assert ball_connection_op(p, 2) == MultiPoly(2, {(2, 0): 6, (0, 2): 6, (0, 0): -4})

    def test_forward_maps_classical_to_mass(self):
        for d, nmax in ((2, 5), (3, 4)):
            for mass in (Q(1), Q(2)):
                lam = sphere_coupling(d, mass)
                for n in range(nmax + 1):
                    P_els = classical_basis(n, d, Q(1, 2))
                    Q_els = mass_basis(n, d, Q(1, 2), lam)
                    for P_el, Q_el in zip(P_els, Q_els):
                        assert ball_connection_op(P_el.poly, mass) == Q_el.poly

    def test_backward_scales_back(self):
        d, mass = 2, Q(7, 3)
        lam = sphere_coupling(d, mass)
        for n in range(5):
            for el in mass_basis(n, d, Q(1, 2), lam):
                k, nu = el.index.k, el.index.nu
                P_el = find_element(classical_basis(n, d, Q(1, 2)), k, nu)
                expect = fourth_order_eigenvalue(n, k, d, mass) * P_el.poly
                assert ball_conjugate_op(el.poly, mass) == expect

    def test_connection_residuals_zero(self):
        for n in range(5):
            for k in range(n // 2 + 1):
                r1, r2 = connection_residuals(n, k, 0, 2, Q(2))
                assert r1.is_zero() and r2.is_zero()

    def test_degree_preserved(self):
        lam = sphere_coupling(3, Q(2))
        for n in range(5):
            for el in mass_basis(n, 3, Q(1, 2), lam):
                assert ball_connection_op(el.poly, Q(2)).total_degree() == n
                assert ball_conjugate_op(el.poly, Q(2)).total_degree() == n


class TestEigenvalues:
    def test_corner_values(self):
        assert fourth_order_eigenvalue(0, 0, 2, Q(3)) == 3 * (3 + 1)
        for d in (2, 3, 4):
            M = Q(5, 2)
            assert fourth_order_eigenvalue(0, 0, d, M) == M * (M + Q(d, 2))
        assert fourth_order_eigenvalue(2, 1, 2, 1) == 10

    def test_two_printed_forms_agree(self):
        for d in (2, 3, 4):
            for M in (Q(1), Q(2), Q(7, 3)):
                for n in range(11):
                    for k in range(n // 2 + 1):
                        assert fourth_order_eigenvalue(n, k, d, M) == type_eigenvalue(
                            k, beta_shift(n, k, d), M
                        )

    def test_index_range(self):
        with pytest.raises(ValueError):
            fourth_order_eigenvalue(2, 2, 2, 1)


class TestFourthOrder:
    def test_constant_case(self):
        d, M = 2, Q(2)
        one = MultiPoly.constant(d, 1)
        assert fourth_order_op(one, M) == M * (M + Q(d, 2)) * one

    def test_residual_zero_small_sweep(self):
        for d, nmax in ((2, 5), (3, 4)):
            for M in (Q(1), Q(7, 3), Q(3, 2)):
                lam = sphere_coupling(d, M)
                for n in range(nmax + 1):
                    for el in mass_basis(n, d, Q(1, 2), lam):
                        res = fourth_order_residual(n, el.index.k, el.index.nu, d, M)
                        assert res.is_zero()

    def test_negative_control(self):
        # 1 + x1 mixes two eigenspaces with different eigenvalues, so the
        # fourth-order residual against either eigenvalue must be nonzero.
        d, M = 2, Q(2)
        control = MultiPoly.constant(d, 1) + MultiPoly.variable(d, 0)
        res = fourth_order_op(control, M) - fourth_order_eigenvalue(1, 0, d, M) * control
        assert not res.is_zero()


class TestRadialForms:
    def test_examples(self):
        for n, k, d, M in [(2, 1, 2, Q(2)), (4, 2, 3, Q(1)), (3, 0, 2, Q(7, 3)), (5, 1, 3, Q(2))]:
            r1, r2 = radial_connection_residuals(n, k, d, M)
            assert r1.is_zero() and r2.is_zero()

    def test_k_zero_reduces_to_constant_radial(self):
        r1, r2 = radial_connection_residuals(4, 0, 3, Q(3, 2))
        assert r1.is_zero() and r2.is_zero()


class TestUnivariateLift:
    def test_connection_lift_matches(self):
        # Applying the ball operators to u(2||x||^2-1) Y equals lifting the
        # univariate images, with the radial parameter set by the harmonic degree.
        rng = random.Random(2)
        for d in (2, 3):
            for m in range(5):
                beta = beta_shift(m, 0, d)
                basis = harmonic_basis(d, m)
                for M in (Q(1), Q(5, 2)):
                    for _ in range(2):
                        u = UniPoly([Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])
                        Y = basis.elements[rng.randrange(len(basis.elements))]
                        f = substitute_radial(u, d) * Y
                        assert ball_connection_op(f, M) == substitute_radial(
                            connection_op(u, beta, M), d
                        ) * Y
                        assert ball_conjugate_op(f, M) == substitute_radial(
                            conjugate_connection_op(u, beta, M), d
                        ) * Y
