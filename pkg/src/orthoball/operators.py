"""Differential operators on the ball and their eigen-identities.

The classical second-order operator has every degree-n orthogonal polynomial
for the ball weight as an eigenfunction with eigenvalue -(n+d)(n+2mu-1).  At
mu = 1/2 a pair of second-order operators connects the classical basis to the
mass-modified one:

    [M - (1/4)(1-||x||^2) Delta]                          P -> Q
    [M + d/2 - (1/4)(1-||x||^2) Delta + <x, grad>]        Q -> Lambda * P

and their composition (first the second operator, then the first) gives each
Q a fourth-order partial differential equation with eigenvalue

    Lambda(n, k) = (M + k(n-k+(d-2)/2)) (M + (k+1)(n-k+d/2)).

Operators are applied as direct symbolic pipelines on exact polynomials, so
every eigen-identity here can be checked down to the literal zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .bases import (
    beta_shift,
    classical_basis,
    find_element,
    mass_basis,
    sphere_coupling,
)
from .jacobi import jacobi_polynomial, jacobi_type_poly
from .polynomials import (
    MultiPoly,
    UniPoly,
    as_fraction,
    euler_op,
    laplacian,
    radius_squared,
)

__all__ = [
    "laplacian",
    "euler_op",
    "classical_ball_op",
    "ball_connection_op",
    "ball_conjugate_op",
    "fourth_order_op",
    "fourth_order_eigenvalue",
    "fourth_order_residual",
    "radial_connection_residuals",
]


def classical_ball_op(p: MultiPoly, mu) -> MultiPoly:
    """Delta - sum_j d/dx_j [ x_j (2mu - 1 + sum_i x_i d/dx_i) ], applied term by term.

    Degree-n orthogonal polynomials for the ball weight are eigenfunctions
    with eigenvalue -(n+d)(n+2mu-1).
    """
    mu = as_fraction(mu)
    inner = (2 * mu - 1) * p + euler_op(p)
    total = laplacian(p)
    for axis in range(p.dim):
        total = total - (MultiPoly.variable(p.dim, axis) * inner).partial(axis)
    return total


def _damped_laplacian(p: MultiPoly) -> MultiPoly:
    return Fraction(1, 4) * ((1 - radius_squared(p.dim)) * laplacian(p))


def ball_connection_op(p: MultiPoly, mass) -> MultiPoly:
    """[M - (1/4)(1-||x||^2) Delta] p; maps each classical element to its mass-modified partner."""
    mass = as_fraction(mass)
    return mass * p - _damped_laplacian(p)


def ball_conjugate_op(p: MultiPoly, mass) -> MultiPoly:
    """[M + d/2 - (1/4)(1-||x||^2) Delta + <x, grad>] p; maps Q back to Lambda times P."""
    mass = as_fraction(mass)
    return (mass + Fraction(p.dim, 2)) * p - _damped_laplacian(p) + euler_op(p)


def fourth_order_op(p: MultiPoly, mass) -> MultiPoly:
    """The composed fourth-order operator, conjugate factor applied first."""
    return ball_connection_op(ball_conjugate_op(p, mass), mass)


def fourth_order_eigenvalue(n: int, k: int, dim: int, mass) -> Fraction:
    """Lambda(n, k) = (M + k(n-k+(d-2)/2)) (M + (k+1)(n-k+d/2))."""
    if not 0 <= 2 * k <= n:
        raise ValueError(f"radial index k={k} out of range for degree n={n}")
    mass = as_fraction(mass)
    first = mass + k * (n - k + Fraction(dim - 2, 2))
    second = mass + (k + 1) * (n - k + Fraction(dim, 2))
    return first * second


def fourth_order_residual(n: int, k: int, nu: int, dim: int, mass) -> MultiPoly:
    """Fourth-order eigen-equation residual on the (n, k, nu) mass-modified element.

    Exactly the zero polynomial.  This lives at mu = 1/2 (Lebesgue measure on
    the ball), the case where the radial factors are the Jacobi-type family.
    """
    mass = as_fraction(mass)
    lam = sphere_coupling(dim, mass)
    q = find_element(mass_basis(n, dim, Fraction(1, 2), lam), k, nu)
    eig = fourth_order_eigenvalue(n, k, dim, mass)
    return fourth_order_op(q.poly, mass) - eig * q.poly


def connection_residuals(n: int, k: int, nu: int, dim: int, mass) -> tuple[MultiPoly, MultiPoly]:
    """Residuals of the two second-order connection identities on matching elements.

    Returns (connection residual, conjugate residual); both exactly zero.
    """
    mass = as_fraction(mass)
    lam = sphere_coupling(dim, mass)
    p = find_element(classical_basis(n, dim, Fraction(1, 2)), k, nu)
    q = find_element(mass_basis(n, dim, Fraction(1, 2), lam), k, nu)
    eig = fourth_order_eigenvalue(n, k, dim, mass)
    first = ball_connection_op(p.poly, mass) - q.poly
    second = ball_conjugate_op(q.poly, mass) - eig * p.poly
    return first, second


def _radial_profile(u: UniPoly, shift: int) -> UniPoly:
    """r^shift * u(2r^2 - 1) as a polynomial in r."""
    return u.compose(UniPoly([-1, 0, 2])).times_tpow(shift)


def _angular_bracket(f: UniPoly, dim: int, harmonic_degree: int) -> UniPoly:
    # f'' + (d-1) f'/r - s(s+d-2) f/r^2, assembled as an exact division by r^2;
    # the low-order coefficients cancel whenever f = r^s * u(2r^2-1).
    s = harmonic_degree
    df = f.derivative()
    combined = (
        UniPoly([0, 0, 1]) * df.derivative()
        + (dim - 1) * UniPoly([0, 1]) * df
        - s * (s + dim - 2) * f
    )
    return combined.exact_div_tpow(2)


def radial_connection_residuals(n: int, k: int, dim: int, mass) -> tuple[UniPoly, UniPoly]:
    """Residuals of the radial (one-variable) forms of the connection identities.

    The operators act on r^(n-2k) * u(2r^2-1) with the angular eigenvalue
    folded in; both returned polynomials in r are exactly zero.
    """
    mass = as_fraction(mass)
    s = n - 2 * k
    beta = beta_shift(n, k, dim)
    f_classical = _radial_profile(jacobi_polynomial(k, 0, beta), s)
    f_mass = _radial_profile(jacobi_type_poly(k, beta, mass), s)
    one_minus_r2 = UniPoly([1, 0, -1])

    def m1(f: UniPoly) -> UniPoly:
        return mass * f - Fraction(1, 4) * one_minus_r2 * _angular_bracket(f, dim, s)

    def m2(f: UniPoly) -> UniPoly:
        return m1(f) + Fraction(dim, 2) * f + UniPoly([0, 1]) * f.derivative()

    eig = fourth_order_eigenvalue(n, k, dim, mass)
    return m1(f_classical) - f_mass, m2(f_mass) - eig * f_classical
