"""Jacobi polynomials, their point-mass-at-1 relatives, and the operators connecting them.

The classical family P_n^(a,b) is generated by the three-term recurrence with
exact rational coefficients.  Adding a point mass at t = 1 to the weight
produces a second family q_k: for a non-negative integer first parameter it
has the closed construction

    q_k(t) = [a_k - (1+t) d/dt] P_k^(a,b)(t),

and in the special case a = 0 the same family, parameterized by the mass
coupling M, reads

    q_k(t) = [M - (1+t) d/dt + k(k+b+1)] P_k^(0,b)(t),   q_k(1) = M.

Both families are eigen-connected through a pair of second-order operators
whose composition gives each q_k a fourth-order differential equation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial

from .exact_gamma import ExactnessError, rising_factorial
from .polynomials import UniPoly, as_fraction


def _check_jacobi_params(alpha: Fraction, beta: Fraction) -> None:
    if alpha <= -1 or beta <= -1:
        raise ValueError(
            f"Jacobi parameters must exceed -1, got alpha={alpha}, beta={beta}"
        )


@cache
def _jacobi(n: int, alpha: Fraction, beta: Fraction) -> UniPoly:
    if n == 0:
        return UniPoly.constant(1)
    if n == 1:
        return UniPoly([(alpha - beta) / 2, (alpha + beta + 2) / 2])
    a, b = alpha, beta
    s = 2 * n + a + b
    lead = 2 * n * (n + a + b) * (s - 2)
    mid = (s - 1) * (UniPoly([a * a - b * b, s * (s - 2)]) * _jacobi(n - 1, a, b))
    low = 2 * (n + a - 1) * (n + b - 1) * s * _jacobi(n - 2, a, b)
    return (mid - low) * (Fraction(1) / lead)


def jacobi_polynomial(n: int, alpha, beta) -> UniPoly:
    """P_n^(alpha,beta), normalized so the value at t=1 is (alpha+1)_n / n!."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    _check_jacobi_params(alpha, beta)
    return _jacobi(n, alpha, beta)


def jacobi_derivative_residual(n: int, alpha, beta) -> UniPoly:
    """d/dt P_n^(a,b) - ((n+a+b+1)/2) * P_(n-1)^(a+1,b+1); identically zero."""
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    lhs = jacobi_polynomial(n, alpha, beta).derivative()
    rhs = Fraction(n + alpha + beta + 1, 2) * jacobi_polynomial(n - 1, alpha + 1, beta + 1)
    return lhs - rhs


def jacobi_ode_residual(n: int, alpha, beta) -> UniPoly:
    """(1-t^2)y'' + [b-a-(a+b+2)t]y' + n(n+a+b+1)y with y = P_n^(a,b); identically zero."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    y = jacobi_polynomial(n, alpha, beta)
    dy = y.derivative()
    ddy = dy.derivative()
    one_minus_t2 = UniPoly([1, 0, -1])
    first_order = UniPoly([beta - alpha, -(alpha + beta + 2)])
    return one_minus_t2 * ddy + first_order * dy + n * (n + alpha + beta + 1) * y


@cache
def _jacobi_weight_moment(m: int, alpha: Fraction, beta: Fraction) -> Fraction:
    # Normalized moment of t^m against (1-t)^a (1+t)^b on [-1, 1], total mass 1.
    # Expand t^m = sum_i C(m,i) (-1)^i (1-t)^i; each shifted weight integral is
    # a Pochhammer ratio, rational for every rational a, b > -1.
    total = Fraction(0)
    for i in range(m + 1):
        ratio = rising_factorial(alpha + 1, i) / rising_factorial(alpha + beta + 2, i)
        total += comb(m, i) * (-1) ** i * 2 ** i * ratio
    return total


def jacobi_inner(f: UniPoly, g: UniPoly, alpha, beta) -> Fraction:
    """Jacobi-weight inner product of f and g, normalized so (1,1) = 1."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    _check_jacobi_params(alpha, beta)
    total = Fraction(0)
    for i, ci in enumerate(f.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(g.coeffs):
            if cj:
                total += ci * cj * _jacobi_weight_moment(i + j, alpha, beta)
    return total


def _require_integer_alpha(alpha: Fraction) -> int:
    if alpha.denominator != 1 or alpha < 0:
        raise ExactnessError(
            f"the exact point-mass construction needs a non-negative integer "
            f"first Jacobi parameter, got {alpha}"
        )
    return alpha.numerator


@cache
def _mass_weighted_moment(m: int, alpha: Fraction, beta: Fraction, dim: int) -> Fraction:
    # Moment of t^m for the prefactored weight
    #   Gamma(a + d/2 + 1)/(Gamma(d/2) Gamma(a+1)) * 2^-(a+b+1) * (1-t)^a (1+t)^b.
    # Integer a makes every term a Pochhammer ratio times a power of two.
    a = _require_integer_alpha(alpha)
    lead = rising_factorial(Fraction(dim, 2), a + 1) / factorial(a)
    total = Fraction(0)
    for i in range(m + 1):
        piece = (
            2 ** i
            * rising_factorial(alpha + 1, i)
            / rising_factorial(beta + 1, a + i + 1)
        )
        total += comb(m, i) * (-1) ** i * piece
    return lead * total


def inner_jacobi_mass(f: UniPoly, g: UniPoly, alpha, beta, lam, dim: int) -> Fraction:
    """Prefactored Jacobi-weight product plus lam * f(1)g(1).

    This is the radial inner product whose orthogonal polynomials are
    mass_orthogonal_poly; the prefactor ties it to the dim-ball geometry.
    """
    alpha, beta, lam = as_fraction(alpha), as_fraction(beta), as_fraction(lam)
    _check_jacobi_params(alpha, beta)
    if lam <= 0:
        raise ValueError(f"the point-mass coupling must be positive, got {lam}")
    total = Fraction(0)
    for i, ci in enumerate(f.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(g.coeffs):
            if cj:
                total += ci * cj * _mass_weighted_moment(i + j, alpha, beta, dim)
    return total + lam * f.evaluate(1) * g.evaluate(1)


def mass_coefficient(k: int, alpha, beta, lam, dim: int) -> Fraction:
    """The shift a_k in the point-mass construction q_k = [a_k - (1+t) d/dt] P_k."""
    alpha, beta, lam = as_fraction(alpha), as_fraction(beta), as_fraction(lam)
    a = _require_integer_alpha(alpha)
    gamma_part = (
        rising_factorial(Fraction(dim, 2), a + 1)
        * factorial(k)
        / rising_factorial(alpha + 1, k)
        / rising_factorial(beta + k + 1, a)
    )
    return gamma_part / lam + Fraction(k) * (k + alpha + beta + 1) / (alpha + 1)


def mass_orthogonal_poly(k: int, alpha, beta, lam, dim: int) -> UniPoly:
    """k-th orthogonal polynomial for inner_jacobi_mass, of exact degree k.

    Its value at 1 is (1/lam) * Gamma(a+d/2+1)/Gamma(d/2) * Gamma(b+k+1)/Gamma(a+b+k+1).
    """
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    alpha, beta, lam = as_fraction(alpha), as_fraction(beta), as_fraction(lam)
    _check_jacobi_params(alpha, beta)
    if lam <= 0:
        raise ValueError(f"the point-mass coupling must be positive, got {lam}")
    a_k = mass_coefficient(k, alpha, beta, lam, dim)
    p = jacobi_polynomial(k, alpha, beta)
    return a_k * p - UniPoly([1, 1]) * p.derivative()


def jacobi_type_poly(k: int, beta, mass) -> UniPoly:
    """Jacobi-type polynomial [M - (1+t) d/dt + k(k+b+1)] P_k^(0,b); value M at t=1."""
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    beta, mass = as_fraction(beta), as_fraction(mass)
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    p = jacobi_polynomial(k, 0, beta)
    return (mass + Fraction(k) * (k + beta + 1)) * p - UniPoly([1, 1]) * p.derivative()


@cache
def _type_weight_moment(m: int, beta: Fraction) -> Fraction:
    # Moment of t^m against 2^-(b+1) (1+t)^b; the 2^b factors cancel exactly,
    # so this is rational for every rational b > -1.
    total = Fraction(0)
    for j in range(m + 1):
        total += comb(m, j) * (-1) ** (m - j) * Fraction(2 ** j) / (beta + j + 1)
    return total


def inner_jacobi_type(f: UniPoly, g: UniPoly, beta, mass) -> Fraction:
    """2^-(b+1) * integral of f*g*(1+t)^b over [-1,1] plus (1/M) f(1)g(1)."""
    beta, mass = as_fraction(beta), as_fraction(mass)
    if beta <= -1:
        raise ValueError(f"beta must exceed -1, got {beta}")
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    total = Fraction(0)
    for i, ci in enumerate(f.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(g.coeffs):
            if cj:
                total += ci * cj * _type_weight_moment(i + j, beta)
    return total + f.evaluate(1) * g.evaluate(1) / mass


def connection_op(f: UniPoly, beta, mass) -> UniPoly:
    """[M - (1-t^2) d^2/dt^2 - (b+1)(1-t) d/dt] f; sends P_k^(0,b) to the Jacobi-type q_k."""
    beta, mass = as_fraction(beta), as_fraction(mass)
    df = f.derivative()
    return mass * f - UniPoly([1, 0, -1]) * df.derivative() - (beta + 1) * UniPoly([1, -1]) * df


def conjugate_connection_op(f: UniPoly, beta, mass) -> UniPoly:
    """[M + b + 1 - (1-t^2) d^2/dt^2 - (b-1-(b+3)t) d/dt] f.

    Integration by parts against the point-mass measure turns connection_op
    into this operator; it sends q_k back to a scalar multiple of P_k^(0,b).
    """
    beta, mass = as_fraction(beta), as_fraction(mass)
    df = f.derivative()
    return (
        (mass + beta + 1) * f
        - UniPoly([1, 0, -1]) * df.derivative()
        - UniPoly([beta - 1, -(beta + 3)]) * df
    )


def type_eigenvalue(k: int, beta, mass) -> Fraction:
    """(M + k(k+b)) (M + (k+1)(k+b+1)): the fourth-order eigenvalue of q_k."""
    beta, mass = as_fraction(beta), as_fraction(mass)
    return (mass + k * (k + beta)) * (mass + (k + 1) * (k + beta + 1))


def parts_residual(f: UniPoly, g: UniPoly, beta, mass) -> Fraction:
    """Integration-by-parts identity residual; exactly zero for all polynomials f, g.

    Left side: the point-mass-measure integral of g * (connection_op f).
    Right side: the plain weighted integral of f * (conjugate_connection_op g).
    """
    beta, mass = as_fraction(beta), as_fraction(mass)
    lhs = inner_jacobi_type(g, connection_op(f, beta, mass), beta, mass)
    conj = conjugate_connection_op(g, beta, mass)
    rhs = inner_jacobi_type(f, conj, beta, mass) - f.evaluate(1) * conj.evaluate(1) / mass
    return lhs - rhs
