"""Orthogonal polynomial bases on the unit ball, classical and mass-modified.

A degree-n basis element is a product of a radial polynomial in 2*||x||^2 - 1
and a harmonic factor of degree n - 2k, indexed by (n, k, nu) with
0 <= k <= n/2 and the shifted radial parameter beta_k = n - 2k + (d-2)/2.

* classical_basis: radial factor P_k^(mu-1/2, beta_k); mutually orthogonal for
  the weighted ball product.
* mass_basis: radial factor is the point-mass family for coupling lam; mutually
  orthogonal for the ball product plus lam times the sphere product.

Harmonic factors come from harmonic_basis in its deterministic order, so nu is
a stable positional index (0-based).  Elements are kept orthogonal rather than
orthonormal; squared norms are recorded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .exact_gamma import ExactnessError
from .harmonics import harmonic_basis
from .jacobi import jacobi_polynomial, mass_orthogonal_poly
from .measures import inner_ball, inner_mass
from .polynomials import MultiPoly, as_fraction, substitute_radial


def beta_shift(n: int, k: int, dim: int) -> Fraction:
    """The radial Jacobi parameter beta_k = n - 2k + (d-2)/2."""
    return Fraction(2 * (n - 2 * k) + dim - 2, 2)


def mass_parameter(dim: int, lam) -> Fraction:
    """The point-mass coupling M = d / (2 lam) paired with the sphere coupling lam."""
    lam = as_fraction(lam)
    if lam <= 0:
        raise ValueError(f"the sphere coupling must be positive, got {lam}")
    return Fraction(dim) / (2 * lam)


def sphere_coupling(dim: int, mass) -> Fraction:
    """Inverse of mass_parameter: lam = d / (2 M)."""
    mass = as_fraction(mass)
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    return Fraction(dim) / (2 * mass)


@dataclass(frozen=True)
class BasisIndex:
    n: int
    k: int
    nu: int  # 0-based position in the harmonic basis of degree n - 2k
    beta_k: Fraction


@dataclass(frozen=True)
class BallBasisElement:
    index: BasisIndex
    poly: MultiPoly
    kind: str  # "classical" or "lambda"
    sq_norm: Fraction
    harmonic_sq_norm: Fraction


def _assemble(n, dim, radial_for_k, kind, norm_of) -> tuple[BallBasisElement, ...]:
    out = []
    for k in range(n // 2 + 1):
        harmonic_degree = n - 2 * k
        radial = substitute_radial(radial_for_k(k), dim)
        hb = harmonic_basis(dim, harmonic_degree)
        for nu, (Y, y_norm) in enumerate(zip(hb.elements, hb.sphere_norms)):
            poly = radial * Y
            index = BasisIndex(n, k, nu, beta_shift(n, k, dim))
            out.append(
                BallBasisElement(index, poly, kind, norm_of(poly), y_norm)
            )
    return tuple(out)


@cache
def _classical_basis(n: int, dim: int, mu: Fraction) -> tuple[BallBasisElement, ...]:
    alpha = mu - Fraction(1, 2)
    return _assemble(
        n,
        dim,
        lambda k: jacobi_polynomial(k, alpha, beta_shift(n, k, dim)),
        "classical",
        lambda poly: inner_ball(poly, poly, mu),
    )


def classical_basis(n: int, dim: int, mu) -> tuple[BallBasisElement, ...]:
    """Mutually orthogonal basis of degree-n orthogonal polynomials for the ball weight."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    mu = as_fraction(mu)
    if mu <= Fraction(-1, 2):
        raise ValueError(f"mu must exceed -1/2, got {mu}")
    return _classical_basis(n, dim, mu)


@cache
def _mass_basis(n: int, dim: int, mu: Fraction, lam: Fraction) -> tuple[BallBasisElement, ...]:
    alpha = mu - Fraction(1, 2)
    return _assemble(
        n,
        dim,
        lambda k: mass_orthogonal_poly(k, alpha, beta_shift(n, k, dim), lam, dim),
        "lambda",
        lambda poly: inner_mass(poly, poly, mu, lam),
    )


def mass_basis(n: int, dim: int, mu, lam) -> tuple[BallBasisElement, ...]:
    """Mutually orthogonal basis of degree n for the ball product plus lam * sphere product.

    The exact construction requires mu - 1/2 to be a non-negative integer
    (ExactnessError otherwise); mu = 1/2 is the case with the fourth-order theory.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if dim < 2:
        raise ValueError(f"dimension must be at least 2, got {dim}")
    mu, lam = as_fraction(mu), as_fraction(lam)
    alpha = mu - Fraction(1, 2)
    if alpha.denominator != 1 or alpha < 0:
        raise ExactnessError(
            f"the exact mass-modified basis needs mu - 1/2 to be a non-negative "
            f"integer, got mu={mu}"
        )
    if lam <= 0:
        raise ValueError(f"the sphere coupling must be positive, got {lam}")
    return _mass_basis(n, dim, mu, lam)


def find_element(elements, k: int, nu: int) -> BallBasisElement:
    """Pick the (k, nu) element out of a single-degree basis."""
    for el in elements:
        if el.index.k == k and el.index.nu == nu:
            return el
    raise KeyError(f"no element with k={k}, nu={nu}")


def gram_matrix(elements, inner) -> list[list[Fraction]]:
    """Exact Gram matrix of ``elements`` under the bilinear form ``inner``."""
    n = len(elements)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = inner(elements[i].poly, elements[j].poly)
            gram[i][j] = value
            gram[j][i] = value
    return gram


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def basis_export(n: int, dim: int, mu, lam, kind: str, eigenvalue=None) -> dict:
    """JSON-ready dump of a basis: indices, radial parameters, norms, polynomials.

    ``eigenvalue`` may be a callable (n, k) -> Fraction recorded per element
    (used for the fourth-order eigenvalues of the mass-modified basis).
    """
    mu, lam = as_fraction(mu), as_fraction(lam)
    if kind == "classical":
        elements = classical_basis(n, dim, mu)
    elif kind == "lambda":
        elements = mass_basis(n, dim, mu, lam)
    else:
        raise ValueError(f"kind must be 'classical' or 'lambda', got {kind!r}")
    records = []
    for el in elements:
        record = {
            "n": el.index.n,
            "k": el.index.k,
            "nu": el.index.nu,
            "beta_k": _fmt(el.index.beta_k),
            "sq_norm": _fmt(el.sq_norm),
            "harmonic_sq_norm": _fmt(el.harmonic_sq_norm),
            "poly": el.poly.canonical(),
        }
        if eigenvalue is not None:
            record["eigenvalue"] = _fmt(eigenvalue(el.index.n, el.index.k))
        records.append(record)
    return {
        "dim": dim,
        "mu": _fmt(mu),
        "lambda": _fmt(lam),
        "degree": n,
        "kind": kind,
        "count": len(records),
        "elements": records,
    }


def basis_export_text(n: int, dim: int, mu, lam, kind: str, eigenvalue=None) -> str:
    """Deterministic serialized form of basis_export (sorted keys, two-space indent)."""
    return json.dumps(
        basis_export(n, dim, mu, lam, kind, eigenvalue=eigenvalue),
        indent=2,
        sort_keys=True,
    ) + "\n"
