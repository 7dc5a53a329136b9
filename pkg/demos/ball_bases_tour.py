"""The two orthogonal bases on the ball and the inner products that tell them apart.

Run with:  python demos/ball_bases_tour.py
"""

from fractions import Fraction as Q

from orthoball import (
    classical_basis,
    find_element,
    inner_ball,
    inner_mass,
    mass_basis,
    mass_parameter,
)

dim, mu, lam = 2, Q(1, 2), Q(1, 2)
print(f"dim={dim}, mu={mu} (Lebesgue measure), sphere coupling lam={lam}, "
      f"mass M={mass_parameter(dim, lam)}\n")

# ---------------------------------------------------------------------------
# The classical basis: radial Jacobi factors times harmonics.  Elements are
# labeled (n, k, nu) with harmonic degree n - 2k.
# ---------------------------------------------------------------------------
print("Classical basis through degree 3:")
classical = [el for n in range(4) for el in classical_basis(n, dim, mu)]
for el in classical:
    i = el.index
    print(f"  (n={i.n}, k={i.k}, nu={i.nu}, beta_k={i.beta_k}):  {el.poly}")

# ---------------------------------------------------------------------------
# Adding lam times the sphere product changes the orthogonal family: the
# radial factors pick up the point mass.  Same harmonic factors, new radial parts.
# ---------------------------------------------------------------------------
print("\nMass-modified basis through degree 3:")
modified = [el for n in range(4) for el in mass_basis(n, dim, mu, lam)]
for el in modified:
    i = el.index
    print(f"  (n={i.n}, k={i.k}, nu={i.nu}):  {el.poly}")

# ---------------------------------------------------------------------------
# Each family is diagonal under its own product.  Under the *wrong* product
# the mass family loses orthogonality: the sphere term genuinely matters.
# ---------------------------------------------------------------------------
def offdiag_zero(elements, inner):
    return all(
        inner(elements[i].poly, elements[j].poly) == 0
        for i in range(len(elements))
        for j in range(i + 1, len(elements))
    )

print("\nclassical family under the ball product:      diagonal =",
      offdiag_zero(classical, lambda f, g: inner_ball(f, g, mu)))
print("mass family under the ball + sphere product:  diagonal =",
      offdiag_zero(modified, lambda f, g: inner_mass(f, g, mu, lam)))
print("mass family under the plain ball product:     diagonal =",
      offdiag_zero(modified, lambda f, g: inner_ball(f, g, mu)))

q20 = find_element(mass_basis(2, dim, mu, lam), 1, 0)  # the purely radial degree-2 element
one = modified[0]
print(f"\nwitness: <Q(2,1), Q(0,0)> without the sphere term = "
      f"{inner_ball(q20.poly, one.poly, mu)}, with it = "
      f"{inner_mass(q20.poly, one.poly, mu, lam)}")
