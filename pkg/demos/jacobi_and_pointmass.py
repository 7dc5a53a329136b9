"""Tour of the univariate layer: Jacobi polynomials, the point-mass family,
and the pair of second-order operators connecting them.

Run with:  python demos/jacobi_and_pointmass.py
"""

from fractions import Fraction as Q

from orthoball import (
    UniPoly,
    connection_op,
    conjugate_connection_op,
    inner_jacobi_type,
    jacobi_polynomial,
    jacobi_type_poly,
    type_eigenvalue,
)

# ---------------------------------------------------------------------------
# Classical Jacobi polynomials, exactly.
# ---------------------------------------------------------------------------
print("Jacobi polynomials P_n^(0,1):")
for n in range(5):
    print(f"  n={n}:  {jacobi_polynomial(n, 0, 1)}")

# ---------------------------------------------------------------------------
# Add a point mass at t = 1 to the weight (1+t)^beta / 2^(beta+1); the
# orthogonal family changes, but it is still a differential image of the
# classical one.  M is the coupling of the mass.
# ---------------------------------------------------------------------------
beta, M = Q(1), Q(2)
print(f"\nPoint-mass family for beta={beta}, M={M}:")
qs = [jacobi_type_poly(k, beta, M) for k in range(5)]
for k, q in enumerate(qs):
    print(f"  k={k}:  {q}    q({1}) = {q.evaluate(1)}")

print("\nPairwise products under the mass-modified weight (all zero off the diagonal):")
for j in range(4):
    row = [inner_jacobi_type(qs[j], qs[k], beta, M) for k in range(4)]
    print("  " + "  ".join(f"{v!s:>8}" for v in row))

# ---------------------------------------------------------------------------
# The connection operators.  The forward operator maps P_k to q_k; its
# integration-by-parts conjugate maps q_k back to an eigenvalue times P_k.
# Composing the two gives q_k a fourth-order differential equation.
# ---------------------------------------------------------------------------
print("\nConnection identities for k = 0..4:")
for k in range(5):
    p = jacobi_polynomial(k, 0, beta)
    q = qs[k]
    eig = type_eigenvalue(k, beta, M)
    forward_ok = connection_op(p, beta, M) == q
    backward_ok = conjugate_connection_op(q, beta, M) == eig * p
    fourth = connection_op(conjugate_connection_op(q, beta, M), beta, M)
    fourth_ok = fourth == eig * q
    print(
        f"  k={k}: forward {forward_ok}, backward {backward_ok}, "
        f"fourth-order {fourth_ok}, eigenvalue {eig}"
    )

# A polynomial outside the family does not satisfy the fourth-order equation:
stray = UniPoly([1, 1])  # 1 + t
image = connection_op(conjugate_connection_op(stray, beta, M), beta, M)
print(f"\nNegative control on 1 + t: operator image is {image}, not a multiple of 1 + t")
