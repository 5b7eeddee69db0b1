"""Admissibility: when the commutator of the Novikov product gives a Hom-Poisson algebra.

Run with ``python demos/admissibility.py``.
"""

from hnpkit.checks import check_hom_poisson
from hnpkit.constructions import commutator_minus, from_derivation, is_admissible, tensor_product, yau_twist
from hnpkit.core import commutator_op
from hnpkit.fixtures import cube_zero, monomial_derivation, poly_names, three_dim_admissible, truncated_poly
from hnpkit.linalg import identity_map

mu, _ = truncated_poly(4)
A = from_derivation(mu, monomial_derivation(4, 2), identity_map(4))
report = is_admissible(A)
print("x * y = x d(y) with d(x) = x^2:", report.describe(poly_names(4)))
print("  commutator algebra is Hom-Poisson:", bool(check_hom_poisson(commutator_minus(A))))

for name, B in (("three_dim_admissible", three_dim_admissible()), ("cube_zero", cube_zero())):
    bracket = commutator_op(B.star)
    print(f"{name}: admissible={bool(is_admissible(B))}",
          f"hom-poisson={bool(check_hom_poisson(commutator_minus(B)))}",
          f"nonzero bracket={not bracket.is_zero()}")

# Admissibility survives twisting and tensoring.
B = cube_zero()
print("twist of cube_zero by alpha is admissible:", bool(is_admissible(yau_twist(B, B.alpha))))
T = tensor_product(B, three_dim_admissible())
print(f"cube_zero (x) three_dim_admissible, dim {T.dim}: admissible={bool(is_admissible(T))}")
