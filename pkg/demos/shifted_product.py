"""The shifted product phi(f) phi(g) with phi = exp(d/dx) is not associative.

On k[x]/(x^4) nothing in the cubes below is truncated, so the two bracketings of
(x, x, phi(x)) give (x+2)^3 and (x+1)(x+2)(x+3) in full.  On k[x]/(x^2) the
truncation happens inside the nested products, and the values differ from
the truncated cubics.

Run with ``python demos/shifted_product.py``.
"""

from hnpkit.checks import check_hom_associative
from hnpkit.core import HomAlgebra
from hnpkit.fixtures import exp_shift_product, poly_names
from hnpkit.linalg import basis_vector, identity_map


def show(N):
    Q, phi = exp_shift_product(N)
    names = poly_names(N)
    x = basis_vector(N, 1)
    left = Q(Q(x, x), phi(x))
    right = Q(x, Q(x, phi(x)))
    print(f"k[x]/(x^{N}):")
    print("  (x.x).phi(x) =", [str(c) for c in left])
    print("  x.(x.phi(x)) =", [str(c) for c in right])
    print("  first failing basis triple:", check_hom_associative(HomAlgebra(Q, identity_map(N))).witness.describe(names))


show(4)
show(2)
