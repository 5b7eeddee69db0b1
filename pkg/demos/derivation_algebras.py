"""Build Hom-Novikov-Poisson algebras from a derivation and push them through the constructions.

Run with ``python demos/derivation_algebras.py``.
"""

from hnpkit.checks import check_hnp, check_hom_novikov, check_multiplicative
from hnpkit.constructions import exp_nilpotent, fixed_points, from_derivation, nth_twist, perturb_combined, perturb_times
from hnpkit.fixtures import monomial_derivation, poly_names, truncated_poly

N = 4
names = poly_names(N)
mu, ddx = truncated_poly(N)

# d/dx does not preserve the ideal (x^4), so it is not a derivation of the truncation.
try:
    from_derivation(mu, ddx, exp_nilpotent(ddx))
except ValueError as exc:
    print("d/dx refused:", exc)

# x^2 d/dx is a derivation, and its exponential commutes with it.
d = monomial_derivation(N, 2)
phi = exp_nilpotent(d)
print("exp(x^2 d/dx) sends x to", [str(c) for c in phi(mu.product(1, 0))])

A = from_derivation(mu, d, phi)
print(check_hnp(A).describe(names))
print("multiplicative:", bool(check_multiplicative(A)))

# Derived twists stay HNP and multiplicative.
for n in (1, 2, 3):
    T = nth_twist(A, n)
    print(f"derived twist n={n}: hnp={bool(check_hnp(T))} multiplicative={bool(check_multiplicative(T))}")

# Perturbations need elements fixed by alpha^2 and alpha^4.
a_menu = fixed_points(A.alpha, 2)
print("fixed by alpha^2:", [[str(c) for c in v] for v in a_menu])
a = a_menu[-1]
times = perturb_times(A, a)
print("perturbed Novikov product is Hom-Novikov:", bool(check_hom_novikov(times.star_algebra())))
both = perturb_combined(A, a, fixed_points(A.alpha, 4)[0])
print("combined perturbation:", check_hnp(both).describe(names).splitlines()[0])
