from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import bilinear_ops, sparse_ints
from hnpkit.checks import (
    CheckReport,
    PreconditionError,
    check_commutative,
    check_derivation,
    check_hnp,
    check_hom_associative,
    check_hom_lie,
    check_hom_novikov,
    check_hom_poisson,
    check_morphism,
    check_multiplicative,
    check_permutation_invariance,
    check_rightmult_equivalence,
    check_weak_morphism,
)
from hnpkit.constructions import commutator_minus, exp_nilpotent, from_derivation, nth_twist
from hnpkit.core import DoubleHomAlgebra, HomAlgebra, Identity
from hnpkit.fixtures import (
    catalog_entries,
    cube_zero,
    exp_shift_product,
    monomial_derivation,
    monomial_derivations,
    poly_names,
    three_dim_admissible,
    truncated_poly,
)
from hnpkit.linalg import (
    BilinearOp,
    LinearMap,
    Vector,
    basis_vector,
    bilinear_postcompose,
    bilinear_precompose,
    identity_map,
    zero_map,
    zero_op,
)

CATALOG = catalog_entries(0)


def derivation_algebra(N=4, k=2, c=1, twist=False):
    mu, _ = truncated_poly(N)
    d = monomial_derivation(N, k, c)
    alpha = exp_nilpotent(d) if twist else identity_map(N)
    return from_derivation(mu, d, alpha), d


def x_dx_algebra(N):
    """star(f, g) = f g' with the literal d/dx on k[x]/(x^N), alpha = Id."""
    mu, d = truncated_poly(N)
    return DoubleHomAlgebra(mu, bilinear_precompose(mu, identity_map(N), d), identity_map(N))


def test_report_invariants():
    with pytest.raises(ValueError):
        CheckReport(True, Identity.HNP, witness=check_commutative(x_dx_algebra(3).star).witness)
    rep = check_commutative(zero_op(2))
    assert rep and rep.identity_id == "commutative" and rep.triples_checked == 4
    assert rep.to_dict()["witness"] is None


def test_check_commutative_examples():
    mu, _ = truncated_poly(4)
    assert check_commutative(mu).passed
    assert check_commutative(zero_op(3)).passed
    rep = check_commutative(x_dx_algebra(3).star)
    assert not rep.passed
    w = rep.witness
    # 1 * x = 1 * 1 = 1 while x * 1 = x * 0 = 0
    assert w.triple == (0, 1)
    assert w.lhs == Vector([1, 0, 0]) and w.rhs == Vector([0, 0, 0])


def test_check_multiplicative_examples():
    mu, d = truncated_poly(4)
    assert check_multiplicative(DoubleHomAlgebra(mu, mu, identity_map(4))).passed
    A_phi, _ = derivation_algebra(4, 2, 1, twist=True)
    assert check_multiplicative(A_phi).passed
    rep = check_multiplicative(DoubleHomAlgebra(mu, mu, d))
    assert not rep.passed and rep.failed_parts() == [Identity.MULTIPLICATIVE_DOT, Identity.MULTIPLICATIVE_STAR]
    # d(x x) = 2x but d(x) d(x) = 1
    x = basis_vector(4, 1)
    assert d(mu(x, x)) == x * 2 and mu(d(x), d(x)) == basis_vector(4, 0)
    assert rep.witness.triple == (0, 1)
    assert rep.triples_checked == 32


def test_check_hom_associative_examples():
    mu, _ = truncated_poly(4)
    assert check_hom_associative(HomAlgebra(mu, identity_map(4))).passed
    assert check_hom_associative(HomAlgebra(zero_op(3), identity_map(3))).passed
    rep = check_hom_associative(HomAlgebra(exp_shift_product(2)[0], identity_map(2)))
    assert not rep.passed
    assert rep.witness.describe(poly_names(2)) == "hom-associative fails at (1, 1, x): lhs = 1 + x, rhs = 2 + x"
    assert rep.triples_checked == 8


def test_exp_shift_product_with_its_own_twist():
    # phi is not multiplicative on the truncation, so (phi(f)phi(g), phi) is not Hom-associative.
    Q, phi = exp_shift_product(2)
    assert not check_hom_associative(HomAlgebra(Q, phi)).passed


def test_check_hom_novikov_examples():
    A, _ = derivation_algebra(4, 2)
    assert check_hom_novikov(A.star_algebra()).passed
    assert check_hom_novikov(HomAlgebra(zero_op(3), identity_map(3))).passed
    mu, _ = truncated_poly(4)
    assert check_hom_novikov(HomAlgebra(mu, identity_map(4))).passed


def test_hom_novikov_with_literal_d_dx_fails_left_symmetry():
    rep = check_hom_novikov(x_dx_algebra(4).star_algebra())
    assert not rep.passed
    assert rep.failed_parts() == [Identity.LEFT_SYMMETRIC]
    assert rep.part(Identity.RIGHT_COMMUTING).passed


def test_check_hnp_reports_every_part():
    mu, _ = truncated_poly(3)
    rep = check_hnp(DoubleHomAlgebra(mu, mu, identity_map(3)))
    assert rep.passed and len(rep.parts) == 4
    assert [p.identity for p in rep.parts] == [
        Identity.COMMUTATIVE_HOM_ASSOCIATIVE,
        Identity.HOM_NOVIKOV,
        Identity.MIXED_LEFT_SYMMETRIC,
        Identity.MIXED_RIGHT_COMMUTING,
    ]
    assert rep.triples_checked == 9 + 27 + 2 * 27 + 27 + 27


def test_check_hnp_fails_at_commutativity():
    star = x_dx_algebra(3).star
    rep = check_hnp(DoubleHomAlgebra(star, star, identity_map(3)))
    assert not rep.passed
    assert rep.parts[0].part(Identity.COMMUTATIVE).witness.triple == (0, 1)
    assert rep.witness.identity is Identity.COMMUTATIVE


def test_x_dx_with_literal_d_dx_is_not_hnp():
    rep = check_hnp(x_dx_algebra(2))
    assert Identity.MIXED_LEFT_SYMMETRIC in rep.failed_parts()
    assert rep.part(Identity.MIXED_LEFT_SYMMETRIC).witness.triple == (0, 1, 1)


def test_derivation_algebras_are_hnp():
    for N in (2, 3, 4):
        mu, _ = truncated_poly(N)
        for d in monomial_derivations(N):
            assert check_hnp(from_derivation(mu, d, identity_map(N))).passed


def test_rightmult_equivalence_on_catalog():
    for entry in CATALOG:
        rep = check_rightmult_equivalence(entry.algebra)
        assert rep.passed and all(p.passed for p in rep.parts)


def test_rightmult_equivalence_needs_commutative_dot():
    star = x_dx_algebra(3).star
    with pytest.raises(PreconditionError):
        check_rightmult_equivalence(DoubleHomAlgebra(star, star, identity_map(3)))


def test_rightmult_equivalence_with_zero_star():
    mu, _ = truncated_poly(3)
    rep = check_rightmult_equivalence(DoubleHomAlgebra(mu, zero_op(3), identity_map(3)))
    assert rep.passed and all(p.passed for p in rep.parts)


@given(bilinear_ops(3, sparse_ints()), st.booleans())
def test_rightmult_forms_agree_on_random_stars(star, twisted):
    mu, _ = truncated_poly(3)
    al = LinearMap([[1, 0, 0], [0, -1, 0], [0, 0, 1]]) if twisted else identity_map(3)
    dot = bilinear_postcompose(al, mu)
    rep = check_rightmult_equivalence(DoubleHomAlgebra(dot, star, al))
    assert rep.passed
    assert rep.parts[0].passed == rep.parts[1].passed


def test_check_hom_lie_examples():
    assert check_hom_lie(HomAlgebra(zero_op(3), identity_map(3))).passed
    for entry in CATALOG[::5]:
        A = entry.algebra
        assert check_hom_lie(HomAlgebra(commutator_minus(A).star, A.alpha)).passed
    mu, _ = truncated_poly(3)
    rep = check_hom_lie(HomAlgebra(mu, identity_map(3)))
    assert rep.failed_parts()[0] is Identity.ANTISYMMETRIC


def test_hom_jacobi_failure_is_detected():
    # [e0, e1] = e2, [e1, e2] = e1, [e0, e2] = e0: anti-symmetric, Jacobi fails
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2], c[1][0][2] = 1, -1
    c[1][2][1], c[2][1][1] = 1, -1
    c[0][2][0], c[2][0][0] = 1, -1
    rep = check_hom_lie(HomAlgebra(BilinearOp(c), identity_map(3)))
    assert rep.part(Identity.ANTISYMMETRIC).passed
    assert not rep.part(Identity.HOM_JACOBI).passed


def test_check_hom_poisson_examples():
    mu, _ = truncated_poly(3)
    assert check_hom_poisson(DoubleHomAlgebra(mu, zero_op(3), identity_map(3))).passed
    assert check_hom_poisson(commutator_minus(cube_zero())).passed
    A, _ = derivation_algebra(4, 2)
    rep = check_hom_poisson(commutator_minus(A))
    assert rep.failed_parts() == [Identity.HOM_LEIBNIZ]


def test_check_weak_morphism_examples():
    A, d = derivation_algebra(4, 2)
    assert check_weak_morphism(identity_map(4), A, A).passed
    assert check_weak_morphism(exp_nilpotent(d), A, A).passed
    assert check_weak_morphism(exp_nilpotent(d * Fraction(-1, 3)), A, A).passed
    rep = check_weak_morphism(d, A, A)
    assert not rep.passed and rep.triples_checked == 32


def test_check_morphism_examples():
    A, _ = derivation_algebra(4, 2, twist=True)
    for n in range(4):
        an = identity_map(4)
        for _ in range(n):
            an = an @ A.alpha
        assert check_morphism(an, A, A).passed
    B = nth_twist(A, 1)
    rep = check_morphism(identity_map(4), A, B)
    assert Identity.TWIST_INTERTWINING in rep.failed_parts()
    Z = DoubleHomAlgebra(zero_op(4), zero_op(4), zero_map(4))
    assert check_morphism(zero_map(4), A, Z).passed


def test_check_derivation_examples():
    mu, d = truncated_poly(4)
    rep = check_derivation(d, mu)
    # d/dx does not preserve (x^4): d(x * x^3) = d(0) = 0 but x^3 + x * 3x^2 = 4x^3
    assert not rep.passed
    assert rep.witness.describe(poly_names(4)) == "derivation fails at (x, x^3): lhs = 0, rhs = 4*x^3"
    rep = check_derivation(identity_map(4), mu)
    assert rep.witness.triple == (0, 0)
    assert rep.witness.lhs == basis_vector(4, 0) and rep.witness.rhs == basis_vector(4, 0) * 2
    assert check_derivation(zero_map(4), mu).passed
    for N in (2, 3, 4):
        for dd in monomial_derivations(N):
            assert check_derivation(dd, truncated_poly(N)[0]).passed


def test_three_dim_data_is_a_derivation():
    A = three_dim_admissible()
    assert check_hnp(A).passed and A.star == zero_op(3)


def test_permutation_invariance_on_commutative_hom_associative():
    for entry in CATALOG:
        A = entry.algebra
        assert check_permutation_invariance(HomAlgebra(A.dot, A.alpha)).passed


def test_describe_lists_parts():
    text = check_hnp(x_dx_algebra(2)).describe(poly_names(2))
    assert text.splitlines()[0].startswith("FAIL hnp")
    assert "mixed-left-symmetric fails at (1, x, x)" in text
