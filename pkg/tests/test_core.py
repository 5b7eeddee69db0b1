from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given

from conftest import bilinear_ops, linear_maps, vectors
from oracles import bf_hom_associator, bf_left, bf_mixed
from hnpkit.constructions import from_derivation
from hnpkit.core import (
    DoubleHomAlgebra,
    HomAlgebra,
    Identity,
    TrilinearForm,
    Witness,
    commutator_op,
    first_difference,
    hom_associator,
    left_hom_associator,
    mixed_hom_associator,
    nest_left,
    nest_right,
    opposite_op,
)
from hnpkit.fixtures import exp_shift_product, monomial_derivation, truncated_poly
from hnpkit.linalg import (
    DimensionMismatch,
    LinearMap,
    Vector,
    basis_vector,
    bilinear_precompose,
    identity_map,
    zero_op,
    zero_vector,
)


def e(n, i):
    return basis_vector(n, i)


def triples(n):
    return product(range(n), repeat=3)


def test_dimensions_must_agree():
    mu, d = truncated_poly(3)
    with pytest.raises(DimensionMismatch):
        HomAlgebra(mu, identity_map(2))
    with pytest.raises(DimensionMismatch):
        DoubleHomAlgebra(mu, zero_op(2), d)
    A = HomAlgebra(mu, identity_map(3))
    with pytest.raises(DimensionMismatch):
        hom_associator(A, e(3, 0), e(3, 1), e(2, 0))


def test_labels_do_not_affect_equality():
    mu, _ = truncated_poly(2)
    A = DoubleHomAlgebra(mu, mu, identity_map(2), "one")
    assert A == A.relabel("two")
    assert hash(A) == hash(A.relabel("two"))


def test_associative_product_has_zero_hom_associator():
    mu, _ = truncated_poly(4)
    A = HomAlgebra(mu, identity_map(4))
    for i, j, k in triples(4):
        assert hom_associator(A, e(4, i), e(4, j), e(4, k)) == zero_vector(4)


def test_zero_product_has_zero_associators():
    _, d = truncated_poly(3)
    z = zero_op(3)
    A = DoubleHomAlgebra(z, z, d)
    for i, j, k in triples(3):
        x, y, w = e(3, i), e(3, j), e(3, k)
        assert hom_associator(A.dot_algebra(), x, y, w).is_zero()
        assert mixed_hom_associator(A, x, y, w).is_zero()
        assert left_hom_associator(A, x, y, w).is_zero()


def test_exp_shift_product_associator():
    # phi(f)phi(g) is commutative, so the associator vanishes on (x, x, x) ...
    Q, phi = exp_shift_product(2)
    A = HomAlgebra(Q, identity_map(2))
    x = e(2, 1)
    assert hom_associator(A, x, x, x).is_zero()
    # ... but not on (x, x, phi(x)).
    assert hom_associator(A, x, x, phi(x)) == Vector([1, -1])


def test_mixed_associator_with_star_equal_to_dot():
    mu, _ = truncated_poly(3)
    A = DoubleHomAlgebra(mu, mu, identity_map(3))
    for i, j, k in triples(3):
        assert mixed_hom_associator(A, e(3, i), e(3, j), e(3, k)).is_zero()


def test_mixed_associator_symmetric_on_derivation_algebra():
    mu, _ = truncated_poly(4)
    A = from_derivation(mu, monomial_derivation(4, 2), identity_map(4))
    for i, j, k in triples(4):
        x, y, z = e(4, i), e(4, j), e(4, k)
        assert mixed_hom_associator(A, x, y, z) == mixed_hom_associator(A, y, x, z)


def test_left_associator_of_x_times_derivative():
    # star(f, g) = f * g' with g' = d/dx on k[x]/(x^4), alpha = Id
    mu, d = truncated_poly(4)
    A = DoubleHomAlgebra(mu, bilinear_precompose(mu, identity_map(4), d), identity_map(4))
    one, x = e(4, 0), e(4, 1)
    # (1 . x) * 1 - 1 * (x . 1) = x * 0 - 1 * 1
    assert left_hom_associator(A, one, x, one) == Vector([-1, 0, 0, 0])


def test_left_associator_equals_hom_associator_when_star_is_dot():
    mu, _ = truncated_poly(3)
    al = LinearMap([[1, 0, 0], [0, 2, 0], [0, 0, 4]])
    A = DoubleHomAlgebra(mu, mu, al)
    for i, j, k in triples(3):
        x, y, z = e(3, i), e(3, j), e(3, k)
        assert left_hom_associator(A, x, y, z) == hom_associator(A.dot_algebra(), x, y, z)


def test_commutator_examples():
    mu, d = truncated_poly(3)
    assert commutator_op(mu) == zero_op(3)
    star = bilinear_precompose(mu, identity_map(3), d)
    br = commutator_op(star)
    # [x, x^2] = x * 2x - x^2 * 1 = x^2
    assert br(e(3, 1), e(3, 2)) == e(3, 2)
    assert np.array_equal(br.numerators, -br.numerators.transpose(1, 0, 2))


def test_opposite_examples():
    mu, d = truncated_poly(3)
    star = bilinear_precompose(mu, identity_map(3), d)
    assert opposite_op(opposite_op(star)) == star
    assert opposite_op(mu) == mu
    assert opposite_op(zero_op(3)) == zero_op(3)
    assert opposite_op(star).product(1, 0) == star.product(0, 1)


@given(bilinear_ops(3), vectors(3), vectors(3))
def test_bracket_is_antisymmetric(star, x, y):
    br = commutator_op(star)
    assert (br(x, y) + br(y, x)).is_zero()


def test_permuted_matches_brute_force():
    rng = np.random.default_rng(5)
    num = rng.integers(-9, 9, size=(3, 3, 3, 3)).astype(object)
    t = TrilinearForm._wrap(num)
    for perm in permutations(range(3)):
        p = t.permuted(perm)
        for idx in triples(3):
            moved = tuple(idx[perm[m]] for m in range(3))
            assert p.at(*idx) == t.at(*moved)


@given(bilinear_ops(3), bilinear_ops(3), linear_maps(3))
def test_nested_sweeps_match_pointwise(inner, outer, f):
    L = nest_left(inner, outer, f)
    R = nest_right(outer, inner, f)
    for i, j, k in triples(3):
        x, y, z = e(3, i), e(3, j), e(3, k)
        assert L.at(i, j, k) == outer(inner(x, y), f(z))
        assert R.at(i, j, k) == outer(f(x), inner(y, z))


@given(bilinear_ops(2), bilinear_ops(2), linear_maps(2), vectors(2), vectors(2), vectors(2))
def test_associators_match_loop_oracle(dot, star, al, x, y, z):
    A = DoubleHomAlgebra(dot, star, al)
    D, S, M = dot.tolist(), star.tolist(), al.tolist()
    X, Y, Z = list(x), list(y), list(z)
    assert list(hom_associator(A.dot_algebra(), x, y, z)) == bf_hom_associator(D, M, X, Y, Z)
    assert list(mixed_hom_associator(A, x, y, z)) == bf_mixed(D, S, M, X, Y, Z)
    assert list(left_hom_associator(A, x, y, z)) == bf_left(D, S, M, X, Y, Z)


def test_first_difference_is_lexicographic():
    a = TrilinearForm.zero(2)
    num = np.zeros((2, 2, 2, 2), dtype=object)
    num[1, 0, 0, 1] = 1
    num[1, 1, 1, 0] = 3
    b = TrilinearForm._wrap(num)
    assert first_difference(a, b) == (1, 0, 0)
    assert first_difference(a, a) is None
    f, g = identity_map(3), LinearMap([[1, 0, 0], [0, 1, 0], [0, 5, 1]])
    assert first_difference(f, g) == (1,)


def test_witness_serialization_and_prose():
    w = Witness(Identity.HOM_ASSOCIATIVE, (0, 1, 1), Vector([1, 0]), Vector([0, "1/2"]))
    assert w.is_failure
    assert w.identity_id == "hom-associative"
    assert w.to_dict() == {"identity": "hom-associative", "triple": [0, 1, 1], "lhs": ["1", "0"], "rhs": ["0", "1/2"]}
    assert w.describe(["1", "x"]) == "hom-associative fails at (1, x, x): lhs = 1, rhs = 1/2*x"
    assert not Witness(Identity.COMMUTATIVE, (0, 0), Vector([1, 0]), Vector([1, 0])).is_failure
