"""Hom-algebras, double Hom-algebras and their associators.

Two evaluation routes are provided for every trilinear expression:

* pointwise functions (``hom_associator(A, x, y, z)`` etc.) that evaluate on
  arbitrary vectors through :func:`~hnpkit.linalg.bilinear_eval`, and
* :class:`TrilinearForm` builders that produce the value on *every* basis
  triple at once by tensor contraction.  The axiom checkers sweep these.

The two routes share only the structure constants, so the pointwise functions
serve as an independent oracle for the sweeps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    BilinearOp,
    DimensionMismatch,
    LinearMap,
    Vector,
    _Exact,
    bilinear_eval,
    bilinear_precompose,
    identity_map,
    linmap_apply,
)

__all__ = [
    "Identity",
    "HomAlgebra",
    "DoubleHomAlgebra",
    "Witness",
    "TrilinearForm",
    "hom_associator",
    "mixed_hom_associator",
    "left_hom_associator",
    "commutator_op",
    "opposite_op",
    "nest_left",
    "nest_right",
    "hom_associator_form",
    "mixed_hom_associator_form",
    "left_hom_associator_form",
]


class Identity(str, enum.Enum):
    """Tags for every identity the checkers decide."""

    COMMUTATIVE = "commutative"
    HOM_ASSOCIATIVE = "hom-associative"
    COMMUTATIVE_HOM_ASSOCIATIVE = "commutative-hom-associative"
    LEFT_SYMMETRIC = "left-symmetric"
    RIGHT_COMMUTING = "right-commuting"
    HOM_NOVIKOV = "hom-novikov"
    MIXED_LEFT_SYMMETRIC = "mixed-left-symmetric"
    MIXED_RIGHT_COMMUTING = "mixed-right-commuting"
    MIXED_RIGHT_COMMUTING_ALT = "mixed-right-commuting-alt"
    RIGHTMULT_EQUIVALENCE = "rightmult-equivalence"
    HNP = "hnp"
    MULTIPLICATIVE_DOT = "multiplicative-dot"
    MULTIPLICATIVE_STAR = "multiplicative-star"
    MULTIPLICATIVE = "multiplicative"
    ANTISYMMETRIC = "antisymmetric"
    HOM_JACOBI = "hom-jacobi"
    HOM_LIE = "hom-lie"
    HOM_LEIBNIZ = "hom-leibniz"
    HOM_POISSON = "hom-poisson"
    WEAK_MORPHISM_DOT = "weak-morphism-dot"
    WEAK_MORPHISM_STAR = "weak-morphism-star"
    WEAK_MORPHISM = "weak-morphism"
    TWIST_INTERTWINING = "twist-intertwining"
    MORPHISM = "morphism"
    DERIVATION = "derivation"
    LEFT_HOM_ASSOCIATIVE = "left-hom-associative"
    ADMISSIBLE = "admissible"
    PERMUTATION_INVARIANT = "permutation-invariant"


@dataclass(frozen=True)
class HomAlgebra:
    """``(A, mu, alpha)``."""

    mu: BilinearOp
    alpha: LinearMap

    def __post_init__(self):
        if self.mu.dim != self.alpha.dim:
            raise DimensionMismatch(f"product on dim {self.mu.dim}, twisting map on dim {self.alpha.dim}")

    @property
    def dim(self) -> int:
        return self.mu.dim


@dataclass(frozen=True)
class DoubleHomAlgebra:
    """``(A, dot, star, alpha)``: a commutative-slot product, a Novikov-slot product and a twisting map.

    ``label`` is free-form provenance for reports and is ignored by equality.
    """

    dot: BilinearOp
    star: BilinearOp
    alpha: LinearMap
    label: str = field(default="", compare=False)

    def __post_init__(self):
        dims = {self.dot.dim, self.star.dim, self.alpha.dim}
        if len(dims) != 1:
            raise DimensionMismatch(f"inconsistent dimensions {sorted(dims)}")

    @property
    def dim(self) -> int:
        return self.dot.dim

    def dot_algebra(self) -> HomAlgebra:
        return HomAlgebra(self.dot, self.alpha)

    def star_algebra(self) -> HomAlgebra:
        return HomAlgebra(self.star, self.alpha)

    def relabel(self, label: str) -> "DoubleHomAlgebra":
        return DoubleHomAlgebra(self.dot, self.star, self.alpha, label)


@dataclass(frozen=True)
class Witness:
    """Evidence for an identity on one basis tuple.

    ``triple`` holds basis indices (two for binary identities, one for identities
    between linear maps).  The identity fails there iff ``lhs != rhs``.
    """

    identity: Identity
    triple: tuple[int, ...]
    lhs: Vector
    rhs: Vector

    @property
    def identity_id(self) -> str:
        return self.identity.value

    @property
    def is_failure(self) -> bool:
        return self.lhs != self.rhs

    def to_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "triple": list(self.triple),
            "lhs": [str(f) for f in self.lhs],
            "rhs": [str(f) for f in self.rhs],
        }

    def describe(self, basis_names=None) -> str:
        names = basis_names or [f"e{i}" for i in range(self.lhs.dim)]
        args = ", ".join(names[i] for i in self.triple)
        return (
            f"{self.identity.value} fails at ({args}): "
            f"lhs = {_render(self.lhs, names)}, rhs = {_render(self.rhs, names)}"
        )


def _render(v: Vector, names) -> str:
    terms = []
    for c, name in zip(v, names):
        if c == 0:
            continue
        if name == "1":
            terms.append(str(c))
        else:
            terms.append(name if c == 1 else f"-{name}" if c == -1 else f"{c}*{name}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def commutator_op(star: BilinearOp) -> BilinearOp:
    """``[x, y] = x*y - y*x``."""
    return star - opposite_op(star)


def opposite_op(op: BilinearOp) -> BilinearOp:
    """``mu^op(x, y) = mu(y, x)``."""
    return BilinearOp._wrap(op.numerators.transpose(1, 0, 2), op.denominator)


# -- pointwise route ---------------------------------------------------------


def _dims(A, *vs) -> None:
    for v in vs:
        if v.dim != A.dim:
            raise DimensionMismatch(f"vector of dim {v.dim} in algebra of dim {A.dim}")


def hom_associator(A: HomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``(xy)alpha(z) - alpha(x)(yz)``."""
    _dims(A, x, y, z)
    mu, al = A.mu, A.alpha
    return bilinear_eval(mu, bilinear_eval(mu, x, y), linmap_apply(al, z)) - bilinear_eval(
        mu, linmap_apply(al, x), bilinear_eval(mu, y, z)
    )


def mixed_hom_associator(A: DoubleHomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``(x*y).alpha(z) - alpha(x)*(y.z)``."""
    _dims(A, x, y, z)
    return bilinear_eval(A.dot, bilinear_eval(A.star, x, y), linmap_apply(A.alpha, z)) - bilinear_eval(
        A.star, linmap_apply(A.alpha, x), bilinear_eval(A.dot, y, z)
    )


def left_hom_associator(A: DoubleHomAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``(x.y)*alpha(z) - alpha(x)*(y.z)``."""
    _dims(A, x, y, z)
    return bilinear_eval(A.star, bilinear_eval(A.dot, x, y), linmap_apply(A.alpha, z)) - bilinear_eval(
        A.star, linmap_apply(A.alpha, x), bilinear_eval(A.dot, y, z)
    )


# -- basis-sweep route -------------------------------------------------------


class TrilinearForm(_Exact):
    """Values of a trilinear map ``A x A x A -> A`` on all basis triples.

    ``t[i, j, k]`` is the vector the map sends ``(e_i, e_j, e_k)`` to.
    """

    __slots__ = ()
    _ndim = 4

    def at(self, i: int, j: int, k: int) -> Vector:
        return Vector._wrap(self.numerators[i, j, k, :], self.denominator)

    def permuted(self, perm: tuple[int, int, int]) -> "TrilinearForm":
        """The form ``(x0, x1, x2) -> t(x_perm[0], x_perm[1], x_perm[2])``."""
        inverse = tuple(int(a) for a in np.argsort(perm))
        return TrilinearForm._wrap(self.numerators.transpose(*inverse, 3), self.denominator)

    def postcompose(self, f: LinearMap) -> "TrilinearForm":
        if f.dim != self.dim:
            raise DimensionMismatch("linear map and form disagree in dimension")
        num = np.tensordot(self.numerators, f.numerators, axes=(3, 1))
        return TrilinearForm._wrap(num, self.denominator * f.denominator)

    @classmethod
    def zero(cls, dim: int) -> "TrilinearForm":
        num = np.empty((dim,) * 4, dtype=object)
        num.fill(0)
        return cls._wrap(num)


def first_difference(lhs: _Exact, rhs: _Exact):
    """Lexicographically first basis tuple where two forms differ, or None.

    Works for linear maps (indexed by column), bilinear ops and trilinear forms;
    the last axis is always the output coordinate.
    """
    if lhs.numerators.shape != rhs.numerators.shape:
        raise DimensionMismatch("forms of different shape")
    if lhs.denominator == rhs.denominator:
        ne = lhs.numerators != rhs.numerators
    else:
        ne = lhs.numerators * rhs.denominator != rhs.numerators * lhs.denominator
    if isinstance(lhs, LinearMap):
        ne = ne.T  # columns are the inputs
    hits = np.argwhere(np.asarray(ne, dtype=bool).any(axis=-1))
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def value_at(form: _Exact, index: tuple[int, ...]) -> Vector:
    if isinstance(form, LinearMap):
        return form.column(index[0])
    return Vector._wrap(form.numerators[index], form.denominator)


def nest_left(inner: BilinearOp, outer: BilinearOp, f: LinearMap) -> TrilinearForm:
    """``(x, y, z) -> outer(inner(x, y), f(z))`` on all basis triples."""
    outer_f = bilinear_precompose(outer, identity_map(f.dim), f)  # [m, k, l]
    num = np.tensordot(inner.numerators, outer_f.numerators, axes=(2, 0))
    return TrilinearForm._wrap(num, inner.denominator * outer_f.denominator)


def nest_right(outer: BilinearOp, inner: BilinearOp, f: LinearMap) -> TrilinearForm:
    """``(x, y, z) -> outer(f(x), inner(y, z))`` on all basis triples."""
    outer_f = bilinear_precompose(outer, f, identity_map(f.dim))  # [i, m, l]
    num = np.tensordot(outer_f.numerators, inner.numerators, axes=(1, 2))  # [i, l, j, k]
    return TrilinearForm._wrap(num.transpose(0, 2, 3, 1), inner.denominator * outer_f.denominator)


def hom_associator_form(A: HomAlgebra) -> tuple[TrilinearForm, TrilinearForm]:
    """Both sides of ``(xy)alpha(z) = alpha(x)(yz)``."""
    return nest_left(A.mu, A.mu, A.alpha), nest_right(A.mu, A.mu, A.alpha)


def mixed_hom_associator_form(A: DoubleHomAlgebra) -> TrilinearForm:
    return nest_left(A.star, A.dot, A.alpha) - nest_right(A.star, A.dot, A.alpha)


def left_hom_associator_form(A: DoubleHomAlgebra) -> TrilinearForm:
    return nest_left(A.dot, A.star, A.alpha) - nest_right(A.star, A.dot, A.alpha)
