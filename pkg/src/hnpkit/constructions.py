"""Constructions of new Hom-Novikov-Poisson algebras from old ones.

Each construction checks the hypotheses of the theorem that guarantees its
output and raises a :class:`HypothesisError` subclass naming the violated
hypothesis instead of building an algebra nothing is known about.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .checks import (
    CheckReport,
    check_commutative,
    check_derivation,
    check_hnp,
    check_hom_associative,
    check_left_hom_associative,
    check_multiplicative,
    check_weak_morphism,
)
from .core import DoubleHomAlgebra, HomAlgebra, Identity, commutator_op
from .linalg import (
    BilinearOp,
    LinearMap,
    Vector,
    bilinear_postcompose,
    bilinear_precompose,
    bilinear_tensor,
    fixed_subspace,
    identity_map,
    left_multiplication,
    linmap_apply,
    linmap_pow,
    linmap_tensor,
    zero_map,
    zero_op,
)

__all__ = [
    "HypothesisError",
    "NotAWeakMorphism",
    "NotMultiplicative",
    "FixedPointViolation",
    "NotHNP",
    "NotCommutative",
    "NotAssociative",
    "NotADerivation",
    "NotAnAlgebraMorphism",
    "NotCommuting",
    "NotNilpotent",
    "TwistSpec",
    "PerturbationSpec",
    "as_double",
    "yau_twist",
    "nth_twist",
    "tensor_product",
    "perturb_diamond",
    "perturb_times",
    "perturb_combined",
    "from_derivation",
    "derivation_perturbation",
    "exp_nilpotent",
    "commutator_minus",
    "is_admissible",
    "fixed_points",
]


class HypothesisError(ValueError):
    """A theorem hypothesis needed by a construction does not hold."""

    hypothesis = "hypothesis"

    def __init__(self, message: str | None = None, report: CheckReport | None = None):
        self.report = report
        text = message or f"{self.hypothesis} violated"
        if report is not None and report.witness is not None:
            text += f"; {report.witness.describe()}"
        super().__init__(text)


class NotAWeakMorphism(HypothesisError):
    hypothesis = "weak-morphism hypothesis"


class NotMultiplicative(HypothesisError):
    hypothesis = "multiplicativity hypothesis"


class FixedPointViolation(HypothesisError):
    hypothesis = "fixed-point hypothesis"


class NotHNP(HypothesisError):
    hypothesis = "Hom-Novikov-Poisson hypothesis"


class NotCommutative(HypothesisError):
    hypothesis = "commutativity hypothesis"


class NotAssociative(HypothesisError):
    hypothesis = "associativity hypothesis"


class NotADerivation(HypothesisError):
    hypothesis = "derivation hypothesis"


class NotAnAlgebraMorphism(HypothesisError):
    hypothesis = "algebra-morphism hypothesis"


class NotCommuting(HypothesisError):
    hypothesis = "commutation hypothesis alpha d = d alpha"


class NotNilpotent(HypothesisError):
    hypothesis = "nilpotency hypothesis"


def _require(report: CheckReport, error: type[HypothesisError]) -> None:
    if not report.passed:
        raise error(report=report)


def _require_fixed(alpha: LinearMap, v: Vector, power: int, name: str) -> None:
    if linmap_apply(linmap_pow(alpha, power), v) != v:
        raise FixedPointViolation(f"fixed-point hypothesis α{_SUP[power]}({name})={name} violated")


_SUP = {2: "²", 4: "⁴"}


def _require_mult_hnp(A: DoubleHomAlgebra) -> None:
    _require(check_multiplicative(A), NotMultiplicative)
    _require(check_hnp(A), NotHNP)


# -- specs -------------------------------------------------------------------


@dataclass(frozen=True)
class TwistSpec:
    """A twist to apply: by ``map`` (a weak morphism) or to the ``exponent``-th derived algebra."""

    map: LinearMap | None = None
    exponent: int | None = None

    def apply(self, A: DoubleHomAlgebra) -> DoubleHomAlgebra:
        if (self.map is None) == (self.exponent is None):
            raise ValueError("give exactly one of map and exponent")
        return yau_twist(A, self.map) if self.map is not None else nth_twist(A, self.exponent)


@dataclass(frozen=True)
class PerturbationSpec:
    """Perturbing elements; ``b`` only enters the combined perturbation."""

    a: Vector
    b: Vector | None = None

    def diamond(self, A: DoubleHomAlgebra) -> DoubleHomAlgebra:
        return perturb_diamond(A, self.a)

    def times(self, A: DoubleHomAlgebra) -> DoubleHomAlgebra:
        return perturb_times(A, self.a)

    def combined(self, A: DoubleHomAlgebra) -> DoubleHomAlgebra:
        if self.b is None:
            raise ValueError("the combined perturbation needs b")
        return perturb_combined(A, self.a, self.b)


# -- twists and tensors ------------------------------------------------------


def as_double(H: HomAlgebra) -> DoubleHomAlgebra:
    """``(A, mu, mu, alpha)``: a commutative Hom-associative algebra used as both products."""
    return DoubleHomAlgebra(H.mu, H.mu, H.alpha)


def yau_twist(A: DoubleHomAlgebra, beta: LinearMap) -> DoubleHomAlgebra:
    """``(A, beta dot, beta star, beta alpha)`` for a weak morphism ``beta`` of ``A``."""
    _require(check_weak_morphism(beta, A, A), NotAWeakMorphism)
    return DoubleHomAlgebra(
        bilinear_postcompose(beta, A.dot),
        bilinear_postcompose(beta, A.star),
        beta @ A.alpha,
    )


def nth_twist(A: DoubleHomAlgebra, n: int) -> DoubleHomAlgebra:
    """``(A, alpha^n dot, alpha^n star, alpha^(n+1))`` for multiplicative ``A``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    _require(check_multiplicative(A), NotMultiplicative)
    if n == 0:
        return A
    an = linmap_pow(A.alpha, n)
    return DoubleHomAlgebra(
        bilinear_postcompose(an, A.dot), bilinear_postcompose(an, A.star), an @ A.alpha
    )


def tensor_product(A1: DoubleHomAlgebra, A2: DoubleHomAlgebra) -> DoubleHomAlgebra:
    """Tensor product on the lexicographic basis ``e_i (x) f_j -> i * dim2 + j``.

    ``star = star1 (x) dot2 + dot1 (x) star2``.
    """
    return DoubleHomAlgebra(
        bilinear_tensor(A1.dot, A2.dot),
        bilinear_tensor(A1.star, A2.dot) + bilinear_tensor(A1.dot, A2.star),
        linmap_tensor(A1.alpha, A2.alpha),
    )


# -- perturbations -----------------------------------------------------------


def _times_left(A: DoubleHomAlgebra, v: Vector, f: LinearMap, op: BilinearOp) -> BilinearOp:
    # (x, y) -> v . f(op(x, y))
    return bilinear_postcompose(left_multiplication(A.dot, v) @ f, op)


def perturb_diamond(A: DoubleHomAlgebra, a: Vector) -> DoubleHomAlgebra:
    """``(A, a.(x.y), alpha(x*y), alpha^2)``; needs ``alpha^2(a) = a``."""
    _require_mult_hnp(A)
    _require_fixed(A.alpha, a, 2, "a")
    one = identity_map(A.dim)
    return DoubleHomAlgebra(
        _times_left(A, a, one, A.dot),
        bilinear_postcompose(A.alpha, A.star),
        A.alpha @ A.alpha,
    )


def perturb_times(A: DoubleHomAlgebra, a: Vector) -> DoubleHomAlgebra:
    """``(A, alpha(x.y), alpha(x)*alpha(y) + a.(x.y), alpha^2)``; needs ``alpha^2(a) = a``."""
    _require_mult_hnp(A)
    _require_fixed(A.alpha, a, 2, "a")
    one = identity_map(A.dim)
    star = bilinear_precompose(A.star, A.alpha, A.alpha) + _times_left(A, a, one, A.dot)
    return DoubleHomAlgebra(bilinear_postcompose(A.alpha, A.dot), star, A.alpha @ A.alpha)


def perturb_combined(A: DoubleHomAlgebra, a: Vector, b: Vector) -> DoubleHomAlgebra:
    """Both perturbations at once, with twisting map ``alpha^4``.

    ``x . y = alpha(b) . alpha^2(x.y)`` and
    ``x * y = alpha^3(x*y) + a . alpha^2(x.y)``.
    """
    _require_mult_hnp(A)
    _require_fixed(A.alpha, a, 2, "a")
    _require_fixed(A.alpha, b, 4, "b")
    a2 = linmap_pow(A.alpha, 2)
    dot = _times_left(A, linmap_apply(A.alpha, b), a2, A.dot)
    star = bilinear_postcompose(a2 @ A.alpha, A.star) + _times_left(A, a, a2, A.dot)
    return DoubleHomAlgebra(dot, star, a2 @ a2)


def fixed_points(alpha: LinearMap, power: int) -> list[Vector]:
    """A basis of ``{v : alpha^power(v) = v}``, the admissible perturbing elements."""
    return fixed_subspace(alpha, power)


# -- derivations -------------------------------------------------------------


def _require_derivation_data(mu: BilinearOp, d: LinearMap, alpha: LinearMap) -> None:
    _require(check_commutative(mu), NotCommutative)
    _require(check_hom_associative(HomAlgebra(mu, identity_map(mu.dim))), NotAssociative)
    _require(check_derivation(d, mu), NotADerivation)
    plain = DoubleHomAlgebra(mu, mu, alpha)
    _require(check_weak_morphism(alpha, plain, plain), NotAnAlgebraMorphism)
    if alpha @ d != d @ alpha:
        raise NotCommuting()


def from_derivation(mu: BilinearOp, d: LinearMap, alpha: LinearMap) -> DoubleHomAlgebra:
    """``(A, alpha mu(x, y), alpha mu(x, d y), alpha)``.

    ``mu`` must be commutative and associative, ``d`` a derivation of ``mu`` and
    ``alpha`` an algebra endomorphism of ``mu`` commuting with ``d``.
    """
    _require_derivation_data(mu, d, alpha)
    x_dy = bilinear_precompose(mu, identity_map(mu.dim), d)
    return DoubleHomAlgebra(bilinear_postcompose(alpha, mu), bilinear_postcompose(alpha, x_dy), alpha)


def derivation_perturbation(
    mu: BilinearOp, d: LinearMap, alpha: LinearMap, a: Vector, b: Vector
) -> DoubleHomAlgebra:
    """Closed form of the combined perturbation of :func:`from_derivation`.

    ``x . y = alpha^2(b) alpha^4(xy)`` and
    ``x * y = alpha^4(x d(y)) + alpha(a) alpha^4(xy)``, twisting map ``alpha^4``.
    """
    _require_derivation_data(mu, d, alpha)
    _require_fixed(alpha, a, 2, "a")
    _require_fixed(alpha, b, 4, "b")
    a2 = linmap_pow(alpha, 2)
    a4 = a2 @ a2
    mult_b = left_multiplication(mu, linmap_apply(a2, b))
    mult_a = left_multiplication(mu, linmap_apply(alpha, a))
    x_dy = bilinear_precompose(mu, identity_map(mu.dim), d)
    dot = bilinear_postcompose(mult_b @ a4, mu)
    star = bilinear_postcompose(a4, x_dy) + bilinear_postcompose(mult_a @ a4, mu)
    return DoubleHomAlgebra(dot, star, a4)


def exp_nilpotent(d: LinearMap) -> LinearMap:
    """``sum_k d^k / k!`` for nilpotent ``d``; the sum stops at the nilpotency index."""
    zero = zero_map(d.dim)
    total = identity_map(d.dim)
    power = identity_map(d.dim)
    for k in range(1, d.dim + 1):
        power = power @ d
        if power == zero:
            return total
        total = total + power * Fraction(1, factorial(k))
    raise NotNilpotent(f"map is not nilpotent: d^{d.dim} != 0")


# -- commutator algebra and admissibility ------------------------------------


def commutator_minus(A: DoubleHomAlgebra) -> DoubleHomAlgebra:
    """``(A, dot, [,], alpha)`` with ``[x, y] = x*y - y*x``."""
    return DoubleHomAlgebra(A.dot, commutator_op(A.star), A.alpha)


def is_admissible(A: DoubleHomAlgebra) -> CheckReport:
    """Decide whether the commutator algebra of an HNP algebra is Hom-Poisson.

    For HNP algebras this holds exactly when the left Hom-associator
    ``(x.y)*alpha(z) - alpha(x)*(y.z)`` vanishes, which is what is swept.
    """
    _require(check_hnp(A), NotHNP)
    inner = check_left_hom_associative(A)
    return CheckReport(inner.passed, Identity.ADMISSIBLE, inner.witness, inner.triples_checked, (inner,))


def zero_double(dim: int) -> DoubleHomAlgebra:
    """All products and the twisting map zero."""
    return DoubleHomAlgebra(zero_op(dim), zero_op(dim), zero_map(dim))
