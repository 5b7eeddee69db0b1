"""Decision procedures for the identities of Hom-Novikov-Poisson theory.

Every checker sweeps all basis pairs or triples (enough, since each identity is
multilinear) and returns a :class:`CheckReport`.  A failing report carries the
lexicographically first failing basis tuple as a :class:`~hnpkit.core.Witness`.
Composite checks keep the reports of their parts and never short-circuit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .core import (
    DoubleHomAlgebra,
    HomAlgebra,
    Identity,
    TrilinearForm,
    Witness,
    first_difference,
    nest_left,
    nest_right,
    opposite_op,
    value_at,
)
from .linalg import (
    BilinearOp,
    DimensionMismatch,
    LinearMap,
    bilinear_postcompose,
    bilinear_precompose,
    identity_map,
)

__all__ = [
    "CheckReport",
    "PreconditionError",
    "check_commutative",
    "check_multiplicative",
    "check_hom_associative",
    "check_commutative_hom_associative",
    "check_hom_novikov",
    "check_hnp",
    "check_rightmult_equivalence",
    "check_permutation_invariance",
    "check_hom_lie",
    "check_hom_poisson",
    "check_weak_morphism",
    "check_morphism",
    "check_derivation",
    "check_left_hom_associative",
]


class PreconditionError(ValueError):
    """A checker was called outside its domain."""


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one identity, with the first failing witness if any."""

    passed: bool
    identity: Identity
    witness: Witness | None = None
    triples_checked: int = 0
    parts: tuple["CheckReport", ...] = field(default=())

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it has no witness")

    def __bool__(self) -> bool:
        return self.passed

    @property
    def identity_id(self) -> str:
        return self.identity.value

    def part(self, identity: Identity) -> "CheckReport":
        """The sub-report for ``identity``, searching nested parts depth-first."""
        for p in self.parts:
            if p.identity is identity:
                return p
            try:
                return p.part(identity)
            except KeyError:
                pass
        raise KeyError(identity)

    def failed_parts(self) -> list[Identity]:
        return [p.identity for p in self.parts if not p.passed]

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity.value,
            "passed": self.passed,
            "triples_checked": self.triples_checked,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out

    def describe(self, basis_names=None, indent: str = "") -> str:
        head = "PASS" if self.passed else "FAIL"
        lines = [f"{indent}{head} {self.identity.value} ({self.triples_checked} checked)"]
        if self.parts:
            for p in self.parts:
                lines.append(p.describe(basis_names, indent + "  "))
        elif self.witness is not None:
            lines.append(f"{indent}  {self.witness.describe(basis_names)}")
        return "\n".join(lines)


def _compare(identity: Identity, lhs, rhs, count: int) -> CheckReport:
    where = first_difference(lhs, rhs)
    if where is None:
        return CheckReport(True, identity, None, count)
    w = Witness(identity, where, value_at(lhs, where), value_at(rhs, where))
    return CheckReport(False, identity, w, count)


def _combine(identity: Identity, parts) -> CheckReport:
    parts = tuple(parts)
    witness = next((p.witness for p in parts if not p.passed), None)
    return CheckReport(
        witness is None, identity, witness, sum(p.triples_checked for p in parts), parts
    )


# -- binary identities -------------------------------------------------------


def check_commutative(op: BilinearOp) -> CheckReport:
    """``mu(e_i, e_j) = mu(e_j, e_i)`` for all ``i, j``."""
    return _compare(Identity.COMMUTATIVE, op, opposite_op(op), op.dim**2)


def _preserves(f: LinearMap, op_a: BilinearOp, op_b: BilinearOp, identity: Identity) -> CheckReport:
    # f(x *_A y) = f(x) *_B f(y)
    return _compare(
        identity, bilinear_postcompose(f, op_a), bilinear_precompose(op_b, f, f), op_a.dim**2
    )


def check_multiplicative(A: DoubleHomAlgebra) -> CheckReport:
    """``alpha`` is an endomorphism of both products."""
    return _combine(
        Identity.MULTIPLICATIVE,
        [
            _preserves(A.alpha, A.dot, A.dot, Identity.MULTIPLICATIVE_DOT),
            _preserves(A.alpha, A.star, A.star, Identity.MULTIPLICATIVE_STAR),
        ],
    )


def check_derivation(d: LinearMap, mu: BilinearOp) -> CheckReport:
    """``d(xy) = d(x)y + x d(y)`` on all basis pairs."""
    if d.dim != mu.dim:
        raise DimensionMismatch(f"map on dim {d.dim}, product on dim {mu.dim}")
    one = identity_map(d.dim)
    rhs = bilinear_precompose(mu, d, one) + bilinear_precompose(mu, one, d)
    return _compare(Identity.DERIVATION, bilinear_postcompose(d, mu), rhs, d.dim**2)


def check_weak_morphism(f: LinearMap, A: DoubleHomAlgebra, B: DoubleHomAlgebra) -> CheckReport:
    """``f`` carries both products of ``A`` to those of ``B``."""
    if not f.dim == A.dim == B.dim:
        raise DimensionMismatch(f"map on dim {f.dim} between dims {A.dim} and {B.dim}")
    return _combine(
        Identity.WEAK_MORPHISM,
        [
            _preserves(f, A.dot, B.dot, Identity.WEAK_MORPHISM_DOT),
            _preserves(f, A.star, B.star, Identity.WEAK_MORPHISM_STAR),
        ],
    )


def check_morphism(f: LinearMap, A: DoubleHomAlgebra, B: DoubleHomAlgebra) -> CheckReport:
    """A weak morphism with ``f alpha_A = alpha_B f``."""
    weak = check_weak_morphism(f, A, B)
    commutes = _compare(Identity.TWIST_INTERTWINING, f @ A.alpha, B.alpha @ f, f.dim)
    return _combine(Identity.MORPHISM, list(weak.parts) + [commutes])


# -- ternary identities ------------------------------------------------------


def _zero_like(form: TrilinearForm) -> TrilinearForm:
    return TrilinearForm.zero(form.dim)


def check_hom_associative(A: HomAlgebra) -> CheckReport:
    """``(xy)alpha(z) = alpha(x)(yz)`` on all basis triples."""
    lhs = nest_left(A.mu, A.mu, A.alpha)
    rhs = nest_right(A.mu, A.mu, A.alpha)
    return _compare(Identity.HOM_ASSOCIATIVE, lhs, rhs, A.dim**3)


def check_commutative_hom_associative(A: HomAlgebra) -> CheckReport:
    return _combine(
        Identity.COMMUTATIVE_HOM_ASSOCIATIVE, [check_commutative(A.mu), check_hom_associative(A)]
    )


def check_hom_novikov(A: HomAlgebra) -> CheckReport:
    """Left-symmetric Hom-associator and ``(xy)alpha(z) = (xz)alpha(y)``."""
    left = nest_left(A.mu, A.mu, A.alpha)
    assoc = left - nest_right(A.mu, A.mu, A.alpha)
    n3 = A.dim**3
    return _combine(
        Identity.HOM_NOVIKOV,
        [
            _compare(Identity.LEFT_SYMMETRIC, assoc, assoc.permuted((1, 0, 2)), n3),
            _compare(Identity.RIGHT_COMMUTING, left, left.permuted((0, 2, 1)), n3),
        ],
    )


def check_hnp(A: DoubleHomAlgebra) -> CheckReport:
    """All four axioms of a Hom-Novikov-Poisson algebra, each reported separately."""
    n3 = A.dim**3
    mixed = nest_left(A.star, A.dot, A.alpha) - nest_right(A.star, A.dot, A.alpha)
    dot_star = nest_left(A.dot, A.star, A.alpha)  # (x.y)*alpha(z)
    star_dot = nest_left(A.star, A.dot, A.alpha).permuted((0, 2, 1))  # (x*z).alpha(y)
    return _combine(
        Identity.HNP,
        [
            check_commutative_hom_associative(A.dot_algebra()),
            check_hom_novikov(A.star_algebra()),
            _compare(Identity.MIXED_LEFT_SYMMETRIC, mixed, mixed.permuted((1, 0, 2)), n3),
            _compare(Identity.MIXED_RIGHT_COMMUTING, dot_star, star_dot, n3),
        ],
    )


def check_rightmult_equivalence(A: DoubleHomAlgebra) -> CheckReport:
    """Compare the two forms of the mixed right-commuting identity.

    With a commutative dot, ``(x.y)*alpha(z) = (x*z).alpha(y)`` holds for all
    triples exactly when ``(x.y)*alpha(z) = alpha(x).(y*z)`` does.  The report
    passes when the two sweeps agree in verdict; when both hold the three
    expressions coincide on every triple.
    """
    if not check_commutative(A.dot):
        raise PreconditionError("the dot product is not commutative")
    n3 = A.dim**3
    dot_star = nest_left(A.dot, A.star, A.alpha)
    first = _compare(
        Identity.MIXED_RIGHT_COMMUTING, dot_star, nest_left(A.star, A.dot, A.alpha).permuted((0, 2, 1)), n3
    )
    second = _compare(
        Identity.MIXED_RIGHT_COMMUTING_ALT, dot_star, nest_right(A.dot, A.star, A.alpha), n3
    )
    parts = (first, second)
    if first.passed == second.passed:
        return CheckReport(True, Identity.RIGHTMULT_EQUIVALENCE, None, 2 * n3, parts)
    bad = first if not first.passed else second
    return CheckReport(False, Identity.RIGHTMULT_EQUIVALENCE, bad.witness, 2 * n3, parts)


def check_permutation_invariance(A: HomAlgebra) -> CheckReport:
    """``(xy)alpha(z)`` is unchanged by every permutation of ``(x, y, z)``."""
    form = nest_left(A.mu, A.mu, A.alpha)
    n3 = A.dim**3
    parts = [
        _compare(Identity.PERMUTATION_INVARIANT, form, form.permuted(p), n3)
        for p in permutations(range(3))
        if p != (0, 1, 2)
    ]
    return _combine(Identity.PERMUTATION_INVARIANT, parts)


def _hom_jacobi(A: HomAlgebra) -> CheckReport:
    inner = nest_left(A.mu, A.mu, A.alpha)  # [[x,y],alpha(z)]
    total = inner + inner.permuted((2, 0, 1)) + inner.permuted((1, 2, 0))
    return _compare(Identity.HOM_JACOBI, total, _zero_like(total), A.dim**3)


def check_hom_lie(A: HomAlgebra) -> CheckReport:
    """Anti-symmetry on basis pairs and the Hom-Jacobi identity on basis triples."""
    anti = _compare(Identity.ANTISYMMETRIC, A.mu, -opposite_op(A.mu), A.dim**2)
    return _combine(Identity.HOM_LIE, [anti, _hom_jacobi(A)])


def check_hom_poisson(A: DoubleHomAlgebra) -> CheckReport:
    """``(A, dot, alpha)`` commutative Hom-associative, ``(A, star, alpha)`` Hom-Lie, plus Hom-Leibniz.

    Here ``star`` plays the bracket.
    """
    lhs = nest_right(A.star, A.dot, A.alpha)  # [alpha(x), y.z]
    rhs = nest_left(A.star, A.dot, A.alpha) + nest_right(A.dot, A.star, A.alpha).permuted((1, 0, 2))
    return _combine(
        Identity.HOM_POISSON,
        [
            check_commutative_hom_associative(A.dot_algebra()),
            check_hom_lie(A.star_algebra()),
            _compare(Identity.HOM_LEIBNIZ, lhs, rhs, A.dim**3),
        ],
    )


def check_left_hom_associative(A: DoubleHomAlgebra) -> CheckReport:
    """``(x.y)*alpha(z) = alpha(x)*(y.z)`` on all basis triples."""
    lhs = nest_left(A.dot, A.star, A.alpha)
    rhs = nest_right(A.star, A.dot, A.alpha)
    return _compare(Identity.LEFT_HOM_ASSOCIATIVE, lhs, rhs, A.dim**3)
