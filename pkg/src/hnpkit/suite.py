"""Seeded verification of the structure theorems over generated algebras.

The population at level 0 is the fixture catalog.  Level ``k + 1`` holds the
algebras obtained from level ``k`` by twisting, derived twists and
perturbations.  ``depth`` levels are swept; each theorem is checked on every
algebra it applies to and every check counts as one instance.  Tensor
products are formed from the small tensor sub-catalog only, to keep
dimensions bounded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .checks import (
    CheckReport,
    check_hnp,
    check_hom_lie,
    check_hom_novikov,
    check_hom_poisson,
    check_morphism,
    check_multiplicative,
    check_permutation_invariance,
    check_rightmult_equivalence,
)
from . import constructions as _c
from .constructions import HypothesisError, as_double, commutator_minus, fixed_points, tensor_product
from .core import DoubleHomAlgebra, HomAlgebra, Witness, commutator_op, left_hom_associator_form
from .fixtures import catalog_entries, tensor_subcatalog, weak_morphism_menu
from .linalg import (
    BilinearOp,
    LinearMap,
    Vector,
    _ints,
    bilinear_tensor,
    identity_map,
    linmap_tensor,
    zero_map,
    zero_vector,
)

__all__ = ["Member", "Failure", "SuiteResult", "run_suite", "populations", "corrupt"]

MAX_LEVEL_SIZE = 400


@dataclass(frozen=True)
class Member:
    """An algebra in the population, its provenance and its known weak morphisms."""

    algebra: DoubleHomAlgebra
    origin: str
    menu: tuple[tuple[str, LinearMap], ...]
    level: int


@dataclass
class Failure:
    theorem: str
    origin: str
    algebra: DoubleHomAlgebra
    detail: str
    witness: Witness | None = None


@dataclass
class SuiteResult:
    seed: int
    depth: int
    counts: Counter = field(default_factory=Counter)
    failures: list[Failure] = field(default_factory=list)
    population_sizes: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def minimal_failure(self) -> Failure | None:
        if not self.failures:
            return None
        return min(self.failures, key=lambda f: f.algebra.dim)

    def summary(self) -> str:
        width = max((len(k) for k in self.counts), default=0)
        lines = [f"seed {self.seed}, depth {self.depth}, population per level {self.population_sizes}"]
        for name in sorted(self.counts):
            bad = sum(1 for f in self.failures if f.theorem == name)
            lines.append(f"  {name:<{width}}  {self.counts[name]:5d} instances  {bad} failed")
        verdict = "all passed" if self.passed else f"{len(self.failures)} FAILED"
        lines.append(f"{self.total} theorem instances, {verdict}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "depth": self.depth,
            "passed": self.passed,
            "total": self.total,
            "counts": dict(sorted(self.counts.items())),
            "population_sizes": self.population_sizes,
            "failures": [
                {
                    "theorem": f.theorem,
                    "origin": f.origin,
                    "detail": f.detail,
                    "witness": None if f.witness is None else f.witness.to_dict(),
                }
                for f in self.failures
            ],
        }


@lru_cache(maxsize=4096)
def _hnp(A: DoubleHomAlgebra) -> CheckReport:
    return check_hnp(A)


@lru_cache(maxsize=4096)
def _mult(A: DoubleHomAlgebra) -> CheckReport:
    return check_multiplicative(A)


# Constructions recur across theorems; memoize them for the duration of a run.
# Failures are raised afresh each time, since lru_cache does not store exceptions.
yau_twist = lru_cache(maxsize=None)(_c.yau_twist)
nth_twist = lru_cache(maxsize=None)(_c.nth_twist)
perturb_diamond = lru_cache(maxsize=None)(_c.perturb_diamond)
perturb_times = lru_cache(maxsize=None)(_c.perturb_times)
perturb_combined = lru_cache(maxsize=None)(_c.perturb_combined)
is_admissible = lru_cache(maxsize=None)(_c.is_admissible)
_CACHES = (_hnp, _mult, yau_twist, nth_twist, perturb_diamond, perturb_times, perturb_combined, is_admissible)


def _perturbation_elements(alpha: LinearMap, power: int) -> list[Vector]:
    """Zero, the first fixed basis vector and the sum of the fixed basis."""
    basis = fixed_points(alpha, power)
    out = [zero_vector(alpha.dim)]
    if basis:
        out.append(basis[0])
        total = basis[0]
        for v in basis[1:]:
            total = total + v
        if len(basis) > 1:
            out.append(total)
    return out


def _generic_menu(A: DoubleHomAlgebra) -> tuple[tuple[str, LinearMap], ...]:
    menu = [("Id", identity_map(A.dim)), ("Zero", zero_map(A.dim))]
    if _mult(A):
        menu += [("alpha", A.alpha), ("alpha^2", A.alpha @ A.alpha)]
    return tuple(menu)


def corrupt(A: DoubleHomAlgebra) -> DoubleHomAlgebra:
    """``A`` with one star structure constant bumped by one (a negative control)."""
    bump = _ints((A.dim,) * 3)
    bump[0, 0, 0] = 1
    return DoubleHomAlgebra(A.dot, A.star + BilinearOp._wrap(bump), A.alpha, A.label + "+fault")


def _children(m: Member) -> list[tuple[str, DoubleHomAlgebra]]:
    A = m.algebra
    if not _hnp(A):
        return []
    out = [(f"twist[{name}]", yau_twist(A, beta)) for name, beta in m.menu if name != "Id"]
    if _mult(A):
        out.append(("ntwist[1]", nth_twist(A, 1)))
        a = _perturbation_elements(A.alpha, 2)[-1]
        out.append(("diamond", perturb_diamond(A, a)))
        out.append(("times", perturb_times(A, a)))
    return out


def populations(seed: int, depth: int, fault: bool = False) -> list[list[Member]]:
    """Levels ``0 .. depth-1`` of the population, de-duplicated across levels."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    level0 = []
    for i, e in enumerate(catalog_entries(seed, verify=not fault)):
        A = e.algebra
        if fault and i == 0:
            A = corrupt(A)
        menu = tuple(weak_morphism_menu(e)) if not (fault and i == 0) else _generic_menu(A)
        level0.append(Member(A, e.descriptor.label(), menu, 0))
    levels = [level0]
    seen = {m.algebra for m in level0}
    while len(levels) < depth:
        nxt = []
        for m in levels[-1]:
            for how, B in _children(m):
                if B in seen or len(nxt) >= MAX_LEVEL_SIZE:
                    continue
                seen.add(B)
                nxt.append(Member(B.relabel(f"{m.origin}/{how}"), f"{m.origin}/{how}", _generic_menu(B), len(levels)))
        levels.append(nxt)
    return levels


class _Runner:
    def __init__(self, result: SuiteResult):
        self.result = result

    def record(self, theorem: str, member_origin: str, A: DoubleHomAlgebra, outcome) -> None:
        """``outcome`` is a report, a bool, or a ``(bool, detail)`` pair."""
        self.result.counts[theorem] += 1
        witness, detail = None, ""
        if isinstance(outcome, CheckReport):
            ok, witness = outcome.passed, outcome.witness
            detail = "" if ok else outcome.describe()
        elif isinstance(outcome, tuple):
            ok, detail = outcome
        else:
            ok = bool(outcome)
        if not ok:
            self.result.failures.append(Failure(theorem, member_origin, A, detail or theorem, witness))

    def run(self, theorem: str, origin: str, A: DoubleHomAlgebra, fn) -> None:
        try:
            outcome = fn()
        except HypothesisError as exc:
            outcome = (False, f"construction refused: {exc}")
        self.record(theorem, origin, A, outcome)


def _left_associator_twisted(A: DoubleHomAlgebra, beta: LinearMap) -> tuple[bool, str]:
    lhs = left_hom_associator_form(yau_twist(A, beta))
    rhs = left_hom_associator_form(A).postcompose(beta @ beta)
    return lhs == rhs, "left associator of the twist is not beta^2 of the original"


def _single_algebra_theorems(run: _Runner, m: Member) -> None:
    A, o = m.algebra, m.origin
    hnp = _hnp(A)
    run.record("hnp", o, A, hnp)
    if not hnp:
        return
    mult = bool(_mult(A))
    run.run("homass-double", o, A, lambda: check_hnp(as_double(HomAlgebra(A.dot, A.alpha))))
    run.run("rightmult-lemma", o, A, lambda: _rightmult_three_way(A))
    run.run("permutation-invariance", o, A, lambda: check_permutation_invariance(HomAlgebra(A.dot, A.alpha)))
    minus = commutator_minus(A)
    run.run("commutator-hom-lie", o, A, lambda: check_hom_lie(HomAlgebra(minus.star, A.alpha)))
    admissible = is_admissible(A).passed
    run.record(
        "admissible-iff-hom-poisson",
        o,
        A,
        (admissible == check_hom_poisson(minus).passed, "admissibility and Hom-Poisson verdicts differ"),
    )

    for name, beta in m.menu:
        run.run("twist-hnp", o, A, lambda: check_hnp(yau_twist(A, beta)))
        if mult and check_morphism(beta, A, A):
            run.run("twist-multiplicative", o, A, lambda: check_multiplicative(yau_twist(A, beta)))
        run.run("twist-left-associator", o, A, lambda: _left_associator_twisted(A, beta))
        if admissible:
            run.run("twist-admissible", o, A, lambda: is_admissible(yau_twist(A, beta)))

    if not mult:
        return
    for n in (1, 2):
        run.run("ntwist-hnp", o, A, lambda: check_hnp(nth_twist(A, n)))
        run.run("ntwist-multiplicative", o, A, lambda: check_multiplicative(nth_twist(A, n)))
        if admissible:
            run.run("ntwist-admissible", o, A, lambda: is_admissible(nth_twist(A, n)))

    a_menu = _perturbation_elements(A.alpha, 2)
    b_menu = _perturbation_elements(A.alpha, 4)
    for a in a_menu:
        run.run("diamond-hnp", o, A, lambda: check_hnp(perturb_diamond(A, a)))
        run.run("diamond-multiplicative", o, A, lambda: check_multiplicative(perturb_diamond(A, a)))
        run.run("times-hnp", o, A, lambda: check_hnp(perturb_times(A, a)))
        run.run("times-multiplicative", o, A, lambda: check_multiplicative(perturb_times(A, a)))
        run.run("times-hom-novikov", o, A, lambda: check_hom_novikov(perturb_times(A, a).star_algebra()))
        if admissible:
            run.run("diamond-admissible", o, A, lambda: is_admissible(perturb_diamond(A, a)))
        for b in b_menu:
            run.run("combined-hnp", o, A, lambda: check_hnp(perturb_combined(A, a, b)))
            run.run(
                "combined-is-iterated",
                o,
                A,
                lambda: (
                    perturb_combined(A, a, b) == perturb_diamond(perturb_times(A, a), b),
                    "combined perturbation differs from the iterated one",
                ),
            )


def _rightmult_three_way(A: DoubleHomAlgebra) -> tuple[bool, str]:
    rep = check_rightmult_equivalence(A)
    ok = rep.passed and all(p.passed for p in rep.parts)
    return ok, "" if ok else rep.describe()


def _tensor_theorems(run: _Runner) -> None:
    sub = tensor_subcatalog()
    for e1 in sub:
        for e2 in sub:
            A, B = e1.algebra, e2.algebra
            o = f"{e1.descriptor.label()} (x) {e2.descriptor.label()}"
            T = tensor_product(A, B)
            run.record("tensor-hnp", o, T, _hnp(T))
            if _mult(A) and _mult(B):
                run.record("tensor-multiplicative", o, T, _mult(T))
                for n in (1, 2):
                    run.run(
                        "tensor-ntwist-commutes",
                        o,
                        T,
                        lambda: (
                            nth_twist(T, n) == tensor_product(nth_twist(A, n), nth_twist(B, n)),
                            "derived twist does not commute with the tensor product",
                        ),
                    )
            for (n1, b1), (n2, b2) in _beta_pairs(e1, e2):
                run.run(
                    "tensor-twist-commutes",
                    o,
                    T,
                    lambda: (
                        yau_twist(T, linmap_tensor(b1, b2)) == tensor_product(yau_twist(A, b1), yau_twist(B, b2)),
                        f"twist by {n1} (x) {n2} does not commute with the tensor product",
                    ),
                )
            run.record("tensor-bracket", o, T, (_tensor_bracket_ok(A, B, T), "tensor bracket formula fails"))
            if is_admissible(A) and is_admissible(B):
                run.run("tensor-admissible", o, T, lambda: is_admissible(T))


def _beta_pairs(e1, e2):
    m1 = [x for x in weak_morphism_menu(e1) if x[0] in ("Id", "alpha")]
    m2 = [x for x in weak_morphism_menu(e2) if x[0] in ("Id", "alpha")]
    return [(x, y) for x in m1 for y in m2]


def _tensor_bracket_ok(A, B, T) -> bool:
    formula = bilinear_tensor(commutator_op(A.star), B.dot) + bilinear_tensor(A.dot, commutator_op(B.star))
    return commutator_op(T.star) == formula


def run_suite(seed: int = 0, depth: int = 2, fault: bool = False) -> SuiteResult:
    """Check every theorem instance over ``depth`` population levels.

    With ``fault`` the first catalog member gets a corrupted structure constant,
    which must make the run fail.
    """
    result = SuiteResult(seed, depth)
    levels = populations(seed, depth, fault)
    result.population_sizes = [len(level) for level in levels]
    runner = _Runner(result)
    for level in levels:
        for m in level:
            _single_algebra_theorems(runner, m)
    _tensor_theorems(runner)
    for cache in _CACHES:
        cache.cache_clear()
    return result
