"""Concrete algebras for examples and tests.

Everything here is deterministic: a :class:`FixtureDescriptor` (family name,
parameters and seed) always builds the same structure constants.  Random
members are produced only through constructions whose output is guaranteed
to be Hom-Novikov-Poisson, never by sampling raw structure constants, and every
catalog member is checked when it is emitted.

Truncated polynomial algebras ``k[x]/(x^N)`` use the basis ``1, x, ..., x^(N-1)``.
Note that ``d/dx`` is *not* a derivation of the truncation (it fails the
Leibniz rule on ``x * x^(N-1)``), so the derivations used to build algebras are
the monomial ones ``x -> c x^k`` with ``k >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .checks import check_hnp, check_multiplicative, check_weak_morphism
from .constructions import exp_nilpotent, from_derivation
from .core import DoubleHomAlgebra
from .linalg import (
    BilinearOp,
    LinearMap,
    _ints,
    bilinear_postcompose,
    bilinear_precompose,
    identity_map,
    linmap_pow,
    zero_map,
    zero_op,
)

__all__ = [
    "FAMILIES",
    "FixtureDescriptor",
    "CatalogEntry",
    "truncated_product",
    "truncated_poly",
    "poly_names",
    "monomial_derivation",
    "monomial_derivations",
    "scaling_map",
    "exp_shift_product",
    "three_dim_admissible",
    "cube_zero",
    "unit_line",
    "build_fixture",
    "catalog_entries",
    "fixture_catalog",
    "weak_morphism_menu",
    "tensor_subcatalog",
]

FAMILIES = (
    "truncated_poly",
    "derivation_twist",
    "hom_double",
    "zero_star",
    "three_dim_admissible",
    "cube_zero",
    "unit_line",
    "random_from_family",
)

DERIVATION_SCALARS = (1, -1, 2)


# -- building blocks ---------------------------------------------------------


def _check_n(N: int) -> None:
    if int(N) != N or N < 2:
        raise ValueError(f"truncation degree must be an integer >= 2, got {N}")


def poly_names(N: int) -> list[str]:
    return ["1", "x"] + [f"x^{m}" for m in range(2, N)]


def truncated_product(N: int) -> BilinearOp:
    """Multiplication of ``k[x]/(x^N)``."""
    _check_n(N)
    c = _ints((N, N, N))
    for i in range(N):
        for j in range(N - i):
            c[i, j, i + j] = 1
    return BilinearOp._wrap(c)


def truncated_poly(N: int) -> tuple[BilinearOp, LinearMap]:
    """The product of ``k[x]/(x^N)`` together with the matrix of ``d/dx``.

    ``d/dx`` is nilpotent but, on the truncation, not a derivation.
    """
    _check_n(N)
    d = _ints((N, N))
    for m in range(1, N):
        d[m - 1, m] = m
    return truncated_product(N), LinearMap._wrap(d)


def monomial_derivation(N: int, k: int, c=1) -> LinearMap:
    """The derivation of ``k[x]/(x^N)`` with ``x -> c x^k``, so ``x^m -> m c x^(m-1+k)``.

    Needs ``k >= 1`` so that the ideal ``(x^N)`` is preserved.
    """
    _check_n(N)
    if k < 1:
        raise ValueError("k must be at least 1; x -> c does not preserve (x^N)")
    c = Fraction(c)
    entries = [[Fraction(0)] * N for _ in range(N)]
    for m in range(1, N):
        if m - 1 + k < N:
            entries[m - 1 + k][m] = m * c
    return LinearMap(entries)


def monomial_derivations(N: int) -> list[LinearMap]:
    """All ``x -> c x^k`` with ``1 <= k < N`` and ``c`` in ``{1, -1, 2}``."""
    return [monomial_derivation(N, k, c) for k in range(1, N) for c in DERIVATION_SCALARS]


def scaling_map(N: int, s) -> LinearMap:
    """``x^m -> s^m x^m``, an algebra endomorphism of ``k[x]/(x^N)``."""
    s = Fraction(s)
    return LinearMap([[s**m if i == m else 0 for m in range(N)] for i in range(N)])


def exp_shift_product(N: int) -> tuple[BilinearOp, LinearMap]:
    """``(f, g) -> phi(f) phi(g)`` with ``phi = exp(d/dx)``, the Taylor shift ``x -> x + 1``.

    Returns the product and ``phi``.  Because ``d/dx`` is not a derivation of
    the truncation, ``phi`` is not an automorphism and the two ways of twisting
    (before or after multiplying) differ; this is the "before" version.
    """
    mu, ddx = truncated_poly(N)
    phi = exp_nilpotent(ddx)
    return bilinear_precompose(mu, phi, phi), phi


def three_dim_admissible() -> DoubleHomAlgebra:
    """Basis ``1, u, v`` with ``1`` a unit and ``u^2 = uv = v^2 = 0``.

    ``d(v) = u`` and ``alpha`` keeps ``1`` and kills ``u, v``.  The resulting
    star product vanishes identically, so the algebra is admissible for a
    trivial reason; :func:`cube_zero` is the nontrivial example.
    """
    mu = _ints((3, 3, 3))
    for i in range(3):
        mu[0, i, i] = mu[i, 0, i] = 1
    d = _ints((3, 3))
    d[1, 2] = 1
    alpha = _ints((3, 3))
    alpha[0, 0] = 1
    return from_derivation(BilinearOp._wrap(mu), LinearMap._wrap(d), LinearMap._wrap(alpha)).relabel(
        "three_dim_admissible"
    )


def cube_zero() -> DoubleHomAlgebra:
    """Basis ``p, q, r`` with ``pq = qp = r`` the only nonzero product.

    Built from the derivation ``diag(1, 0, 1)`` and the automorphism
    ``diag(1, -1, -1)``.  All triple products vanish, so it is admissible,
    while ``alpha`` is invertible and the bracket ``[q, p] = -r`` is nonzero.
    """
    mu = _ints((3, 3, 3))
    mu[0, 1, 2] = mu[1, 0, 2] = 1
    d = LinearMap([[1, 0, 0], [0, 0, 0], [0, 0, 1]])
    alpha = LinearMap([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    return from_derivation(BilinearOp._wrap(mu), d, alpha).relabel("cube_zero")


def unit_line() -> DoubleHomAlgebra:
    """The ground field: ``1 . 1 = 1``, zero star, identity twist."""
    return DoubleHomAlgebra(BilinearOp([[[1]]]), zero_op(1), identity_map(1), "unit_line")


# -- descriptors -------------------------------------------------------------


@dataclass(frozen=True)
class FixtureDescriptor:
    """Recipe for one fixture; ``params`` values are ints or rational strings."""

    family: str
    params: tuple[tuple[str, object], ...] = ()
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown fixture family {self.family!r}")

    @classmethod
    def make(cls, family: str, seed: int = 0, **params) -> "FixtureDescriptor":
        return cls(family, tuple(sorted(params.items())), seed)

    def param(self, name: str, default=None):
        return dict(self.params).get(name, default)

    def to_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params), "seed": self.seed}

    @classmethod
    def from_dict(cls, data: dict) -> "FixtureDescriptor":
        return cls.make(data["family"], int(data.get("seed", 0)), **data.get("params", {}))

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({args})" if args else self.family


@dataclass(frozen=True)
class CatalogEntry:
    """A built fixture with its recipe and, when it has one, its derivation."""

    descriptor: FixtureDescriptor
    algebra: DoubleHomAlgebra
    derivation: LinearMap | None = None
    basis_names: tuple[str, ...] = field(default=())

    @property
    def nilpotent_derivation(self) -> bool:
        d = self.derivation
        return d is not None and linmap_pow(d, d.dim) == zero_map(d.dim)


def _twist_for(N: int, d: LinearMap, twist: str, t: Fraction, s: Fraction) -> LinearMap:
    if twist == "id":
        return identity_map(N)
    if twist == "exp":
        return exp_nilpotent(d * t)
    if twist == "scale":
        return scaling_map(N, s)
    raise ValueError(f"unknown twist {twist!r}")


def _build_entry(desc: FixtureDescriptor) -> CatalogEntry:
    fam, p = desc.family, desc.param
    if fam == "unit_line":
        return CatalogEntry(desc, unit_line(), None, ("1",))
    if fam == "three_dim_admissible":
        return CatalogEntry(desc, three_dim_admissible(), None, ("1", "u", "v"))
    if fam == "cube_zero":
        return CatalogEntry(desc, cube_zero(), None, ("p", "q", "r"))
    if fam == "random_from_family":
        return _build_entry(_random_descriptor(desc.seed, int(p("index", 0))))

    N = int(p("N"))
    names = tuple(poly_names(N))
    mu = truncated_product(N)
    if fam == "truncated_poly":
        A = DoubleHomAlgebra(mu, mu, identity_map(N))
        return CatalogEntry(desc, A.relabel(desc.label()), None, names)

    k, c = int(p("k", 2)), Fraction(p("c", 1))
    d = monomial_derivation(N, k, c)
    alpha = _twist_for(N, d, p("twist", "id"), Fraction(p("t", 1)), Fraction(p("s", 1)))
    if fam == "derivation_twist":
        A = from_derivation(mu, d, alpha)
        return CatalogEntry(desc, A.relabel(desc.label()), d, names)
    if fam == "hom_double":
        dot = bilinear_postcompose(alpha, mu)
        return CatalogEntry(desc, DoubleHomAlgebra(dot, dot, alpha, desc.label()), None, names)
    if fam == "zero_star":
        A = from_derivation(mu, zero_map(N), alpha)
        return CatalogEntry(desc, A.relabel(desc.label()), None, names)
    raise ValueError(f"family {fam!r} needs no N")  # pragma: no cover


def _random_descriptor(seed: int, index: int) -> FixtureDescriptor:
    rng = np.random.default_rng([seed, index])

    def rational():
        num = int(rng.integers(1, 6)) * int(rng.choice([-1, 1]))
        return str(Fraction(num, int(rng.integers(1, 5))))

    N = int(rng.integers(3, 5))
    if rng.random() < 0.3:
        return FixtureDescriptor.make(
            "derivation_twist", seed, N=N, k=1, c=rational(), twist="scale", s=rational()
        )
    k = int(rng.integers(2, N))
    return FixtureDescriptor.make(
        "derivation_twist", seed, N=N, k=k, c=rational(), twist="exp", t=rational()
    )


def build_fixture(desc: FixtureDescriptor) -> DoubleHomAlgebra:
    """The algebra a descriptor names; identical descriptors give identical algebras."""
    return _build_entry(desc).algebra


# -- catalog -----------------------------------------------------------------

RANDOM_MEMBERS = 6


def _descriptors(seed: int) -> list[FixtureDescriptor]:
    out = []
    for N in (2, 3, 4):
        for k in range(1, N):
            for c in DERIVATION_SCALARS:
                out.append(FixtureDescriptor.make("derivation_twist", N=N, k=k, c=str(c), twist="id"))
                if k >= 2:
                    out.append(FixtureDescriptor.make("derivation_twist", N=N, k=k, c=str(c), twist="exp"))
        out.append(FixtureDescriptor.make("truncated_poly", N=N))
    for N in (3, 4):
        out.append(FixtureDescriptor.make("hom_double", N=N, k=2, c="1", twist="exp"))
        out.append(FixtureDescriptor.make("zero_star", N=N, twist="id"))
        out.append(FixtureDescriptor.make("zero_star", N=N, k=2, c="1", twist="exp"))
    out.append(FixtureDescriptor.make("zero_star", N=2, twist="id"))
    for fam in ("three_dim_admissible", "cube_zero", "unit_line"):
        out.append(FixtureDescriptor.make(fam))
    for i in range(RANDOM_MEMBERS):
        out.append(FixtureDescriptor.make("random_from_family", seed, index=i))
    return out


def catalog_entries(seed: int = 0, verify: bool = True) -> list[CatalogEntry]:
    """Every catalog member with its recipe; each is checked to be HNP when ``verify``."""
    entries = []
    for desc in _descriptors(seed):
        entry = _build_entry(desc)
        if entry.descriptor != desc:  # random members resolve to a concrete recipe
            entry = CatalogEntry(
                desc, entry.algebra.relabel(desc.label()), entry.derivation, entry.basis_names
            )
        if verify:
            report = check_hnp(entry.algebra)
            if not report:
                raise RuntimeError(f"catalog member {desc.label()} is not HNP:\n{report.describe()}")
        entries.append(entry)
    return entries


def fixture_catalog(seed: int = 0) -> list[DoubleHomAlgebra]:
    """The catalog algebras in a fixed order."""
    return [e.algebra for e in catalog_entries(seed)]


def weak_morphism_menu(entry: CatalogEntry) -> list[tuple[str, LinearMap]]:
    """Named weak morphisms of a catalog member, each verified on emission.

    ``Id`` and ``Zero`` always; ``alpha`` and ``alpha^2`` when the member is
    multiplicative; ``exp(t d)`` for ``t`` in ``{1, -1/2}`` when it was built
    from a nilpotent derivation ``d``.
    """
    A = entry.algebra
    menu = [("Id", identity_map(A.dim)), ("Zero", zero_map(A.dim))]
    if check_multiplicative(A):
        menu += [("alpha", A.alpha), ("alpha^2", A.alpha @ A.alpha)]
    if entry.nilpotent_derivation:
        for t in (Fraction(1), Fraction(-1, 2)):
            menu.append((f"exp({t}d)", exp_nilpotent(entry.derivation * t)))
    for name, f in menu:
        if not check_weak_morphism(f, A, A):
            raise RuntimeError(f"{name} is not a weak morphism of {entry.descriptor.label()}")
    return menu


def tensor_subcatalog() -> list[CatalogEntry]:
    """Four small members whose pairwise tensor products stay at dimension <= 9."""
    descs = [
        FixtureDescriptor.make("unit_line"),
        FixtureDescriptor.make("derivation_twist", N=3, k=2, c="1", twist="exp"),
        FixtureDescriptor.make("three_dim_admissible"),
        FixtureDescriptor.make("cube_zero"),
    ]
    return [_build_entry(d) for d in descs]
