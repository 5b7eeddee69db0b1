"""Exact rational vectors, linear maps and bilinear maps.

Scalars are :class:`fractions.Fraction`.  Arrays are stored as a numpy object
array of Python integers (the numerators) together with one positive common
denominator, always in lowest terms.  Contractions then run on plain integers,
which is roughly two orders of magnitude faster than contracting arrays of
``Fraction`` objects, and equality of two arrays is equality of their
canonical ``(numerators, denominator)`` pairs.

Conventions
-----------
* ``LinearMap.entries[k, j]`` is the coefficient of ``e_k`` in ``f(e_j)``, so
  column ``j`` is the image of the ``j``-th basis vector.
* ``BilinearOp.c[i, j, k]`` is the coefficient of ``e_k`` in ``mu(e_i, e_j)``.
* Tensor products use the lexicographic basis ``e_i (x) e_j -> i * n + j``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction

__all__ = [
    "Rational",
    "DimensionMismatch",
    "Vector",
    "LinearMap",
    "BilinearOp",
    "to_rational",
    "identity_map",
    "zero_map",
    "zero_op",
    "basis_vector",
    "zero_vector",
    "linmap_compose",
    "linmap_pow",
    "linmap_tensor",
    "linmap_apply",
    "bilinear_eval",
    "bilinear_postcompose",
    "bilinear_precompose",
    "bilinear_tensor",
    "left_multiplication",
    "kernel_basis",
    "fixed_subspace",
]


class DimensionMismatch(ValueError):
    """Operands live on spaces of different dimension."""


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float)) or isinstance(value, np.floating):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def _canonical(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    if den <= 0:
        raise ZeroDivisionError("denominator must be positive")
    g = math.gcd(den, *num.ravel().tolist())
    if g > 1:
        num = num // g
        den //= g
    num.flags.writeable = False
    return num, den


def _from_nested(data, ndim: int) -> tuple[np.ndarray, int]:
    arr = np.array(data, dtype=object)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    fracs = [to_rational(x) for x in arr.ravel().tolist()]
    den = math.lcm(1, *(f.denominator for f in fracs))
    num = np.array([f.numerator * (den // f.denominator) for f in fracs], dtype=object)
    return num.reshape(arr.shape), den


def _ints(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


class _Exact:
    """Shared storage for the exact array types; not used directly."""

    __slots__ = ("_num", "_den")
    _ndim = 0

    def __init__(self, data):
        num, den = _from_nested(data, self._ndim)
        self._check_shape(num.shape)
        self._num, self._den = _canonical(num, den)

    @classmethod
    def _wrap(cls, num: np.ndarray, den: int = 1):
        obj = cls.__new__(cls)
        obj._check_shape(num.shape)
        obj._num, obj._den = _canonical(np.array(num, dtype=object), den)
        return obj

    def _check_shape(self, shape) -> None:
        if len(shape) != self._ndim or len(set(shape)) > 1 or (shape and shape[0] < 1):
            raise ValueError(f"{type(self).__name__} needs a nonempty cube, got shape {shape}")

    @property
    def dim(self) -> int:
        return self._num.shape[0]

    @property
    def numerators(self) -> np.ndarray:
        """Read-only integer array; divide by :attr:`denominator` for values."""
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def to_fractions(self) -> np.ndarray:
        """A fresh object array of Fractions."""
        out = np.empty(self._num.shape, dtype=object)
        for idx, n in np.ndenumerate(self._num):
            out[idx] = Fraction(n, self._den)
        return out

    def tolist(self) -> list:
        return self.to_fractions().tolist()

    def is_zero(self) -> bool:
        return not any(self._num.ravel().tolist())

    def __getitem__(self, idx):
        val = self._num[idx]
        if isinstance(val, np.ndarray):
            return np.vectorize(lambda n: Fraction(n, self._den), otypes=[object])(val)
        return Fraction(val, self._den)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (
            self._den == other._den
            and self._num.shape == other._num.shape
            and bool(np.array_equal(self._num, other._num))
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._num.shape, self._den, tuple(self._num.ravel().tolist())))

    def _same_dim(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._same_dim(other)
        den = math.lcm(self._den, other._den)
        return self._wrap(self._num * (den // self._den) + other._num * (den // other._den), den)

    def __sub__(self, other):
        self._same_dim(other)
        den = math.lcm(self._den, other._den)
        return self._wrap(self._num * (den // self._den) - other._num * (den // other._den), den)

    def __neg__(self):
        return self._wrap(-self._num, self._den)

    def __mul__(self, scalar):
        if isinstance(scalar, _Exact):
            return NotImplemented
        s = to_rational(scalar)
        return self._wrap(self._num * s.numerator, self._den * s.denominator)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = np.array2string(
            self.to_fractions(), separator=", ", formatter={"object": lambda f: str(f)}
        )
        return f"{type(self).__name__}({body})"


class Vector(_Exact):
    """An element of ``Q^dim`` in the fixed basis."""

    __slots__ = ()
    _ndim = 1

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return (Fraction(n, self._den) for n in self._num.tolist())

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self) + ")"


class LinearMap(_Exact):
    """A square rational matrix acting on column vectors."""

    __slots__ = ()
    _ndim = 2

    def __call__(self, v: Vector) -> Vector:
        return linmap_apply(self, v)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return linmap_compose(self, other)

    def column(self, j: int) -> Vector:
        return Vector._wrap(self._num[:, j], self._den)


class BilinearOp(_Exact):
    """Structure constants of a bilinear product on ``Q^dim``."""

    __slots__ = ()
    _ndim = 3

    def __call__(self, u: Vector, v: Vector) -> Vector:
        return bilinear_eval(self, u, v)

    def product(self, i: int, j: int) -> Vector:
        """``mu(e_i, e_j)``."""
        return Vector._wrap(self._num[i, j, :], self._den)


def identity_map(dim: int) -> LinearMap:
    num = _ints((dim, dim))
    for i in range(dim):
        num[i, i] = 1
    return LinearMap._wrap(num)


def zero_map(dim: int) -> LinearMap:
    return LinearMap._wrap(_ints((dim, dim)))


def zero_op(dim: int) -> BilinearOp:
    return BilinearOp._wrap(_ints((dim, dim, dim)))


def zero_vector(dim: int) -> Vector:
    return Vector._wrap(_ints((dim,)))


def basis_vector(dim: int, i: int) -> Vector:
    num = _ints((dim,))
    num[i] = 1
    return Vector._wrap(num)


def _need_same_dim(*objs) -> int:
    dims = {o.dim for o in objs}
    if len(dims) != 1:
        raise DimensionMismatch(f"dimensions disagree: {sorted(dims)}")
    return dims.pop()


def linmap_compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """``f o g``."""
    _need_same_dim(f, g)
    return LinearMap._wrap(np.dot(f._num, g._num), f._den * g._den)


def linmap_pow(f: LinearMap, n: int) -> LinearMap:
    """The ``n``-fold composite of ``f``; ``f**0`` is the identity."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = identity_map(f.dim)
    base = f
    while n:
        if n & 1:
            result = linmap_compose(result, base)
        n >>= 1
        if n:
            base = linmap_compose(base, base)
    return result


def linmap_tensor(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product on the lexicographic tensor basis."""
    m, n = f.dim, g.dim
    num = f._num[:, None, :, None] * g._num[None, :, None, :]
    return LinearMap._wrap(num.reshape(m * n, m * n), f._den * g._den)


def linmap_apply(f: LinearMap, v: Vector) -> Vector:
    _need_same_dim(f, v)
    return Vector._wrap(np.dot(f._num, v._num), f._den * v._den)


def bilinear_eval(op: BilinearOp, u: Vector, v: Vector) -> Vector:
    """``sum_{i,j} u_i v_j mu(e_i, e_j)``."""
    _need_same_dim(op, u, v)
    partial = np.tensordot(u._num, op._num, axes=(0, 0))  # [j, k]
    return Vector._wrap(np.dot(v._num, partial), op._den * u._den * v._den)


def bilinear_postcompose(f: LinearMap, op: BilinearOp) -> BilinearOp:
    """Structure constants of ``f o mu``."""
    _need_same_dim(f, op)
    return BilinearOp._wrap(np.tensordot(op._num, f._num, axes=(2, 1)), f._den * op._den)


def bilinear_precompose(op: BilinearOp, f: LinearMap, g: LinearMap) -> BilinearOp:
    """Structure constants of ``(u, v) -> mu(f(u), g(v))``."""
    _need_same_dim(op, f, g)
    t = np.tensordot(f._num, op._num, axes=(0, 0))  # [i, b, k]
    t = np.tensordot(g._num, t, axes=(0, 1))  # [j, i, k]
    return BilinearOp._wrap(t.transpose(1, 0, 2), op._den * f._den * g._den)


def bilinear_tensor(p: BilinearOp, q: BilinearOp) -> BilinearOp:
    """``(x1 (x) x2, y1 (x) y2) -> p(x1, y1) (x) q(x2, y2)`` on the lex basis."""
    m, n = p.dim, q.dim
    num = p._num[:, None, :, None, :, None] * q._num[None, :, None, :, None, :]
    return BilinearOp._wrap(num.reshape(m * n, m * n, m * n), p._den * q._den)


def left_multiplication(op: BilinearOp, v: Vector) -> LinearMap:
    """The linear map ``y -> mu(v, y)``."""
    _need_same_dim(op, v)
    t = np.tensordot(v._num, op._num, axes=(0, 0))  # [j, k]
    return LinearMap._wrap(t.T, op._den * v._den)


def kernel_basis(f: LinearMap) -> list[Vector]:
    """A basis of ``ker f`` from the reduced row echelon form, computed exactly."""
    import sympy

    mat = sympy.Matrix(f._num.tolist())
    out = []
    for col in mat.nullspace():
        entries = [Fraction(int(x.p), int(x.q)) for x in col]
        out.append(Vector(entries))
    return out


def fixed_subspace(f: LinearMap, power: int = 1) -> list[Vector]:
    """Basis of ``{v : f^power(v) = v}``, i.e. ``ker(f^power - Id)``."""
    return kernel_basis(linmap_pow(f, power) - identity_map(f.dim))


def as_vector(v: Vector | Sequence, dim: int | None = None) -> Vector:
    if not isinstance(v, Vector):
        v = Vector(list(v))
    if dim is not None and v.dim != dim:
        raise DimensionMismatch(f"vector of length {v.dim} in dimension {dim}")
    return v


def combination(vectors: Iterable[Vector], coeffs: Iterable) -> Vector:
    vectors = list(vectors)
    total = zero_vector(vectors[0].dim)
    for v, c in zip(vectors, coeffs):
        total = total + v * c
    return total
